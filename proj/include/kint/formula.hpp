#pragma once

// CNF data model shared by every other module: formulas, assignments,
// incidence bigraphs and orderings over variables and clauses.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kint/error.hpp"

namespace kint {

using VarId = int;     // 1-based
using ClauseId = int;  // 1-based
using Weight = std::uint64_t;

struct Literal {
  VarId var = 0;
  bool negated = false;

  static Literal from_dimacs(int lit) { return Literal{lit < 0 ? -lit : lit, lit < 0}; }
  int to_dimacs() const { return negated ? -var : var; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Clause {
  ClauseId id = 0;
  std::vector<Literal> literals;  // sorted by var, at most one literal per var
  Weight weight = 1;

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
  bool contains_var(VarId v) const;
  // Literal over v, if any.
  std::optional<Literal> literal_of(VarId v) const;
};

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int n, bool value = false) : values_(static_cast<std::size_t>(n), value) {}
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  bool value(VarId v) const { return values_.at(static_cast<std::size_t>(v - 1)); }
  void set(VarId v, bool value) { values_.at(static_cast<std::size_t>(v - 1)) = value; }
  bool satisfies(const Literal& lit) const { return value(lit.var) != lit.negated; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

class Formula {
 public:
  Formula() = default;
  Formula(int n, std::vector<Clause> clauses);

  int var_count() const { return n_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(ClauseId id) const;
  Weight total_weight() const;
  bool has_empty_clause() const;
  bool weighted() const;  // any weight other than 1

 private:
  int n_ = 0;
  std::vector<Clause> clauses_;
};

// Builds a formula from signed DIMACS-style literal lists. Duplicate literals
// are merged; a clause holding both x and -x is rejected.
Formula build_formula(int n, const std::vector<std::vector<int>>& clause_lits,
                      const std::optional<std::vector<Weight>>& weights = std::nullopt);

// Ids of the clauses with at least one literal true under the assignment.
std::vector<ClauseId> sat_set(const Formula& f, const Assignment& tau);

bool satisfies_all(const Formula& f, const Assignment& tau);
Weight satisfied_weight(const Formula& f, const Assignment& tau);

struct Bigraph {
  std::vector<ClauseId> clause_vertices;
  std::vector<VarId> var_vertices;
  std::vector<std::pair<ClauseId, VarId>> edges;  // sorted, unique
};

Bigraph incidence_bigraph(const Formula& f);

struct Element {
  enum class Kind : std::uint8_t { Var, Clause };
  Kind kind = Kind::Var;
  int id = 0;

  static Element var(VarId v) { return {Kind::Var, v}; }
  static Element clause(ClauseId c) { return {Kind::Clause, c}; }
  bool is_var() const { return kind == Kind::Var; }
  bool is_clause() const { return kind == Kind::Clause; }

  friend bool operator==(const Element&, const Element&) = default;
};

// One total order over all variables and clauses of a formula.
struct MixedOrdering {
  std::vector<Element> sequence;

  std::size_t size() const { return sequence.size(); }
  friend bool operator==(const MixedOrdering&, const MixedOrdering&) = default;
};

struct SideOrders {
  std::vector<VarId> var_order;
  std::vector<ClauseId> clause_order;

  friend bool operator==(const SideOrders&, const SideOrders&) = default;
};

// Throws OrderingMismatch unless the ordering covers exactly the formula's elements.
void validate_ordering(const Formula& f, const MixedOrdering& order);
// Throws NotAPermutation unless both side orders are permutations.
void validate_side_orders(const Formula& f, const SideOrders& orders);

SideOrders identity_orders(const Formula& f);
// Variable and clause subsequences of a mixed ordering.
SideOrders split_orders(const MixedOrdering& order);

// 0-based positions of every element of a validated ordering.
struct Positions {
  std::vector<int> var_pos;     // index v-1
  std::vector<int> clause_pos;  // index c-1

  Positions(const Formula& f, const MixedOrdering& order);
  int of_var(VarId v) const { return var_pos[static_cast<std::size_t>(v - 1)]; }
  int of_clause(ClauseId c) const { return clause_pos[static_cast<std::size_t>(c - 1)]; }
};

}  // namespace kint

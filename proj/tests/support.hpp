#pragma once

// Shared fixtures for the test binaries: seeded random formulas and
// orderings, and slow direct-definition checks used as cross-references.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "kint/formula.hpp"

namespace kint::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return between(0, 1) == 1; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(between(0, static_cast<int>(i) - 1))]);
  }

 private:
  std::mt19937_64 gen_;
};

struct FormulaShape {
  int max_n = 6;
  int max_m = 5;
  int max_width = 3;
  int max_weight = 1;  // 1 means unweighted
  int min_n = 1;
  int min_m = 0;
};

inline Formula random_formula(Rng& rng, const FormulaShape& shape) {
  const int n = rng.between(shape.min_n, shape.max_n);
  const int m = rng.between(shape.min_m, shape.max_m);
  std::vector<std::vector<int>> lits;
  std::vector<Weight> weights;
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) vars[static_cast<std::size_t>(v - 1)] = v;
  for (int c = 0; c < m; ++c) {
    rng.shuffle(vars);
    const int w = rng.between(1, std::min(n, shape.max_width));
    std::vector<int> clause;
    for (int i = 0; i < w; ++i) clause.push_back(rng.coin() ? -vars[static_cast<std::size_t>(i)] : vars[static_cast<std::size_t>(i)]);
    lits.push_back(clause);
    weights.push_back(static_cast<Weight>(rng.between(1, shape.max_weight)));
  }
  return build_formula(n, lits, weights);
}

inline MixedOrdering random_ordering(Rng& rng, const Formula& f) {
  MixedOrdering order;
  for (VarId v = 1; v <= f.var_count(); ++v) order.sequence.push_back(Element::var(v));
  for (ClauseId c = 1; c <= f.clause_count(); ++c) order.sequence.push_back(Element::clause(c));
  rng.shuffle(order.sequence);
  return order;
}

inline SideOrders random_side_orders(Rng& rng, const Formula& f) {
  SideOrders so = identity_orders(f);
  rng.shuffle(so.var_order);
  rng.shuffle(so.clause_order);
  return so;
}

// Needed edges straight from the two conditions, one triple at a time.
inline std::vector<VarId> naive_needed(const Formula& f, const MixedOrdering& order, ClauseId c) {
  Positions pos(f, order);
  const Clause& cl = f.clause(c);
  std::vector<VarId> out;
  for (VarId x = 1; x <= f.var_count(); ++x) {
    if (cl.contains_var(x)) continue;
    bool need = false;
    for (const auto& l : cl.literals)
      if (pos.of_var(l.var) < pos.of_var(x) && pos.of_var(x) < pos.of_clause(c)) need = true;
    for (const auto& other : f.clauses())
      if (other.contains_var(x) && pos.of_clause(other.id) < pos.of_clause(c) && pos.of_clause(c) < pos.of_var(x))
        need = true;
    if (need) out.push_back(x);
  }
  return out;
}

inline int naive_width(const Formula& f, const MixedOrdering& order) {
  std::size_t k = 0;
  for (ClauseId c = 1; c <= f.clause_count(); ++c) k = std::max(k, naive_needed(f, order, c).size());
  return static_cast<int>(k);
}

// Every interleaving of the side orders, as bit patterns (1 = clause).
inline std::vector<MixedOrdering> all_interleavings(const SideOrders& so) {
  const std::size_t n = so.var_order.size(), m = so.clause_order.size();
  std::vector<int> pattern(n, 0);
  pattern.insert(pattern.end(), m, 1);
  std::vector<MixedOrdering> out;
  do {
    MixedOrdering order;
    std::size_t vi = 0, ci = 0;
    for (int p : pattern)
      order.sequence.push_back(p ? Element::clause(so.clause_order[ci++]) : Element::var(so.var_order[vi++]));
    out.push_back(std::move(order));
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return out;
}

}  // namespace kint::testing

namespace kint::testing {

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("no kint::Error thrown");
}

}  // namespace kint::testing

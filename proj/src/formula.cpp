#include "kint/formula.hpp"

#include <algorithm>
#include <string>

namespace kint {

bool Clause::contains_var(VarId v) const { return literal_of(v).has_value(); }

std::optional<Literal> Clause::literal_of(VarId v) const {
  auto it = std::lower_bound(literals.begin(), literals.end(), v,
                             [](const Literal& l, VarId x) { return l.var < x; });
  if (it != literals.end() && it->var == v) return *it;
  return std::nullopt;
}

Formula::Formula(int n, std::vector<Clause> clauses) : n_(n), clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) clauses_[i].id = static_cast<ClauseId>(i + 1);
}

const Clause& Formula::clause(ClauseId id) const {
  if (id < 1 || id > clause_count())
    throw Error(ErrorCode::UnknownClause, "clause " + std::to_string(id));
  return clauses_[static_cast<std::size_t>(id - 1)];
}

Weight Formula::total_weight() const {
  Weight total = 0;
  for (const auto& c : clauses_) total += c.weight;
  return total;
}

bool Formula::has_empty_clause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

bool Formula::weighted() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.weight != 1; });
}

Formula build_formula(int n, const std::vector<std::vector<int>>& clause_lits,
                      const std::optional<std::vector<Weight>>& weights) {
  if (weights && weights->size() != clause_lits.size())
    throw Error(ErrorCode::WeightCountMismatch, std::to_string(weights->size()) + " weights for " +
                                                    std::to_string(clause_lits.size()) + " clauses");
  std::vector<Clause> clauses;
  clauses.reserve(clause_lits.size());
  for (std::size_t i = 0; i < clause_lits.size(); ++i) {
    Clause c;
    for (int raw : clause_lits[i]) {
      if (raw == 0 || raw > n || -raw > n)
        throw Error(ErrorCode::OutOfRangeLiteral,
                    "literal " + std::to_string(raw) + " with n=" + std::to_string(n));
      c.literals.push_back(Literal::from_dimacs(raw));
    }
    std::sort(c.literals.begin(), c.literals.end());
    c.literals.erase(std::unique(c.literals.begin(), c.literals.end()), c.literals.end());
    for (std::size_t j = 1; j < c.literals.size(); ++j)
      if (c.literals[j].var == c.literals[j - 1].var)
        throw Error(ErrorCode::TautologicalClause,
                    "clause " + std::to_string(i + 1) + " contains x" +
                        std::to_string(c.literals[j].var) + " in both polarities");
    c.weight = weights ? (*weights)[i] : 1;
    clauses.push_back(std::move(c));
  }
  return Formula(n, std::move(clauses));
}

namespace {

void require_total(const Formula& f, const Assignment& tau) {
  if (tau.size() != f.var_count())
    throw Error(ErrorCode::PartialAssignment, "assignment covers " + std::to_string(tau.size()) +
                                                  " of " + std::to_string(f.var_count()) + " variables");
}

bool clause_satisfied(const Clause& c, const Assignment& tau) {
  return std::any_of(c.literals.begin(), c.literals.end(),
                     [&](const Literal& l) { return tau.satisfies(l); });
}

}  // namespace

std::vector<ClauseId> sat_set(const Formula& f, const Assignment& tau) {
  require_total(f, tau);
  std::vector<ClauseId> out;
  for (const auto& c : f.clauses())
    if (clause_satisfied(c, tau)) out.push_back(c.id);
  return out;
}

bool satisfies_all(const Formula& f, const Assignment& tau) {
  require_total(f, tau);
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [&](const Clause& c) { return clause_satisfied(c, tau); });
}

Weight satisfied_weight(const Formula& f, const Assignment& tau) {
  require_total(f, tau);
  Weight w = 0;
  for (const auto& c : f.clauses())
    if (clause_satisfied(c, tau)) w += c.weight;
  return w;
}

Bigraph incidence_bigraph(const Formula& f) {
  Bigraph g;
  for (const auto& c : f.clauses()) {
    g.clause_vertices.push_back(c.id);
    for (const auto& l : c.literals) g.edges.emplace_back(c.id, l.var);
  }
  for (VarId v = 1; v <= f.var_count(); ++v) g.var_vertices.push_back(v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

void validate_ordering(const Formula& f, const MixedOrdering& order) {
  const auto n = static_cast<std::size_t>(f.var_count());
  const auto m = static_cast<std::size_t>(f.clause_count());
  if (order.size() != n + m)
    throw Error(ErrorCode::OrderingMismatch, "ordering has " + std::to_string(order.size()) +
                                                 " elements, expected " + std::to_string(n + m));
  std::vector<char> seen_var(n, 0), seen_clause(m, 0);
  for (const auto& e : order.sequence) {
    auto& seen = e.is_var() ? seen_var : seen_clause;
    if (e.id < 1 || static_cast<std::size_t>(e.id) > seen.size() || seen[static_cast<std::size_t>(e.id - 1)])
      throw Error(ErrorCode::OrderingMismatch,
                  std::string(e.is_var() ? "x" : "c") + std::to_string(e.id) + " is unknown or repeated");
    seen[static_cast<std::size_t>(e.id - 1)] = 1;
  }
}

namespace {

void check_permutation(const std::vector<int>& perm, int size, const char* what) {
  if (static_cast<int>(perm.size()) != size)
    throw Error(ErrorCode::NotAPermutation, std::string(what) + " order has " +
                                                std::to_string(perm.size()) + " entries, expected " +
                                                std::to_string(size));
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  for (int id : perm) {
    if (id < 1 || id > size || seen[static_cast<std::size_t>(id - 1)])
      throw Error(ErrorCode::NotAPermutation,
                  std::string(what) + " order: " + std::to_string(id) + " is out of range or repeated");
    seen[static_cast<std::size_t>(id - 1)] = 1;
  }
}

}  // namespace

void validate_side_orders(const Formula& f, const SideOrders& orders) {
  check_permutation(orders.var_order, f.var_count(), "variable");
  check_permutation(orders.clause_order, f.clause_count(), "clause");
}

SideOrders identity_orders(const Formula& f) {
  SideOrders so;
  for (VarId v = 1; v <= f.var_count(); ++v) so.var_order.push_back(v);
  for (ClauseId c = 1; c <= f.clause_count(); ++c) so.clause_order.push_back(c);
  return so;
}

SideOrders split_orders(const MixedOrdering& order) {
  SideOrders so;
  for (const auto& e : order.sequence) (e.is_var() ? so.var_order : so.clause_order).push_back(e.id);
  return so;
}

Positions::Positions(const Formula& f, const MixedOrdering& order)
    : var_pos(static_cast<std::size_t>(f.var_count()), -1),
      clause_pos(static_cast<std::size_t>(f.clause_count()), -1) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& e = order.sequence[i];
    (e.is_var() ? var_pos : clause_pos)[static_cast<std::size_t>(e.id - 1)] = static_cast<int>(i);
  }
}

}  // namespace kint

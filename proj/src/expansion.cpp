#include "kint/expansion.hpp"

#include <algorithm>
#include <string>

#include "kint/ordering.hpp"

namespace kint {

std::vector<Clause> expand_clause(const Clause& c, std::vector<VarId> extras) {
  std::sort(extras.begin(), extras.end());
  extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
  for (VarId v : extras)
    if (c.contains_var(v))
      throw Error(ErrorCode::OverlapError, "x" + std::to_string(v) + " already occurs in clause " +
                                               std::to_string(c.id));
  if (extras.size() >= 31) throw Error(ErrorCode::OverlapError, "too many extra variables to expand");

  const std::size_t ell = extras.size();
  const std::size_t patterns = std::size_t{1} << ell;
  std::vector<Clause> out;
  out.reserve(patterns);
  for (std::size_t p = 0; p < patterns; ++p) {
    Clause e;
    e.id = c.id;
    e.weight = c.weight;
    e.literals = c.literals;
    for (std::size_t i = 0; i < ell; ++i) {
      bool positive = (p >> (ell - 1 - i)) & 1U;
      e.literals.push_back(Literal{extras[i], !positive});
    }
    std::sort(e.literals.begin(), e.literals.end());
    out.push_back(std::move(e));
  }
  return out;
}

Expansion expand_to_interval(const Formula& f, const MixedOrdering& order) {
  auto needed = all_edges_needed(f, order);

  Expansion result;
  result.parents.resize(static_cast<std::size_t>(f.clause_count()));
  std::vector<Clause> clauses;
  for (const auto& c : f.clauses()) {
    for (auto& e : expand_clause(c, needed[static_cast<std::size_t>(c.id - 1)])) {
      clauses.push_back(std::move(e));
      result.parents[static_cast<std::size_t>(c.id - 1)].push_back(static_cast<ClauseId>(clauses.size()));
    }
  }
  result.formula = Formula(f.var_count(), std::move(clauses));

  for (const auto& e : order.sequence) {
    if (e.is_var()) {
      result.ordering.sequence.push_back(e);
      continue;
    }
    for (ClauseId id : result.parents[static_cast<std::size_t>(e.id - 1)])
      result.ordering.sequence.push_back(Element::clause(id));
  }
  return result;
}

}  // namespace kint

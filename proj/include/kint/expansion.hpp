#pragma once

// Clause expansion: widening a clause over extra variables by all sign
// patterns keeps its model set, and widening every clause over its needed
// edges turns a k-interval ordering into an interval one.

#include <vector>

#include "kint/formula.hpp"

namespace kint {

// 2^|extras| clauses, one per sign pattern over the sorted extras. Patterns
// are enumerated lexicographically with the negated literal first and the
// smallest extra variable most significant. Each inherits c's weight.
std::vector<Clause> expand_clause(const Clause& c, std::vector<VarId> extras);

struct Expansion {
  Formula formula;
  MixedOrdering ordering;
  // parents[c-1] lists the expanded clause ids that replace original clause c.
  std::vector<std::vector<ClauseId>> parents;
};

// Expanded clause weights are copied from the parent for traceability only;
// weighted MaxSAT values are not preserved by this transform.
Expansion expand_to_interval(const Formula& f, const MixedOrdering& order);

}  // namespace kint

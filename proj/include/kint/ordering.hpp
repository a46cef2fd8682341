#pragma once

// Interval and k-interval ordering checks, plus the two side-order patterns
// that rule out an interval merge.

#include <optional>
#include <vector>

#include "kint/formula.hpp"

namespace kint {

enum class Condition {
  Cond1,  // x' in C with x' < x < C, x not in C
  Cond2,  // x in C' with C' < C < x, x not in C
};

// A missing incidence (clause lacks var) that breaks interval structure.
struct Violation {
  ClauseId clause = 0;
  VarId var = 0;
  Condition condition = Condition::Cond1;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct OrderingVerdict {
  bool ok = true;
  std::optional<Violation> violation;
};

// A violation is reported against the clause that lacks the variable, so a
// Cond1 report (C, x') means x' sits between a member of C and C, and a Cond2
// report (C', x) means C' sits between a clause containing x and x. Reports the
// violation whose clause comes first in the ordering, then the earliest variable.
OrderingVerdict verify_interval_ordering(const Formula& f, const MixedOrdering& order);

// Variables outside var(c) that must be joined to c for the ordering to be interval.
// Sorted by variable id.
std::vector<VarId> edges_needed(const Formula& f, const MixedOrdering& order, ClauseId c);

// Same as edges_needed for every clause, indexed by clause id - 1.
std::vector<std::vector<VarId>> all_edges_needed(const Formula& f, const MixedOrdering& order);

// Max over clauses of |edges_needed|.
int ordering_width_k(const Formula& f, const MixedOrdering& order);

struct Obstruction {
  enum class Kind { LeftPattern, RightPattern };
  Kind kind = Kind::LeftPattern;
  // LeftPattern uses x, z, a, c; RightPattern uses all six.
  VarId x = 0, y = 0, z = 0;
  ClauseId a = 0, b = 0, c = 0;
};

// LeftPattern:  x < z, A < C, x in C, z in A, z not in C.
// RightPattern: x < y < z, A < B < C, z in A, z not in B, x in C, y not in C.
// Prefers a LeftPattern when both exist.
std::optional<Obstruction> find_obstruction(const Formula& f, const SideOrders& orders);

bool holds(const Formula& f, const SideOrders& orders, const Obstruction& ob);

}  // namespace kint

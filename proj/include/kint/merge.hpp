#pragma once

// Merging a variable order and a clause order into a minimum-k k-interval
// ordering: a linear greedy scan for a fixed budget q, and a galloping plus
// binary search over q.

#include <optional>
#include <vector>

#include "kint/formula.hpp"

namespace kint {

// Bookkeeping of the fixed-q scan. Variables are addressed by their 1-based
// rank j in the variable order; slot t means "immediately after x_t" and t = 0
// is the slot before every variable.
struct MergeScanState {
  int t = 0;
  std::vector<int> live;  // index j (0 unused): live clauses containing x_j
  int livevar = 0;        // |{ j > t : live[j] > 0 }|
  std::vector<int> slot_of_clause;  // index by clause id; -1 while unplaced

  // Moves the scan point one variable down, keeping livevar exact.
  void step_down();
};

// Edges a clause would need if placed in slot state.t, given that every
// clause still live sits below it and every placed clause above.
// low is the smallest rank among the clause's variables, size its width.
long long edges_added_scan(const MergeScanState& state, ClauseId c, int low, int size);

struct InsertionRecord {
  ClauseId clause = 0;
  int slot = 0;
  long long edges_added = 0;
};

struct MergeTrace {
  MixedOrdering ordering;
  std::vector<InsertionRecord> insertions;  // in processing order (last clause first)
};

// Greedy placement for budget q; std::nullopt when no compatible merge keeps
// every clause within q added edges.
std::optional<MergeTrace> feasible_merge_traced(const Formula& f, const SideOrders& orders, int q);
std::optional<MixedOrdering> feasible_merge(const Formula& f, const SideOrders& orders, int q);

struct MergeResult {
  int k = 0;
  MixedOrdering ordering;
  int passes = 0;  // fixed-q scans performed
};

MergeResult min_merge_k(const Formula& f, const SideOrders& orders);

}  // namespace kint

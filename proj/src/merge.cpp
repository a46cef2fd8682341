#include "kint/merge.hpp"

#include <algorithm>
#include <string>

namespace kint {

void MergeScanState::step_down() {
  if (live[static_cast<std::size_t>(t)] > 0) ++livevar;
  --t;
}

long long edges_added_scan(const MergeScanState& state, ClauseId c, int low, int size) {
  if (size <= 0) throw Error(ErrorCode::EmptyClause, "clause " + std::to_string(c) + " has no variables");
  // Cond2: variables above t held by a live clause, minus c's own.
  // Cond1: variables in (low, t] minus c's members there; every member of c
  // below t is in [low, t], so the two corrections sum to size.
  long long edges = static_cast<long long>(state.livevar) - size;
  if (low <= state.t) edges += static_cast<long long>(state.t) - low + 1;
  return edges;
}

namespace {

void require_nonempty(const Formula& f) {
  for (const auto& c : f.clauses())
    if (c.empty())
      throw Error(ErrorCode::EmptyClauseInMerge, "clause " + std::to_string(c.id) + " is empty");
}

}  // namespace

std::optional<MergeTrace> feasible_merge_traced(const Formula& f, const SideOrders& orders, int q) {
  validate_side_orders(f, orders);
  require_nonempty(f);
  const int n = f.var_count();
  const int m = f.clause_count();

  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 1; j <= n; ++j) rank[static_cast<std::size_t>(orders.var_order[static_cast<std::size_t>(j - 1)])] = j;

  MergeScanState st;
  st.t = n;
  st.live.assign(static_cast<std::size_t>(n) + 1, 0);
  st.slot_of_clause.assign(static_cast<std::size_t>(m) + 1, -1);
  for (const auto& c : f.clauses())
    for (const auto& l : c.literals) ++st.live[static_cast<std::size_t>(rank[static_cast<std::size_t>(l.var)])];

  MergeTrace trace;
  trace.insertions.reserve(static_cast<std::size_t>(m));
  for (int i = m; i >= 1; --i) {
    const Clause& c = f.clause(orders.clause_order[static_cast<std::size_t>(i - 1)]);
    int low = n + 1;
    for (const auto& l : c.literals) low = std::min(low, rank[static_cast<std::size_t>(l.var)]);
    const int size = static_cast<int>(c.size());

    for (;;) {
      long long edges = edges_added_scan(st, c.id, low, size);
      if (edges <= q) {
        st.slot_of_clause[static_cast<std::size_t>(c.id)] = st.t;
        trace.insertions.push_back({c.id, st.t, edges});
        for (const auto& l : c.literals) {
          int j = rank[static_cast<std::size_t>(l.var)];
          if (--st.live[static_cast<std::size_t>(j)] == 0 && j > st.t) --st.livevar;
        }
        break;
      }
      if (st.t == 0) return std::nullopt;
      st.step_down();
    }
  }

  // Slot t holds its clauses in increasing clause-order index after x_t.
  std::vector<std::vector<ClauseId>> slots(static_cast<std::size_t>(n) + 1);
  for (ClauseId cid : orders.clause_order)
    slots[static_cast<std::size_t>(st.slot_of_clause[static_cast<std::size_t>(cid)])].push_back(cid);
  auto& seq = trace.ordering.sequence;
  seq.reserve(static_cast<std::size_t>(n + m));
  for (int t = 0; t <= n; ++t) {
    if (t > 0) seq.push_back(Element::var(orders.var_order[static_cast<std::size_t>(t - 1)]));
    for (ClauseId cid : slots[static_cast<std::size_t>(t)]) seq.push_back(Element::clause(cid));
  }
  return trace;
}

std::optional<MixedOrdering> feasible_merge(const Formula& f, const SideOrders& orders, int q) {
  auto trace = feasible_merge_traced(f, orders, q);
  if (!trace) return std::nullopt;
  return std::move(trace->ordering);
}

MergeResult min_merge_k(const Formula& f, const SideOrders& orders) {
  MergeResult result;
  auto attempt = [&](int q) {
    ++result.passes;
    return feasible_merge(f, orders, q);
  };

  if (auto ord = attempt(0)) {
    result.ordering = std::move(*ord);
    return result;
  }
  // Every clause needs at most n - |c| < n edges, so q = n always succeeds.
  const int cap = std::max(1, f.var_count());
  int lo = 0;  // largest budget known to fail
  int hi = 1;
  std::optional<MixedOrdering> hi_ord;
  for (;;) {
    hi_ord = attempt(hi);
    if (hi_ord) break;
    if (hi >= cap) throw Error(ErrorCode::InfeasibleParameters, "no merge found within q = n");
    lo = hi;
    hi = std::min(hi * 2, cap);
  }
  while (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    if (auto ord = attempt(mid)) {
      hi = mid;
      hi_ord = std::move(ord);
    } else {
      lo = mid;
    }
  }
  result.k = hi;
  result.ordering = std::move(*hi_ord);
  return result;
}

}  // namespace kint

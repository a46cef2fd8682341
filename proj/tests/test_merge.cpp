#include <doctest.h>

#include "kint/merge.hpp"
#include "kint/oracles.hpp"
#include "kint/ordering.hpp"
#include "support.hpp"

using namespace kint;
using namespace kint::testing;

namespace {

MergeScanState state_at(int t, int livevar) {
  MergeScanState st;
  st.t = t;
  st.livevar = livevar;
  return st;
}

}  // namespace

TEST_CASE("edges_added_scan arithmetic") {
  // x1..x5 below the slot, c = {x1..x5}, nothing live above.
  CHECK(edges_added_scan(state_at(5, 0), 1, 1, 5) == 0);
  // Two members inside x3..x5, two live variables above.
  CHECK(edges_added_scan(state_at(5, 2), 1, 3, 2) == 3);
  // Clause entirely above the slot: only the live term remains.
  CHECK(edges_added_scan(state_at(2, 3), 1, 4, 2) == 1);
  CHECK(edges_added_scan(state_at(0, 1), 1, 1, 1) == 0);
  CHECK(code_of([] { edges_added_scan(state_at(1, 0), 1, 1, 0); }) == ErrorCode::EmptyClause);
}

TEST_CASE("step_down keeps livevar") {
  MergeScanState st;
  st.t = 3;
  st.live = {0, 1, 0, 2};
  st.step_down();
  CHECK(st.t == 2);
  CHECK(st.livevar == 1);
  st.step_down();
  CHECK(st.livevar == 1);
  st.step_down();
  CHECK(st.t == 0);
  CHECK(st.livevar == 2);
}

TEST_CASE("feasible_merge examples") {
  Formula easy = build_formula(2, {{1}, {2}});
  auto order = feasible_merge(easy, identity_orders(easy), 0);
  REQUIRE(order.has_value());
  CHECK(*order == MixedOrdering{{Element::var(1), Element::clause(1), Element::var(2), Element::clause(2)}});

  Formula cross = build_formula(2, {{2}, {1}});
  CHECK_FALSE(feasible_merge(cross, identity_orders(cross), 0).has_value());
  auto one = feasible_merge(cross, identity_orders(cross), 1);
  REQUIRE(one.has_value());
  CHECK(ordering_width_k(cross, *one) == 1);
}

TEST_CASE("min_merge_k examples") {
  Formula cross = build_formula(2, {{2}, {1}});
  CHECK(min_merge_k(cross, identity_orders(cross)).k == 1);

  // Interval formula split from its own interval ordering.
  Formula f = build_formula(4, {{1, 2}, {2, 3}, {3, 4}});
  MixedOrdering pi{{Element::var(1), Element::var(2), Element::clause(1), Element::var(3), Element::clause(2),
                    Element::var(4), Element::clause(3)}};
  REQUIRE(verify_interval_ordering(f, pi).ok);
  CHECK(min_merge_k(f, split_orders(pi)).k == 0);

  Formula none(3, {});
  auto r = min_merge_k(none, identity_orders(none));
  CHECK(r.k == 0);
  CHECK(r.ordering.size() == 3);
}

TEST_CASE("merge errors") {
  Formula f(2, {Clause{1, {}, 1}, Clause{2, {Literal{1, false}}, 1}});
  CHECK(code_of([&] { feasible_merge(f, identity_orders(f), 0); }) == ErrorCode::EmptyClauseInMerge);
  Formula g = build_formula(2, {{1}});
  CHECK(code_of([&] { feasible_merge(g, SideOrders{{1}, {1}}, 0); }) == ErrorCode::NotAPermutation);
}

TEST_CASE("properties: greedy against exhaustive interleavings") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = random_formula(rng, {.max_n = 6, .max_m = 5, .max_width = 3});
    SideOrders so = random_side_orders(rng, f);
    auto r = min_merge_k(f, so);
    CHECK(r.k == brute_min_merge_k(f, so));
    CHECK(split_orders(r.ordering) == so);
    CHECK(ordering_width_k(f, r.ordering) == r.k);
    CHECK(r.k <= f.var_count());
  }
}

TEST_CASE("properties: fixed-q scan") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    Formula f = random_formula(rng, {.max_n = 8, .max_m = 7, .max_width = 4});
    SideOrders so = random_side_orders(rng, f);
    bool feasible_before = false;
    for (int q = 0; q <= f.var_count(); ++q) {
      auto trace = feasible_merge_traced(f, so, q);
      // Monotone in q.
      if (feasible_before) CHECK(trace.has_value());
      if (!trace) continue;
      feasible_before = true;
      CHECK(split_orders(trace->ordering) == so);
      CHECK(ordering_width_k(f, trace->ordering) <= q);
      REQUIRE(trace->insertions.size() == static_cast<std::size_t>(f.clause_count()));
      int prev_slot = f.var_count();
      for (const auto& ins : trace->insertions) {
        CHECK(ins.edges_added <= q);
        CHECK(ins.slot <= prev_slot);
        prev_slot = ins.slot;
        // Placement of the other clauses does not change this count.
        CHECK(ins.edges_added == static_cast<long long>(edges_needed(f, trace->ordering, ins.clause).size()));
      }
    }
    CHECK(feasible_before);
  }
}

TEST_CASE("properties: the greedy ordering is the latest-slot one") {
  // Each clause sits in the highest slot that any width-q interleaving allows
  // for it, given the clauses after it.
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    Formula f = random_formula(rng, {.max_n = 5, .max_m = 4, .max_width = 3});
    SideOrders so = random_side_orders(rng, f);
    const int k = brute_min_merge_k(f, so);
    auto trace = feasible_merge_traced(f, so, k);
    REQUIRE(trace.has_value());
    // Slot of the last clause is at least its slot in every width-k interleaving.
    if (f.clause_count() == 0) continue;
    const ClauseId last = so.clause_order.back();
    int greedy_slot = -1;
    for (const auto& ins : trace->insertions)
      if (ins.clause == last) greedy_slot = ins.slot;
    for (const auto& order : all_interleavings(so)) {
      if (ordering_width_k(f, order) > k) continue;
      int vars_before = 0;
      for (const auto& e : order.sequence) {
        if (e.is_clause() && e.id == last) break;
        if (e.is_var()) ++vars_before;
      }
      CHECK(vars_before <= greedy_slot);
    }
  }
}

TEST_CASE("properties: no pattern exactly when a 0-merge exists") {
  Rng rng(24);
  for (int trial = 0; trial < 3000; ++trial) {
    Formula f = random_formula(rng, {.max_n = 7, .max_m = 6, .max_width = 4});
    SideOrders so = random_side_orders(rng, f);
    const bool merges = feasible_merge(f, so, 0).has_value();
    CHECK(find_obstruction(f, so).has_value() != merges);
    if (trial % 10 == 0) CHECK(merges == (brute_min_merge_k(f, so) == 0));
  }
}

#include "kint/ordering.hpp"

#include <algorithm>
#include <limits>

namespace kint {

namespace {

constexpr int kNone = std::numeric_limits<int>::max();

// Per-clause needed-edge counts in O(n + m + |E|).
//
// For a clause c at position p:
//   Cond1 variables lie strictly between the lowest member of c below p and p;
//   Cond2 variables lie above p and occur in a clause below p. A variable x is a
//   Cond2 candidate exactly for positions p in (first clause of x, pos(x)).
std::vector<int> needed_counts(const Formula& f, const MixedOrdering& order) {
  validate_ordering(f, order);
  const Positions pos(f, order);
  const int len = static_cast<int>(order.size());

  std::vector<int> vars_before(static_cast<std::size_t>(len) + 1, 0);
  for (int i = 0; i < len; ++i)
    vars_before[static_cast<std::size_t>(i) + 1] =
        vars_before[static_cast<std::size_t>(i)] + (order.sequence[static_cast<std::size_t>(i)].is_var() ? 1 : 0);

  std::vector<int> first_clause(static_cast<std::size_t>(f.var_count()), kNone);
  for (const auto& c : f.clauses())
    for (const auto& l : c.literals) {
      auto& fc = first_clause[static_cast<std::size_t>(l.var - 1)];
      fc = std::min(fc, pos.of_clause(c.id));
    }

  std::vector<int> diff(static_cast<std::size_t>(len) + 1, 0);
  for (VarId v = 1; v <= f.var_count(); ++v) {
    int lo = first_clause[static_cast<std::size_t>(v - 1)];
    int hi = pos.of_var(v);
    if (lo != kNone && lo < hi) {
      ++diff[static_cast<std::size_t>(lo) + 1];
      --diff[static_cast<std::size_t>(hi)];
    }
  }
  std::vector<int> cond2_candidates(static_cast<std::size_t>(len), 0);
  for (int i = 0, run = 0; i < len; ++i) {
    run += diff[static_cast<std::size_t>(i)];
    cond2_candidates[static_cast<std::size_t>(i)] = run;
  }

  std::vector<int> counts(static_cast<std::size_t>(f.clause_count()), 0);
  for (const auto& c : f.clauses()) {
    const int p = pos.of_clause(c.id);
    int lowest_below = kNone;
    int members_between = 0;  // members of c strictly between lowest_below and p
    int members_below = 0;
    int members_above_candidates = 0;
    for (const auto& l : c.literals) {
      const int q = pos.of_var(l.var);
      if (q < p) {
        ++members_below;
        lowest_below = std::min(lowest_below, q);
      } else if (first_clause[static_cast<std::size_t>(l.var - 1)] < p) {
        ++members_above_candidates;
      }
    }
    int cond1 = 0;
    if (lowest_below != kNone) {
      members_between = members_below - 1;
      int vars_strictly_between = vars_before[static_cast<std::size_t>(p)] -
                                  vars_before[static_cast<std::size_t>(lowest_below) + 1];
      cond1 = vars_strictly_between - members_between;
    }
    int cond2 = cond2_candidates[static_cast<std::size_t>(p)] - members_above_candidates;
    counts[static_cast<std::size_t>(c.id - 1)] = cond1 + cond2;
  }
  return counts;
}

std::vector<VarId> needed_for(const Formula& f, const MixedOrdering& order, const Positions& pos,
                              const Clause& c) {
  const int p = pos.of_clause(c.id);
  int lowest_below = kNone;
  for (const auto& l : c.literals) {
    int q = pos.of_var(l.var);
    if (q < p) lowest_below = std::min(lowest_below, q);
  }
  std::vector<char> in_lower_clause(static_cast<std::size_t>(f.var_count()), 0);
  for (const auto& other : f.clauses())
    if (pos.of_clause(other.id) < p)
      for (const auto& l : other.literals) in_lower_clause[static_cast<std::size_t>(l.var - 1)] = 1;

  std::vector<VarId> out;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const auto& e = order.sequence[static_cast<std::size_t>(i)];
    if (!e.is_var() || i == p || c.contains_var(e.id)) continue;
    bool cond1 = lowest_below != kNone && lowest_below < i && i < p;
    bool cond2 = i > p && in_lower_clause[static_cast<std::size_t>(e.id - 1)];
    if (cond1 || cond2) out.push_back(e.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VarId> edges_needed(const Formula& f, const MixedOrdering& order, ClauseId c) {
  validate_ordering(f, order);
  const Clause& clause = f.clause(c);
  return needed_for(f, order, Positions(f, order), clause);
}

std::vector<std::vector<VarId>> all_edges_needed(const Formula& f, const MixedOrdering& order) {
  validate_ordering(f, order);
  const Positions pos(f, order);
  std::vector<std::vector<VarId>> out;
  out.reserve(static_cast<std::size_t>(f.clause_count()));
  for (const auto& c : f.clauses()) out.push_back(needed_for(f, order, pos, c));
  return out;
}

int ordering_width_k(const Formula& f, const MixedOrdering& order) {
  auto counts = needed_counts(f, order);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

OrderingVerdict verify_interval_ordering(const Formula& f, const MixedOrdering& order) {
  auto counts = needed_counts(f, order);
  const Positions pos(f, order);
  for (const auto& e : order.sequence) {
    if (!e.is_clause() || counts[static_cast<std::size_t>(e.id - 1)] == 0) continue;
    const Clause& c = f.clause(e.id);
    auto needed = needed_for(f, order, pos, c);
    auto first = std::min_element(needed.begin(), needed.end(),
                                  [&](VarId a, VarId b) { return pos.of_var(a) < pos.of_var(b); });
    Condition cond = pos.of_var(*first) < pos.of_clause(c.id) ? Condition::Cond1 : Condition::Cond2;
    return OrderingVerdict{false, Violation{c.id, *first, cond}};
  }
  return OrderingVerdict{};
}

std::optional<Obstruction> find_obstruction(const Formula& f, const SideOrders& orders) {
  validate_side_orders(f, orders);
  const int n = f.var_count();
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);  // var id -> 0-based rank
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(orders.var_order[static_cast<std::size_t>(r)])] = r;
  auto var_at = [&](int r) { return orders.var_order[static_cast<std::size_t>(r)]; };

  // first_holder[r]: first clause (in clause order) holding the var of rank r.
  std::vector<ClauseId> first_holder(static_cast<std::size_t>(n), 0);
  std::vector<char> member(static_cast<std::size_t>(n), 0);

  std::optional<Obstruction> right;
  int best_b_rank = -1;  // max rank z over earlier B with z in a clause before B, z not in B
  ClauseId best_b = 0;

  for (ClauseId cid : orders.clause_order) {
    const Clause& c = f.clause(cid);
    for (const auto& l : c.literals) member[static_cast<std::size_t>(rank[static_cast<std::size_t>(l.var)])] = 1;

    if (!c.empty()) {
      int min_rank = n;
      for (const auto& l : c.literals) min_rank = std::min(min_rank, rank[static_cast<std::size_t>(l.var)]);
      // Left: some z above min_rank, outside c, held by an earlier clause.
      for (int r = min_rank + 1; r < n; ++r) {
        if (!member[static_cast<std::size_t>(r)] && first_holder[static_cast<std::size_t>(r)] != 0) {
          Obstruction ob;
          ob.kind = Obstruction::Kind::LeftPattern;
          ob.x = var_at(min_rank);
          ob.z = var_at(r);
          ob.a = first_holder[static_cast<std::size_t>(r)];
          ob.c = cid;
          return ob;
        }
      }
      // Right: y is the first non-member above min_rank; need an earlier B with z above y.
      if (!right) {
        int gap = min_rank + 1;
        while (gap < n && member[static_cast<std::size_t>(gap)]) ++gap;
        if (gap < n && best_b_rank > gap) {
          Obstruction ob;
          ob.kind = Obstruction::Kind::RightPattern;
          ob.x = var_at(min_rank);
          ob.y = var_at(gap);
          ob.z = var_at(best_b_rank);
          ob.a = first_holder[static_cast<std::size_t>(best_b_rank)];
          ob.b = best_b;
          ob.c = cid;
          right = ob;
        }
      }
    }

    // c as a future B: highest z held earlier and missing from c.
    for (int r = n - 1; r > best_b_rank; --r) {
      if (!member[static_cast<std::size_t>(r)] && first_holder[static_cast<std::size_t>(r)] != 0) {
        best_b_rank = r;
        best_b = cid;
        break;
      }
    }

    for (const auto& l : c.literals) {
      auto r = static_cast<std::size_t>(rank[static_cast<std::size_t>(l.var)]);
      member[r] = 0;
      if (first_holder[r] == 0) first_holder[r] = cid;
    }
  }
  // No Left pattern anywhere.
  return right;
}

bool holds(const Formula& f, const SideOrders& orders, const Obstruction& ob) {
  std::vector<int> vrank(static_cast<std::size_t>(f.var_count()) + 1, -1);
  std::vector<int> crank(static_cast<std::size_t>(f.clause_count()) + 1, -1);
  for (std::size_t i = 0; i < orders.var_order.size(); ++i)
    vrank[static_cast<std::size_t>(orders.var_order[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < orders.clause_order.size(); ++i)
    crank[static_cast<std::size_t>(orders.clause_order[i])] = static_cast<int>(i);
  auto vr = [&](VarId v) { return vrank.at(static_cast<std::size_t>(v)); };
  auto cr = [&](ClauseId c) { return crank.at(static_cast<std::size_t>(c)); };
  auto in = [&](VarId v, ClauseId c) { return f.clause(c).contains_var(v); };

  if (ob.kind == Obstruction::Kind::LeftPattern)
    return vr(ob.x) < vr(ob.z) && cr(ob.a) < cr(ob.c) && in(ob.x, ob.c) && in(ob.z, ob.a) && !in(ob.z, ob.c);
  return vr(ob.x) < vr(ob.y) && vr(ob.y) < vr(ob.z) && cr(ob.a) < cr(ob.b) && cr(ob.b) < cr(ob.c) &&
         in(ob.z, ob.a) && !in(ob.z, ob.b) && in(ob.x, ob.c) && !in(ob.y, ob.c);
}

}  // namespace kint

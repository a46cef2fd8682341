#include "kint/oracles.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kint/ordering.hpp"

namespace kint {

namespace {

void check_cap(const Formula& f, int cap) {
  if (f.var_count() > cap || f.var_count() > 62)
    throw Error(ErrorCode::TooManyVariables,
                std::to_string(f.var_count()) + " variables exceed the cap of " + std::to_string(cap));
}

// Variable v is bit (n - v) of the enumeration index, so increasing indices
// visit assignments in lexicographic order with x1 most significant.
struct MaskedClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  Weight weight = 0;
};

std::vector<MaskedClause> masks(const Formula& f) {
  const int n = f.var_count();
  std::vector<MaskedClause> out;
  for (const auto& c : f.clauses()) {
    MaskedClause mc;
    mc.weight = c.weight;
    for (const auto& l : c.literals) (l.negated ? mc.neg : mc.pos) |= std::uint64_t{1} << (n - l.var);
    out.push_back(mc);
  }
  return out;
}

bool sat(const MaskedClause& c, std::uint64_t tau) { return ((tau & c.pos) | (~tau & c.neg)) != 0; }

}  // namespace

BigInt brute_count(const Formula& f, int var_cap) {
  check_cap(f, var_cap);
  const auto cls = masks(f);
  const std::uint64_t total = std::uint64_t{1} << f.var_count();
  std::uint64_t count = 0;
  for (std::uint64_t tau = 0; tau < total; ++tau)
    if (std::all_of(cls.begin(), cls.end(), [&](const MaskedClause& c) { return sat(c, tau); })) ++count;
  return BigInt(count);
}

BruteMaxSat brute_max_weight(const Formula& f, int var_cap) {
  check_cap(f, var_cap);
  const int n = f.var_count();
  const auto cls = masks(f);
  const std::uint64_t total = std::uint64_t{1} << n;
  Weight best = 0;
  std::uint64_t best_tau = 0;
  bool found = false;
  for (std::uint64_t tau = 0; tau < total; ++tau) {
    Weight w = 0;
    for (const auto& c : cls)
      if (sat(c, tau)) w += c.weight;
    if (!found || w > best) {
      best = w;
      best_tau = tau;
      found = true;
    }
  }
  BruteMaxSat out;
  out.weight = best;
  out.witness = Assignment(n);
  for (VarId v = 1; v <= n; ++v) out.witness.set(v, (best_tau >> (n - v)) & 1U);
  return out;
}

int brute_min_merge_k(const Formula& f, const SideOrders& orders, std::uint64_t interleaving_cap) {
  validate_side_orders(f, orders);
  const int n = f.var_count();
  const int m = f.clause_count();
  // C(n+m, m), saturating at the cap.
  std::uint64_t interleavings = 1;
  for (int i = 1; i <= m; ++i) {
    interleavings = interleavings * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
    if (interleavings > interleaving_cap) break;
  }
  if (interleavings > interleaving_cap)
    throw Error(ErrorCode::TooManyInterleavings, "more than " + std::to_string(interleaving_cap) + " interleavings");

  // choose[i] true means element i of the merged sequence is a clause.
  std::vector<bool> is_clause(static_cast<std::size_t>(n + m), false);
  std::fill(is_clause.end() - m, is_clause.end(), true);
  int best = std::numeric_limits<int>::max();
  MixedOrdering ord;
  ord.sequence.resize(static_cast<std::size_t>(n + m));
  do {
    std::size_t vi = 0, ci = 0;
    for (std::size_t i = 0; i < is_clause.size(); ++i)
      ord.sequence[i] = is_clause[i] ? Element::clause(orders.clause_order[ci++]) : Element::var(orders.var_order[vi++]);
    best = std::min(best, ordering_width_k(f, ord));
  } while (std::next_permutation(is_clause.begin(), is_clause.end()));
  return best;
}

}  // namespace kint

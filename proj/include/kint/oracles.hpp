#pragma once

// Brute-force reference answers. Exponential by design; each enforces a cap
// and fails loudly rather than truncating.

#include <cstdint>

#include "kint/formula.hpp"
#include "kint/ps_solver.hpp"

namespace kint {

inline constexpr int kDefaultBruteVarCap = 20;
inline constexpr std::uint64_t kDefaultInterleavingCap = 1'000'000;

BigInt brute_count(const Formula& f, int var_cap = kDefaultBruteVarCap);

struct BruteMaxSat {
  Weight weight = 0;
  Assignment witness;  // lexicographically smallest optimum, false < true, x1 first
};

BruteMaxSat brute_max_weight(const Formula& f, int var_cap = kDefaultBruteVarCap);

// Minimum ordering_width_k over all interleavings of the two side orders.
int brute_min_merge_k(const Formula& f, const SideOrders& orders,
                      std::uint64_t interleaving_cap = kDefaultInterleavingCap);

}  // namespace kint

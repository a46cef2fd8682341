#pragma once

// Cut subformulas, ps-values and ps-width of a linear ordering, and exact
// #SAT / weighted MaxSAT by a left-to-right dynamic program over the ordering.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kint/formula.hpp"

namespace kint {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultPsVarCap = 24;

// Subformulas crossing the cut after the first i elements of an ordering.
// f1: prefix clauses restricted to suffix variables.
// f2: suffix clauses restricted to prefix variables.
// Fragment clauses are renumbered 1..m'; *_origin maps them back.
// Clauses emptied by the restriction are kept.
struct CutFormulas {
  int i = 0;
  Formula f1;
  Formula f2;
  std::vector<ClauseId> f1_origin;
  std::vector<ClauseId> f2_origin;
};

CutFormulas cut_formulas(const Formula& f, const MixedOrdering& order, int i);

// The distinct sat-sets over all assignments of the fragment's occurring
// variables, each sorted, the family sorted. Throws TooManyVariables when more
// than var_cap variables occur.
std::vector<std::vector<ClauseId>> ps_family(const Formula& fragment, int var_cap = kDefaultPsVarCap);
std::uint64_t ps_value(const Formula& fragment, int var_cap = kDefaultPsVarCap);

// Max ps-value over f1(i), f2(i) for i = 1..n+m; 1 for an empty ordering.
std::uint64_t ps_width(const Formula& f, const MixedOrdering& order, int var_cap = kDefaultPsVarCap);

struct SolveOptions {
  // Keep the distinct S sets (original clause ids) seen at every cut.
  bool record_s_sets = false;
};

struct SolveStats {
  std::size_t max_states = 0;
  // Index i describes the cut after the first i elements (0..n+m).
  std::vector<std::size_t> states_per_cut;
  std::vector<std::size_t> distinct_s_per_cut;
  std::vector<std::vector<std::vector<ClauseId>>> s_sets_per_cut;
};

struct CountResult {
  BigInt count;
  SolveStats stats;
};

struct MaxSatResult {
  Weight weight = 0;
  Assignment witness;
  SolveStats stats;
};

CountResult count_models(const Formula& f, const MixedOrdering& order, const SolveOptions& opts = {});
MaxSatResult max_weight(const Formula& f, const MixedOrdering& order, const SolveOptions& opts = {});

}  // namespace kint

#include <doctest.h>

#include <set>

#include "kint/oracles.hpp"
#include "kint/ps_solver.hpp"
#include "support.hpp"

using namespace kint;
using namespace kint::testing;

namespace {

MixedOrdering seq(std::initializer_list<Element> e) { return MixedOrdering{std::vector<Element>(e)}; }

// Distinct sat-sets over every full assignment of the fragment's variable range.
std::set<std::vector<ClauseId>> sat_sets_by_enumeration(const Formula& fragment) {
  std::set<std::vector<ClauseId>> out;
  const int n = fragment.var_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment tau(n);
    for (VarId v = 1; v <= n; ++v) tau.set(v, (mask >> (v - 1)) & 1U);
    out.insert(sat_set(fragment, tau));
  }
  return out;
}

}  // namespace

TEST_CASE("cut_formulas boundaries") {
  Formula f = build_formula(2, {{1, 2}, {-1}});
  MixedOrdering pi = seq({Element::var(1), Element::clause(1), Element::var(2), Element::clause(2)});
  auto first = cut_formulas(f, pi, 0);
  CHECK(first.f1.clause_count() == 0);
  REQUIRE(first.f2.clause_count() == 2);
  for (const auto& c : first.f2.clauses()) CHECK(c.empty());

  auto last = cut_formulas(f, pi, 4);
  CHECK(last.f2.clause_count() == 0);
  REQUIRE(last.f1.clause_count() == 2);
  for (const auto& c : last.f1.clauses()) CHECK(c.empty());

  CHECK(code_of([&] { cut_formulas(f, pi, 5); }) == ErrorCode::CutOutOfRange);
  CHECK(code_of([&] { cut_formulas(f, pi, -1); }) == ErrorCode::CutOutOfRange);
}

TEST_CASE("cut_formulas after one variable") {
  Formula f = build_formula(2, {{1, 2}});
  auto cut = cut_formulas(f, seq({Element::var(1), Element::clause(1), Element::var(2)}), 1);
  CHECK(cut.f1.clause_count() == 0);
  REQUIRE(cut.f2.clause_count() == 1);
  REQUIRE(cut.f2.clause(1).size() == 1);
  CHECK(cut.f2.clause(1).literals[0] == Literal{1, false});
  CHECK(cut.f2_origin == std::vector<ClauseId>{1});
}

TEST_CASE("ps_value examples") {
  CHECK(ps_value(Formula(3, {})) == 1);
  CHECK(ps_value(build_formula(2, {{1, 2}})) == 2);
  CHECK(ps_value(build_formula(2, {{1}, {2}})) == 4);
  CHECK(ps_value(build_formula(1, {{1}, {-1}})) == 2);
  CHECK(ps_family(build_formula(2, {{1, 2}})) == std::vector<std::vector<ClauseId>>{{}, {1}});
  CHECK(code_of([] { ps_value(build_formula(3, {{1, 2, 3}}), 2); }) == ErrorCode::TooManyVariables);
}

TEST_CASE("ps_width examples") {
  CHECK(ps_width(Formula(0, {}), MixedOrdering{}) == 1);
  CHECK(ps_width(Formula(2, {}), seq({Element::var(2), Element::var(1)})) == 1);
  Formula f = build_formula(2, {{1}, {2}});
  CHECK(ps_width(f, seq({Element::var(1), Element::var(2), Element::clause(1), Element::clause(2)})) == 4);
}

TEST_CASE("count_models examples") {
  Formula f = build_formula(2, {{1, 2}});
  CHECK(count_models(f, seq({Element::var(1), Element::var(2), Element::clause(1)})).count == 3);
  CHECK(count_models(f, seq({Element::clause(1), Element::var(2), Element::var(1)})).count == 3);

  MixedOrdering wide;
  for (VarId v = 1; v <= 70; ++v) wide.sequence.push_back(Element::var(v));
  CHECK(count_models(Formula(70, {}), wide).count == (BigInt(1) << 70));

  Formula contra = build_formula(1, {{1}, {-1}});
  CHECK(count_models(contra, seq({Element::clause(1), Element::var(1), Element::clause(2)})).count == 0);

  Formula with_empty(1, {Clause{1, {}, 1}});
  CHECK(count_models(with_empty, seq({Element::var(1), Element::clause(1)})).count == 0);
}

TEST_CASE("max_weight examples") {
  Formula f = build_formula(1, {{1}, {-1}}, std::vector<Weight>{2, 3});
  auto r = max_weight(f, seq({Element::var(1), Element::clause(1), Element::clause(2)}));
  CHECK(r.weight == 3);
  CHECK_FALSE(r.witness.value(1));

  Formula g = build_formula(3, {{1, 2}, {-1, 3}, {2, -3}});
  auto s = max_weight(g, seq({Element::clause(2), Element::var(3), Element::var(1), Element::clause(1),
                              Element::clause(3), Element::var(2)}));
  CHECK(s.weight == 3);
  CHECK(satisfies_all(g, s.witness));

  Formula with_empty(1, {Clause{1, {}, 9}, Clause{2, {Literal{1, true}}, 2}});
  auto t = max_weight(with_empty, seq({Element::clause(1), Element::var(1), Element::clause(2)}));
  CHECK(t.weight == 2);
}

TEST_CASE("stats shape") {
  Formula f = build_formula(2, {{1, 2}});
  auto r = count_models(f, seq({Element::var(1), Element::clause(1), Element::var(2)}), SolveOptions{true});
  CHECK(r.stats.states_per_cut.size() == 4);
  CHECK(r.stats.distinct_s_per_cut.size() == 4);
  CHECK(r.stats.s_sets_per_cut.size() == 4);
  CHECK(r.stats.states_per_cut.front() == 1);
  CHECK(r.stats.states_per_cut.back() == 1);
  CHECK(r.stats.max_states >= 1);
}

TEST_CASE("properties: solver against enumeration") {
  Rng rng(41);
  for (int trial = 0; trial < 250; ++trial) {
    Formula f = random_formula(rng, {.max_n = 9, .max_m = 9, .max_width = 4, .max_weight = 10});
    MixedOrdering a = random_ordering(rng, f);
    MixedOrdering b = random_ordering(rng, f);
    const BigInt expected = brute_count(f);
    CHECK(count_models(f, a).count == expected);
    CHECK(count_models(f, b).count == expected);

    auto best = brute_max_weight(f);
    auto ra = max_weight(f, a);
    CHECK(ra.weight == best.weight);
    CHECK(satisfied_weight(f, ra.witness) == ra.weight);
    CHECK(max_weight(f, b).weight == best.weight);
  }
}

TEST_CASE("properties: live S sets lie in PS of the right-hand cut formula") {
  Rng rng(42);
  for (int trial = 0; trial < 120; ++trial) {
    Formula f = random_formula(rng, {.max_n = 8, .max_m = 7, .max_width = 3});
    MixedOrdering order = random_ordering(rng, f);
    auto r = count_models(f, order, SolveOptions{true});
    const std::uint64_t width = ps_width(f, order);
    for (int i = 0; i <= f.var_count() + f.clause_count(); ++i) {
      auto cut = cut_formulas(f, order, i);
      std::set<std::vector<ClauseId>> family;
      for (const auto& s : ps_family(cut.f2)) {
        std::vector<ClauseId> orig;
        for (ClauseId c : s) orig.push_back(cut.f2_origin[static_cast<std::size_t>(c - 1)]);
        std::sort(orig.begin(), orig.end());
        family.insert(orig);
      }
      for (const auto& s : r.stats.s_sets_per_cut[static_cast<std::size_t>(i)]) CHECK(family.count(s) == 1);
      CHECK(r.stats.distinct_s_per_cut[static_cast<std::size_t>(i)] <= ps_value(cut.f2));
      if (i >= 1) CHECK(ps_value(cut.f2) <= width);
    }
  }
}

TEST_CASE("properties: ps_family against full enumeration") {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Formula f = random_formula(rng, {.max_n = 8, .max_m = 8, .max_width = 4});
    auto family = ps_family(f);
    auto expected = sat_sets_by_enumeration(f);
    CHECK(std::set<std::vector<ClauseId>>(family.begin(), family.end()) == expected);
    CHECK(family.size() == expected.size());
  }
}

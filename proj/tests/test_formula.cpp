#include <doctest.h>

#include "kint/formula.hpp"
#include "support.hpp"

using namespace kint;
using kint::testing::code_of;

TEST_CASE("build_formula basics") {
  Formula f = build_formula(2, {{1, 2}});
  CHECK(f.clause_count() == 1);
  CHECK(f.clause(1).weight == 1);
  CHECK(f.clause(1).size() == 2);

  Formula g = build_formula(1, {{1}, {-1}}, std::vector<Weight>{2, 3});
  CHECK(g.clause(1).weight == 2);
  CHECK(g.clause(2).weight == 3);
  CHECK(g.weighted());
  CHECK(g.total_weight() == 5);
}

TEST_CASE("build_formula rejects bad input") {
  CHECK(code_of([] { build_formula(1, {{1, -1}}); }) == ErrorCode::TautologicalClause);
  CHECK(code_of([] { build_formula(1, {{2}}); }) == ErrorCode::OutOfRangeLiteral);
  CHECK(code_of([] { build_formula(1, {{0}}); }) == ErrorCode::OutOfRangeLiteral);
  CHECK(code_of([] { build_formula(1, {{1}}, std::vector<Weight>{1, 2}); }) == ErrorCode::WeightCountMismatch);
}

TEST_CASE("duplicate literals merge and literals sort by variable") {
  Formula f = build_formula(3, {{3, -1, 3}});
  const auto& lits = f.clause(1).literals;
  REQUIRE(lits.size() == 2);
  CHECK(lits[0] == Literal{1, true});
  CHECK(lits[1] == Literal{3, false});
  CHECK(f.clause(1).literal_of(3).has_value());
  CHECK_FALSE(f.clause(1).literal_of(2).has_value());
}

TEST_CASE("unknown clause id") {
  Formula f = build_formula(1, {{1}});
  CHECK(code_of([&] { (void)f.clause(2); }) == ErrorCode::UnknownClause);
  CHECK(code_of([&] { (void)f.clause(0); }) == ErrorCode::UnknownClause);
}

TEST_CASE("sat_set") {
  Formula f = build_formula(2, {{1, 2}});
  CHECK(sat_set(f, Assignment(std::vector<bool>{false, false})).empty());
  CHECK(sat_set(f, Assignment(std::vector<bool>{true, false})) == std::vector<ClauseId>{1});

  Formula g = build_formula(1, {{1}, {-1}});
  CHECK(sat_set(g, Assignment(std::vector<bool>{true})) == std::vector<ClauseId>{1});
  CHECK(code_of([&] { sat_set(g, Assignment(2)); }) == ErrorCode::PartialAssignment);
}

TEST_CASE("satisfied_weight and satisfies_all") {
  Formula f = build_formula(2, {{1}, {-1, 2}, {-2}}, std::vector<Weight>{4, 5, 6});
  Assignment tau(std::vector<bool>{true, true});
  CHECK(satisfied_weight(f, tau) == 9);
  CHECK_FALSE(satisfies_all(f, tau));
  CHECK(satisfies_all(build_formula(2, {{1}, {2}}), tau));
}

TEST_CASE("empty clause") {
  Formula f(2, {Clause{1, {}, 1}});
  CHECK(f.has_empty_clause());
  CHECK(sat_set(f, Assignment(2)).empty());
}

TEST_CASE("incidence_bigraph") {
  Bigraph g = incidence_bigraph(build_formula(2, {{1, -2}}));
  CHECK(g.edges == std::vector<std::pair<ClauseId, VarId>>{{1, 1}, {1, 2}});

  Bigraph h = incidence_bigraph(Formula(3, {}));
  CHECK(h.edges.empty());
  CHECK(h.var_vertices.size() == 3);

  Bigraph k = incidence_bigraph(build_formula(2, {{1}, {1, 2}}));
  CHECK(k.edges == std::vector<std::pair<ClauseId, VarId>>{{1, 1}, {2, 1}, {2, 2}});
}

TEST_CASE("ordering validation") {
  Formula f = build_formula(2, {{1, 2}});
  MixedOrdering ok{{Element::var(1), Element::clause(1), Element::var(2)}};
  CHECK_NOTHROW(validate_ordering(f, ok));
  MixedOrdering missing{{Element::var(1), Element::clause(1)}};
  CHECK(code_of([&] { validate_ordering(f, missing); }) == ErrorCode::OrderingMismatch);
  MixedOrdering dup{{Element::var(1), Element::var(1), Element::clause(1)}};
  CHECK(code_of([&] { validate_ordering(f, dup); }) == ErrorCode::OrderingMismatch);

  SideOrders so = split_orders(ok);
  CHECK(so.var_order == std::vector<VarId>{1, 2});
  CHECK(so.clause_order == std::vector<ClauseId>{1});
  SideOrders bad{{1, 1}, {1}};
  CHECK(code_of([&] { validate_side_orders(f, bad); }) == ErrorCode::NotAPermutation);

  Positions pos(f, ok);
  CHECK(pos.of_var(2) == 2);
  CHECK(pos.of_clause(1) == 1);
}

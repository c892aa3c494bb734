#include <doctest.h>

#include "pmvc/decision_diagram.hpp"
#include "pmvc/errors.hpp"
#include "pmvc/matching.hpp"
#include "pmvc/oracle.hpp"
#include "support.hpp"

using namespace pmvc;
using namespace pmvc::testing;
using SC = SymmetricConstraint;

TEST_CASE("enumerate_pms counts") {
  CHECK(enumerate_pms(Graph(2, 1, {{1, 2, 1, 1}})).size() == 1);
  CHECK(enumerate_pms(alternating_c4()).size() == 2);
  const Graph k4(4, 1, {{1, 2, 1, 1}, {1, 3, 1, 1}, {1, 4, 1, 1}, {2, 3, 1, 1}, {2, 4, 1, 1}, {3, 4, 1, 1}});
  const auto all = enumerate_pms(k4);
  REQUIRE(all.size() == 3);
  CHECK(all[0].matching.edge_ids == std::vector<int>{0, 5});
  CHECK(all[1].matching.edge_ids == std::vector<int>{1, 4});
  CHECK(all[2].matching.edge_ids == std::vector<int>{2, 3});
  CHECK(enumerate_pms(Graph(4, 1, {})).empty());
  REQUIRE(enumerate_pms(Graph(0, 1, {})).size() == 1);
  CHECK(enumerate_pms(Graph(0, 1, {}))[0].matching.edge_ids.empty());
  // parallel edges are distinct matchings
  CHECK(enumerate_pms(Graph(2, 2, {{1, 2, 1, 1}, {1, 2, 2, 2}})).size() == 2);
  CHECK_THROWS_AS(enumerate_pms(Graph(16, 1, {})), ResourceLimit);
  CHECK(enumerate_pms(Graph(16, 1, {}), 16).empty());
}

TEST_CASE("enumerate_pms yields each matching once with its coloring") {
  for (int i = 0; i < 100; ++i) {
    Rng rng = test_rng(20, static_cast<std::uint64_t>(i));
    const Graph g = random_graph(rng, 2 * pick(rng, 0, 4), pick(rng, 1, 3), 0.6);
    const auto all = enumerate_pms(g);
    for (std::size_t k = 0; k < all.size(); ++k) {
      CHECK(check_perfect_matching(g, all[k].matching.edge_ids));
      CHECK(inherited_coloring(g, all[k].matching) == all[k].coloring);
      if (k > 0) CHECK(all[k - 1].matching < all[k].matching);
    }
    CHECK(all.empty() != brute_has_pm(g));
    CHECK(oracle_sym(g, SC::always()).found == blossom_has_pm(g));
  }
}

TEST_CASE("oracle_sym") {
  const Graph red(2, 2, {{1, 2, 1, 1}});
  const auto yes = oracle_sym(red, SC::count_eq(1, 2));
  CHECK(yes.found);
  CHECK(yes.witness->edge_ids == std::vector<int>{0});
  CHECK_FALSE(oracle_sym(red, SC::count_eq(2, 2)).found);
  CHECK_FALSE(oracle_sym(alternating_c4(), SC::count_eq(1, 2)).found);
  CHECK(oracle_sym(alternating_c4(), SC::count_eq(1, 4)).found);
  CHECK_THROWS_AS(oracle_sym(red, SC::count_eq(3, 2)), InputError);
}

TEST_CASE("oracle_dd") {
  const Graph red(2, 2, {{1, 2, 1, 1}});
  CHECK(oracle_dd(red, DecisionDiagram(2, true)).found);
  CHECK_FALSE(oracle_dd(red, DecisionDiagram(2, false)).found);
  const DecisionDiagram blue_first = parse_dd(R"({"order":[1],"root":0,"nodes":[{"id":0,"vertex":1,"children":["F","T"]}]})", 2);
  CHECK_FALSE(oracle_dd(red, blue_first).found);
  CHECK(oracle_dd(Graph(2, 2, {{1, 2, 1, 1}, {1, 2, 2, 1}}), blue_first).witness->edge_ids == std::vector<int>{1});
}

TEST_CASE("naive_det small cases") {
  PolyMatrix one(1, 2);
  one(0, 0) = Polynomial::variable(2, 1) + Polynomial::constant(2, 3);
  CHECK(naive_det(one) == one(0, 0));
  PolyMatrix skew(2, 2);
  const Polynomial q = Polynomial::variable(2, 1) * Polynomial::variable(2, 2);
  skew(0, 1) = q;
  skew(1, 0) = -q;
  CHECK(naive_det(skew) == q * q);
  CHECK(naive_det(PolyMatrix(0, 1)) == Polynomial::constant(1, 1));
  CHECK_THROWS_AS(naive_det(PolyMatrix(9, 1)), ResourceLimit);
}

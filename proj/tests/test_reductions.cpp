#include <doctest.h>

#include "pmvc/errors.hpp"
#include "pmvc/oracle.hpp"
#include "pmvc/reductions.hpp"
#include "pmvc/tree_decomposition.hpp"
#include "support.hpp"

using namespace pmvc;
using namespace pmvc::testing;
using SC = SymmetricConstraint;

namespace {

// Component sizes of the underlying graph.
std::vector<int> component_sizes(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0), sizes;
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int id : g.incident(v)) {
        const int w = g.edge(id).other(v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

TEST_CASE("dimacs parsing") {
  const CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2\n 0\n");
  CHECK(f.variables == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 3});
  CHECK(f.clauses[1] == std::array<int, 3>{-1, 2, 2});
  CHECK(parse_dimacs("p cnf 1 1\n1 0\n%\n0\n").clauses[0] == std::array<int, 3>{1, 1, 1});
  CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 5 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 2 0\n"), InputError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), InputError);
  const CnfFormula round = parse_dimacs(to_dimacs(f));
  CHECK(round.clauses == f.clauses);
}

TEST_CASE("single clause gadget") {
  CnfFormula f;
  f.variables = 3;
  f.clauses = {{1, -2, 3}};
  const auto r = sat3_to_dd(f);
  CHECK(r.graph.vertex_count() == 6);
  CHECK(r.graph.edge_count() == 15);
  int clause_edges = 0;
  std::vector<int> clause_colors;
  for (const Edge& e : r.graph.edges())
    if (e.u == r.map.clauses[0].u || e.v == r.map.clauses[0].u) {
      ++clause_edges;
      clause_colors.push_back(e.color_u);
    }
  CHECK(clause_edges == 3);
  CHECK(clause_colors == std::vector<int>{kRed, kBlue, kRed});
  // three singleton classes: the diagram accepts every coloring
  CHECK(r.dd.evaluate(VertexColoring({1, 2, 1, 2, 1, 2})));
  CHECK(r.dd.evaluate(VertexColoring({2, 1, 2, 1, 2, 1})));

  // u matched with the first literal vertex over the red edge sets x = true
  const auto pms = enumerate_pms(r.graph);
  bool seen = false;
  for (const auto& em : pms) {
    if (!r.dd.evaluate(em.coloring)) continue;
    const auto s = decode_assignment(em.matching, r.map, r.graph);
    CHECK(evaluate_cnf(f, s));
    if (std::find(em.matching.edge_ids.begin(), em.matching.edge_ids.end(), 0) != em.matching.edge_ids.end()) {
      CHECK(s[0]);
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("unsatisfiable padded formula") {
  const CnfFormula f = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
  CHECK_FALSE(truth_table_sat(f));
  const auto r = sat3_to_dd(f);
  CHECK_FALSE(oracle_dd(r.graph, r.dd).found);
}

TEST_CASE("mixed class cannot be decoded") {
  CnfFormula f;
  f.variables = 1;
  f.clauses = {{1, 1, -1}};
  const auto r = sat3_to_dd(f);
  for (const auto& em : enumerate_pms(r.graph)) {
    if (r.dd.evaluate(em.coloring)) continue;
    CHECK_THROWS_AS(decode_assignment(em.matching, r.map, r.graph), InputError);
    break;
  }
}

TEST_CASE("sat3 reduction agrees with truth tables") {
  for (int i = 0; i < 120; ++i) {
    Rng rng = test_rng(60, static_cast<std::uint64_t>(i));
    const int vars = pick(rng, 1, 6);
    const CnfFormula f = random_cnf(rng, vars, pick(rng, 1, 10));
    const auto r = sat3_to_dd(f);
    const auto sat = truth_table_sat(f);
    CHECK(r.graph.vertex_count() == 6 * static_cast<int>(f.clauses.size()));
    CHECK(is_bipartite(r.graph));
    for (const Edge& e : r.graph.edges()) CHECK(e.monochromatic());
    for (int size : component_sizes(r.graph)) CHECK(size <= 6);
    CHECK(heuristic_td(r.graph).width() <= 5);
    int bound = 0;
    for (const auto& cls : r.map.classes) bound += 2 * static_cast<int>(cls.size()) + 2;
    CHECK(r.dd.node_count() <= std::max(bound, 2));
    const auto found = oracle_dd(r.graph, r.dd);
    CHECK(found.found == sat.has_value());
    if (found.found) CHECK(evaluate_cnf(f, decode_assignment(*found.witness, r.map, r.graph)));
    if (sat) {
      const PerfectMatching pm = encode_assignment(f, *sat, r.map, r.graph);
      CHECK(check_perfect_matching(r.graph, pm.edge_ids));
      CHECK(r.dd.evaluate(inherited_coloring(r.graph, pm)));
      CHECK(decode_assignment(pm, r.map, r.graph) == *sat);
    }
  }
}

TEST_CASE("gadget map JSON") {
  Rng rng = test_rng(61);
  const auto r = sat3_to_dd(random_cnf(rng, 4, 3));
  const GadgetMap back = gadget_map_from_json(gadget_map_to_json(r.map));
  CHECK(back.classes == r.map.classes);
  REQUIRE(back.clauses.size() == r.map.clauses.size());
  CHECK(back.clauses[2].w == r.map.clauses[2].w);
}

TEST_CASE("xpm reduction") {
  const Graph red(2, 2, {{1, 2, 1, 1}});
  const auto zero = xpm_to_sym(red, 0);
  CHECK(zero.constraint == SC::count_eq(1, 0));
  CHECK_FALSE(oracle_sym(zero.graph, zero.constraint).found);
  const auto one = xpm_to_sym(red, 1);
  CHECK(oracle_sym(one.graph, one.constraint).found);
  CHECK_THROWS_AS(xpm_to_sym(Graph(2, 2, {{1, 2, 1, 2}}), 1), InputError);
  CHECK_THROWS_AS(xpm_to_sym(Graph(2, 3, {{1, 2, 1, 1}}), 1), InputError);
  CHECK_THROWS_AS(xpm_to_sym(red, -1), InputError);
}

TEST_CASE("xpm reduction agrees with counting red edges") {
  for (int i = 0; i < 100; ++i) {
    Rng rng = test_rng(62, static_cast<std::uint64_t>(i));
    const Graph g = random_red_blue_graph(rng, 2 * pick(rng, 1, 4));
    const auto pms = enumerate_pms(g);
    for (int k = 0; k <= g.vertex_count() / 2; ++k) {
      bool direct = false;
      for (const auto& em : pms) {
        int reds = 0;
        for (int id : em.matching.edge_ids) reds += g.edge(id).color_u == kRed;
        direct = direct || reds == k;
      }
      const auto red = xpm_to_sym(g, k);
      CHECK(oracle_sym(red.graph, red.constraint).found == direct);
    }
  }
}

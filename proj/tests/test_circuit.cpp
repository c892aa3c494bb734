#include <doctest.h>

#include <set>

#include "pmvc/circuit.hpp"
#include "pmvc/errors.hpp"
#include "pmvc/oracle.hpp"
#include "support.hpp"

using namespace pmvc;
using namespace pmvc::testing;
using SC = SymmetricConstraint;

namespace {

// Crystals I..VII on four paths; coincidences use {I,II}, {I,III},
// {IV,VI} and {V,VII}.
CircuitSpec seven_crystals() {
  CircuitSpec spec;
  spec.paths = 4;
  spec.modes = 2;
  spec.crystals = {{1, 2, 1, 1, {}}, {3, 4, 1, 1, {}}, {3, 4, 1, 2, 0.5}, {1, 3, 2, 2, {}},
                   {1, 4, 1, 2, {}}, {2, 4, 2, 1, {}}, {2, 3, 2, 2, {}}};
  return spec;
}

}  // namespace

TEST_CASE("empty circuit") {
  const Graph g = circuit_to_graph(CircuitSpec{});
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("seven-crystal circuit coincidences") {
  const Graph g = circuit_to_graph(seven_crystals());
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 7);
  std::set<std::vector<int>> got;
  for (const auto& em : enumerate_pms(g)) got.insert(em.matching.edge_ids);
  const std::set<std::vector<int>> expected{{0, 1}, {0, 2}, {3, 5}, {4, 6}};
  CHECK(got == expected);
}

TEST_CASE("circuit JSON and validation") {
  const CircuitSpec spec = seven_crystals();
  const CircuitSpec back = parse_circuit(circuit_to_json(spec).dump());
  REQUIRE(back.crystals.size() == 7);
  CHECK(back.crystals[2].amplitude == 0.5);
  CHECK_FALSE(back.crystals[0].amplitude);
  CHECK(circuit_to_graph(back) == circuit_to_graph(spec));
  CHECK_THROWS_AS(parse_circuit(R"({"paths":2,"modes":1,"crystals":[{"a":1,"b":1,"ma":1,"mb":1}]})"), InputError);
  CHECK_THROWS_AS(parse_circuit(R"({"paths":2,"modes":1,"crystals":[{"a":1,"b":3,"ma":1,"mb":1}]})"), InputError);
  CHECK_THROWS_AS(parse_circuit(R"({"paths":2,"modes":1,"crystals":[{"a":1,"b":2,"ma":1,"mb":2}]})"), InputError);
  CHECK_THROWS_AS(parse_circuit(R"({"paths":2,"modes":1})"), InputError);
}

TEST_CASE("state constraints") {
  CHECK(state_constraint({StateKind::Name::GHZ, 0, {}}, 4, 2) == SC::any_of({SC::count_eq(1, 4), SC::count_eq(2, 4)}));
  CHECK(state_constraint({StateKind::Name::W, 0, {}}, 4, 2) == SC::count_eq(1, 3));
  CHECK(state_constraint({StateKind::Name::Dicke, 0, {}}, 6, 3) == SC::count_eq(1, 6));
  CHECK(state_constraint({StateKind::Name::GeneralDicke, 0, {1, 2, 1}}, 4, 3) ==
        SC::all_of({SC::count_eq(1, 1), SC::count_eq(2, 2), SC::count_eq(3, 1)}));
  CHECK_THROWS_AS(state_constraint({StateKind::Name::Dicke, 5, {}}, 4, 2), InputError);
  CHECK_THROWS_AS(state_constraint({StateKind::Name::GeneralDicke, 0, {1, 2}}, 4, 2), InputError);
  CHECK_THROWS_AS(state_constraint({StateKind::Name::GeneralDicke, 0, {4}}, 4, 2), InputError);
}

TEST_CASE("W equals Dicke(1) on every count vector") {
  for (int n = 1; n <= 10; ++n)
    for (int d = 1; d <= 3; ++d) {
      const SC w = state_constraint(parse_state_kind("w"), n, d);
      const SC dicke = state_constraint(parse_state_kind("dicke:1"), n, d);
      const auto lw = legal_count_vectors(w, n, d);
      CHECK(lw == legal_count_vectors(dicke, n, d));
    }
}

TEST_CASE("state names") {
  CHECK(parse_state_kind("ghz").name == StateKind::Name::GHZ);
  CHECK(parse_state_kind("dicke:3").k == 3);
  CHECK(parse_state_kind("general-dicke:2,0,2").occupation == std::vector<int>{2, 0, 2});
  CHECK_THROWS_AS(parse_state_kind("dicke"), InputError);
  CHECK_THROWS_AS(parse_state_kind("dicke:x"), InputError);
  CHECK_THROWS_AS(parse_state_kind("ghz:1"), InputError);
  CHECK_THROWS_AS(parse_state_kind("noon"), InputError);
}

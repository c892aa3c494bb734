#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pmvc/constraint.hpp"
#include "pmvc/graph.hpp"

namespace pmvc {

// A crystal emits a photon pair into paths a and b with modes ma and mb.
struct Crystal {
  int a = 0;
  int b = 0;
  int ma = 1;
  int mb = 1;
  std::optional<double> amplitude;  // carried through, never used
};

struct CircuitSpec {
  int paths = 0;
  int modes = 1;
  std::vector<Crystal> crystals;
};

// Throws InputError naming the first bad crystal.
void validate_circuit(const CircuitSpec& spec);

// One vertex per path, one color per mode, one edge per crystal (edge id =
// crystal index).
Graph circuit_to_graph(const CircuitSpec& spec);

CircuitSpec circuit_from_json(const nlohmann::json& j);
CircuitSpec parse_circuit(std::string_view text);
nlohmann::json circuit_to_json(const CircuitSpec& spec);

struct StateKind {
  enum class Name { GHZ, W, Dicke, GeneralDicke };
  Name name = Name::GHZ;
  int k = 0;                    // Dicke
  std::vector<int> occupation;  // GeneralDicke: counts for colors 1..d
};

// "ghz", "w", "dicke:K", "general-dicke:K1,K2,...". Throws InputError.
StateKind parse_state_kind(std::string_view text);

// GHZ: some color covers all n vertices. Dicke(k): color 1 on n-k vertices.
// W = Dicke(1). GeneralDicke: color i on exactly occupation[i-1] vertices.
// Throws InputError when parameters fall outside 0..n or do not fit d.
SymmetricConstraint state_constraint(const StateKind& kind, int n, int d);

}  // namespace pmvc

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pmvc/graph.hpp"

namespace pmvc {

struct TreeDecomposition {
  std::map<int, std::vector<int>> bags;  // node id -> sorted vertex list
  std::vector<std::pair<int, int>> edges;
  int root = 0;

  // Largest bag size minus one; -1 for an empty decomposition.
  int width() const;
};

struct TdDiagnostics {
  bool valid = true;
  std::string message;  // first violation found, empty when valid
};

// Tree shape, vertex and edge coverage, and connectivity of each vertex's bags.
TdDiagnostics validate_td(const Graph& g, const TreeDecomposition& td);

// Min-degree elimination (ties to the lowest index) on the underlying simple
// graph; bags contained in a neighboring bag are contracted away.
TreeDecomposition heuristic_td(const Graph& g);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<int> bag;  // sorted
  int vertex = 0;        // introduced / forgotten vertex, or the leaf's vertex
  std::vector<int> children;
};

struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;  // children precede parents
  int root = -1;                // -1 only when there are no nodes

  int width() const;
  TreeDecomposition as_td() const;
};

// Throws InputError when the tree shape or vertex connectivity is broken.
// Edge coverage needs the graph and is checked by validate_td.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

// Kind invariants plus: an introduced vertex occurs nowhere below its node,
// and a join bag equals the intersection of the vertices below each child.
TdDiagnostics check_nice_invariants(const NiceTreeDecomposition& ntd);

TreeDecomposition td_from_json(const nlohmann::json& j);
TreeDecomposition parse_td(std::string_view text);
nlohmann::json td_to_json(const TreeDecomposition& td);

std::string to_string(NiceKind k);

}  // namespace pmvc

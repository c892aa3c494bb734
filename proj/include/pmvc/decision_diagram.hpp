#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pmvc/constraint.hpp"
#include "pmvc/graph.hpp"

namespace pmvc {

// Reference to a DD node: a non-negative node index or one of the terminals.
using NodeRef = int;
inline constexpr NodeRef kTrueNode = -1;
inline constexpr NodeRef kFalseNode = -2;

struct DDNode {
  int vertex = 0;
  std::vector<NodeRef> children;  // children[c-1] is followed on color c
};

// Ordered multivalued decision diagram over vertex colors. Vertices that no
// node on the evaluation path tests are unconstrained.
class DecisionDiagram {
 public:
  // Constant diagram.
  DecisionDiagram(int d, bool value);
  // Validates structure; throws InputError on any violation.
  DecisionDiagram(int d, std::vector<int> order, std::vector<DDNode> nodes, NodeRef root);

  int color_count() const { return d_; }
  const std::vector<int>& order() const { return order_; }
  const std::vector<DDNode>& nodes() const { return nodes_; }
  NodeRef root() const { return root_; }

  // Non-terminal nodes plus the two terminals.
  int node_count() const { return static_cast<int>(nodes_.size()) + 2; }
  // Vertices labelling at least one node.
  std::vector<int> tested_vertices() const;

  bool evaluate(const VertexColoring& c) const;

 private:
  void validate() const;

  int d_;
  std::vector<int> order_;
  std::vector<DDNode> nodes_;
  NodeRef root_;
};

inline bool dd_evaluate(const DecisionDiagram& dd, const VertexColoring& c) { return dd.evaluate(c); }

// Accepts exactly the colorings giving all `vertices` one common color.
DecisionDiagram dd_all_equal(const std::vector<int>& vertices, int d, const std::vector<int>& order);

// Conjunction of diagrams over disjoint vertex sets, formed by redirecting
// every True edge of `a` to the root of `b`.
DecisionDiagram dd_conjoin_disjoint(const DecisionDiagram& a, const DecisionDiagram& b);

// Layered diagram for a symmetric constraint over the vertices in `order`
// (one layer per vertex, one node per reachable partial count vector).
DecisionDiagram dd_from_symmetric(const SymmetricConstraint& c, const std::vector<int>& order, int d);

DecisionDiagram dd_from_json(const nlohmann::json& j, int d);
DecisionDiagram parse_dd(std::string_view text, int d);
nlohmann::json dd_to_json(const DecisionDiagram& dd);

}  // namespace pmvc

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pmvc {

// An edge with one color per endpoint. Vertices and colors are 1-based.
struct Edge {
  int u = 0;
  int v = 0;
  int color_u = 1;
  int color_v = 1;

  bool monochromatic() const { return color_u == color_v; }
  // Color this edge assigns to `vertex`, which must be one of its endpoints.
  int color_at(int vertex) const { return vertex == u ? color_u : color_v; }
  int other(int vertex) const { return vertex == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with bi-colored edges. Parallel edges are kept as
// distinct edges; self-loops are rejected. Edge ids are positions in edges().
class Graph {
 public:
  Graph() = default;
  // Throws InputError naming the offending edge index.
  Graph(int n, int d, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int color_count() const { return d_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  // Edge ids incident to v, ascending.
  const std::vector<int>& incident(int v) const { return incident_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int d_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_{1};
};

// Total map from vertex (1..n) to color (1..d).
class VertexColoring {
 public:
  VertexColoring() = default;
  explicit VertexColoring(std::vector<int> colors) : colors_(std::move(colors)) {}

  int operator()(int vertex) const { return colors_.at(static_cast<std::size_t>(vertex - 1)); }
  int size() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }

  // Per-color counts, indexed 0..d-1 for colors 1..d.
  std::vector<int> counts(int d) const;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
  friend auto operator<=>(const VertexColoring&, const VertexColoring&) = default;

 private:
  std::vector<int> colors_;
};

// A set of edge ids, kept sorted ascending.
struct PerfectMatching {
  std::vector<int> edge_ids;

  PerfectMatching() = default;
  explicit PerfectMatching(std::vector<int> ids);

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;
  friend auto operator<=>(const PerfectMatching&, const PerfectMatching&) = default;
};

// True iff `edge_ids` is vertex-disjoint and covers every vertex.
// Throws InputError on an out-of-range edge id.
bool check_perfect_matching(const Graph& g, std::span<const int> edge_ids);

// Coloring inherited from the matched edge at each vertex.
// Throws InputError if `p` is not a perfect matching of `g`.
VertexColoring inherited_coloring(const Graph& g, const PerfectMatching& p);

// JSON graph format: {"n":int,"d":int,"edges":[[u,v,cu,cv],...]}.
Graph parse_graph(std::string_view text);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
std::string serialize_graph(const Graph& g);

}  // namespace pmvc

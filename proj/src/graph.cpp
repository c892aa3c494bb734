#include "pmvc/graph.hpp"

#include <algorithm>
#include <string>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

Graph::Graph(int n, int d, std::vector<Edge> edges) : n_(n), d_(d), edges_(std::move(edges)) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  if (d < 1) throw InputError("color count must be at least 1");
  incident_.assign(static_cast<std::size_t>(n) + 1, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
      throw InputError(where + "endpoint out of range 1.." + std::to_string(n));
    if (e.u == e.v) throw InputError(where + "self-loop at vertex " + std::to_string(e.u));
    if (e.color_u < 1 || e.color_u > d || e.color_v < 1 || e.color_v > d)
      throw InputError(where + "color out of range 1.." + std::to_string(d));
    incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
}

std::vector<int> VertexColoring::counts(int d) const {
  std::vector<int> out(static_cast<std::size_t>(d), 0);
  for (int c : colors_) {
    if (c < 1 || c > d) throw InputError("coloring uses color " + std::to_string(c) + " outside 1.." + std::to_string(d));
    ++out[static_cast<std::size_t>(c - 1)];
  }
  return out;
}

PerfectMatching::PerfectMatching(std::vector<int> ids) : edge_ids(std::move(ids)) {
  std::sort(edge_ids.begin(), edge_ids.end());
}

bool check_perfect_matching(const Graph& g, std::span<const int> edge_ids) {
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int id : edge_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= g.edge_count())
      throw InputError("edge id " + std::to_string(id) + " out of range");
  }
  for (int id : edge_ids) {
    const Edge& e = g.edge(id);
    if (covered[static_cast<std::size_t>(e.u)] || covered[static_cast<std::size_t>(e.v)]) return false;
    covered[static_cast<std::size_t>(e.u)] = covered[static_cast<std::size_t>(e.v)] = 1;
  }
  return 2 * edge_ids.size() == static_cast<std::size_t>(g.vertex_count());
}

VertexColoring inherited_coloring(const Graph& g, const PerfectMatching& p) {
  if (!check_perfect_matching(g, p.edge_ids)) throw InputError("edge set is not a perfect matching");
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int id : p.edge_ids) {
    const Edge& e = g.edge(id);
    colors[static_cast<std::size_t>(e.u - 1)] = e.color_u;
    colors[static_cast<std::size_t>(e.v - 1)] = e.color_v;
  }
  return VertexColoring(std::move(colors));
}

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InputError(std::string("graph: missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

}  // namespace

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph: expected a JSON object");
  const int n = require_int(j, "n");
  const int d = require_int(j, "d");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw InputError("graph: missing array 'edges'");
  std::vector<Edge> edges;
  const json& arr = j.at("edges");
  edges.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& e = arr[i];
    if (!e.is_array() || e.size() != 4 ||
        !std::all_of(e.begin(), e.end(), [](const json& x) { return x.is_number_integer(); }))
      throw InputError("edge " + std::to_string(i) + ": expected [u, v, color_u, color_v]");
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
  }
  return Graph(n, d, std::move(edges));
}

Graph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("graph: malformed JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.color_u, e.color_v});
  return {{"n", g.vertex_count()}, {"d", g.color_count()}, {"edges", std::move(edges)}};
}

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

}  // namespace pmvc

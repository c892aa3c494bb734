#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pmvc/graph.hpp"

namespace pmvc {

// Edmonds' blossom algorithm on a simple undirected graph with vertices
// 0..n-1. Returns mate[v] (or -1 when v is exposed) for a maximum matching.
std::vector<int> maximum_cardinality_matching(int n, const std::vector<std::vector<int>>& adjacency);

// Perfect matching of the uncolored graph (parallel edges collapsed, colors
// ignored). Each matched pair uses its lowest edge id.
std::optional<PerfectMatching> find_perfect_matching(const Graph& g);

bool blossom_has_pm(const Graph& g);

// Edges whose endpoint colors agree with `c`.
Graph restrict_to_coloring(const Graph& g, const VertexColoring& c, std::vector<int>* original_ids = nullptr);

struct ExplicitResult {
  bool found = false;
  std::optional<PerfectMatching> witness;
  std::optional<VertexColoring> coloring;
};

// Decides whether some coloring in the list is inherited by a perfect
// matching, by running the blossom algorithm on each color-filtered subgraph.
ExplicitResult solve_explicit(const Graph& g, std::span<const VertexColoring> colorings);

}  // namespace pmvc

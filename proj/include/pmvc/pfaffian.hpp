#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pmvc/algebraic.hpp"
#include "pmvc/constraint.hpp"
#include "pmvc/graph.hpp"

namespace pmvc {

// Combinatorial embedding: for each vertex, the cyclic order of its incident
// edge ids. rotation[v-1] lists the edges around vertex v.
struct PlanarEmbedding {
  std::vector<std::vector<int>> rotation;
};

// Directed edge: edge id plus the endpoint it leaves from.
struct Dart {
  int edge = 0;
  int tail = 0;
};

// Boundary walks of the embedding's faces.
std::vector<std::vector<Dart>> trace_faces(const Graph& g, const PlanarEmbedding& emb);

// Checks that the rotation lists each incident edge exactly once and that
// every connected component satisfies V - E + F = 2. Throws InputError.
void validate_embedding(const Graph& g, const PlanarEmbedding& emb);

// Kasteleyn signs for every edge-bearing vertex pair: +1/-1 values making all
// perfect-matching terms of the Pfaffian of the adapted Tutte matrix share
// one sign. Parallel edges share their pair's sign.
XAssignment pfaffian_orientation(const Graph& g, const PlanarEmbedding& emb);

// Deterministic decision at the Pfaffian orientation; positive answers are
// verified through extract_pm_sym seeded with `seed`.
TriStateAnswer planar_decide_sym(const Graph& g, const PlanarEmbedding& emb, const SymmetricConstraint& c,
                                 std::uint64_t seed = 0, bool verify = true, int extraction_rounds = 20);

PlanarEmbedding embedding_from_json(const nlohmann::json& j);
PlanarEmbedding parse_embedding(std::string_view text);
nlohmann::json embedding_to_json(const PlanarEmbedding& emb);

}  // namespace pmvc

#pragma once

#include <optional>
#include <vector>

#include "pmvc/constraint.hpp"
#include "pmvc/decision_diagram.hpp"
#include "pmvc/graph.hpp"
#include "pmvc/poly_matrix.hpp"

namespace pmvc {

inline constexpr int kDefaultOracleLimit = 14;
inline constexpr int kNaiveDetLimit = 8;
// oracle_dd searches with pruning instead of listing every matching.
inline constexpr int kDdOracleLimit = 64;

struct EnumeratedMatching {
  PerfectMatching matching;
  VertexColoring coloring;
};

// Every perfect matching exactly once with its inherited coloring, sorted by
// edge-id sequence. Throws ResourceLimit when n exceeds `limit`.
std::vector<EnumeratedMatching> enumerate_pms(const Graph& g, int limit = kDefaultOracleLimit);

struct OracleResult {
  bool found = false;
  std::optional<PerfectMatching> witness;
};

OracleResult oracle_sym(const Graph& g, const SymmetricConstraint& c, int limit = kDefaultOracleLimit);
// Exhaustive backtracking over partial matchings; a branch is cut when the
// diagram rejects every completion of the colors fixed so far, and failed
// partial colorings are remembered.
OracleResult oracle_dd(const Graph& g, const DecisionDiagram& dd, int limit = kDdOracleLimit);

// Cofactor expansion along the first row. Throws ResourceLimit above
// kNaiveDetLimit.
Polynomial naive_det(const PolyMatrix& m);

}  // namespace pmvc

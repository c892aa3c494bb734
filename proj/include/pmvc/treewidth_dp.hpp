#pragma once

#include <cstddef>
#include <optional>

#include "pmvc/constraint.hpp"
#include "pmvc/graph.hpp"
#include "pmvc/tree_decomposition.hpp"

namespace pmvc {

struct DpResult {
  bool found = false;
  std::optional<PerfectMatching> witness;  // set iff found
  std::size_t states = 0;                  // reachable states over all nodes
};

// Exact dynamic program over a nice decomposition. A state at node X is a
// partial coloring of bag(X) (0 = unmatched) and the color counts of every
// matched vertex below X. Throws InputError when `ntd` is not a valid nice
// decomposition of `g` or the constraint mentions a color above d.
DpResult dp_solve_sym(const Graph& g, const SymmetricConstraint& c, const NiceTreeDecomposition& ntd);

}  // namespace pmvc

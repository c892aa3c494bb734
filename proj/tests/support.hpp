// Random instance generators and independent reference checks shared by the
// unit tests and the acceptance runner.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "pmvc/algebraic.hpp"
#include "pmvc/constraint.hpp"
#include "pmvc/graph.hpp"
#include "pmvc/poly_matrix.hpp"
#include "pmvc/random.hpp"
#include "pmvc/reductions.hpp"

namespace pmvc::testing {

inline Rng test_rng(std::uint64_t seed, std::uint64_t index = 0) {
  return Rng(derive_seed(seed, Stream::Test, index));
}

inline int pick(Rng& rng, int lo, int hi) { return static_cast<int>(rng.uniform(lo, hi)); }

// Each vertex pair gets an edge with probability `density`, plus a parallel
// copy with probability `parallel`; endpoint colors agree with probability `mono`.
inline Graph random_graph(Rng& rng, int n, int d, double density = 0.5, double parallel = 0.2, double mono = 0.5) {
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    const int cu = pick(rng, 1, d);
    const int cv = rng.coin(mono) ? cu : pick(rng, 1, d);
    edges.push_back({u, v, cu, cv});
  };
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (!rng.coin(density)) continue;
      add(u, v);
      if (rng.coin(parallel)) add(v, u);
    }
  // Shuffle so edge ids do not follow vertex order.
  for (std::size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  return Graph(n, d, std::move(edges));
}

// Red/blue graph with only monochromatic edges.
inline Graph random_red_blue_graph(Rng& rng, int n, double density = 0.5) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      while (rng.coin(density * 0.8 + 0.1) && edges.size() < 64) {
        const int c = pick(rng, 1, 2);
        edges.push_back({u, v, c, c});
        if (!rng.coin(0.25)) break;
      }
  return Graph(n, 2, std::move(edges));
}

inline SymmetricConstraint random_atom(Rng& rng, int n, int d) {
  const int color = pick(rng, 1, d);
  const int k = pick(rng, 0, n);
  switch (pick(rng, 0, 2)) {
    case 0: return SymmetricConstraint::count_eq(color, k);
    case 1: return SymmetricConstraint::count_ge(color, k);
    default: return SymmetricConstraint::count_le(color, k);
  }
}

inline SymmetricConstraint random_constraint(Rng& rng, int n, int d, int depth = 2) {
  if (depth == 0 || rng.coin(0.4)) return random_atom(rng, n, d);
  switch (pick(rng, 0, 2)) {
    case 0: return SymmetricConstraint::all_of({random_constraint(rng, n, d, depth - 1), random_constraint(rng, n, d, depth - 1)});
    case 1: return SymmetricConstraint::any_of({random_constraint(rng, n, d, depth - 1), random_constraint(rng, n, d, depth - 1)});
    default: return SymmetricConstraint::negate(random_constraint(rng, n, d, depth - 1));
  }
}

inline VertexColoring random_coloring(Rng& rng, int n, int d) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int& x : c) x = pick(rng, 1, d);
  return VertexColoring(std::move(c));
}

struct Instance {
  Graph g;
  SymmetricConstraint c;
};

// Even n in 2..10, d in 1..3. Half of the constraints pin the count vector
// of a random coloring so that yes- and no-instances both occur often.
inline std::vector<Instance> instance_corpus(std::uint64_t seed, int count) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    Rng rng = test_rng(seed, static_cast<std::uint64_t>(i));
    const int n = 2 * pick(rng, 1, 5);
    const int d = pick(rng, 1, 3);
    Graph g = random_graph(rng, n, d, 0.35 + 0.4 * static_cast<double>(pick(rng, 0, 10)) / 10.0);
    SymmetricConstraint c = random_constraint(rng, n, d);
    if (rng.coin(0.5)) {
      const auto counts = random_coloring(rng, n, d).counts(d);
      std::vector<SymmetricConstraint> atoms;
      for (int col = 1; col <= d; ++col) atoms.push_back(SymmetricConstraint::count_eq(col, counts[static_cast<std::size_t>(col - 1)]));
      c = SymmetricConstraint::all_of(std::move(atoms));
    }
    out.push_back({std::move(g), std::move(c)});
  }
  return out;
}

inline Polynomial random_poly(Rng& rng, int d, int terms, int max_deg, int coeff = 5) {
  Polynomial p(d);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    const int deg = pick(rng, 0, max_deg);
    for (int k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(pick(rng, 0, d - 1))];
    p += Polynomial::monomial(d, Monomial(e), Integer(static_cast<long>(pick(rng, -coeff, coeff))));
  }
  return p;
}

// Sum of a few y_a y_b terms: homogeneous of degree 2, or zero.
inline Polynomial random_quadratic(Rng& rng, int d) {
  Polynomial p(d);
  const int terms = pick(rng, 0, 3);
  for (int t = 0; t < terms; ++t)
    p += Polynomial::monomial(d, Monomial::variable(pick(rng, 1, d)) * Monomial::variable(pick(rng, 1, d)),
                              Integer(static_cast<long>(pick(rng, -4, 4))));
  return p;
}

inline PolyMatrix random_skew_matrix(Rng& rng, int n, int d, double fill = 0.7) {
  PolyMatrix m(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      if (!rng.coin(fill)) continue;
      const Polynomial p = random_quadratic(rng, d);
      m(i, j) = p;
      m(j, i) = -p;
    }
  return m;
}

inline PolyMatrix random_matrix(Rng& rng, int n, int d) {
  PolyMatrix m(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.coin(0.7)) m(i, j) = random_poly(rng, d, 2, 2);
  return m;
}

// Perfect-matching existence by exhaustive search over vertex subsets.
inline bool brute_has_pm(const Graph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return false;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)] |= 1u << (e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)] |= 1u << (e.u - 1);
  }
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  auto solve = [&](auto&& self, std::uint32_t left) -> bool {
    if (left == 0) return true;
    signed char& m = memo[left];
    if (m >= 0) return m;
    const int v = __builtin_ctz(left);
    bool ok = false;
    for (std::uint32_t rest = adj[static_cast<std::size_t>(v)] & left; rest && !ok; rest &= rest - 1)
      ok = self(self, left & ~(1u << v) & ~(rest & -rest));
    m = ok;
    return ok;
  };
  return solve(solve, n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1));
}

// Sign of the Pfaffian term of matching `p` in the adapted Tutte matrix under
// x: pairs (i<j) listed by increasing i, permutation sign times the signs of
// the above-diagonal entries, which carry -x.
inline int pfaffian_term_sign(const Graph& g, const PerfectMatching& p, const XAssignment& x) {
  std::vector<std::pair<int, int>> pairs;
  for (int id : p.edge_ids) {
    const Edge& e = g.edge(id);
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> perm;
  int sign = 1;
  for (const auto& [i, j] : pairs) {
    perm.push_back(i);
    perm.push_back(j);
    if (-x.at(i, j) < 0) sign = -sign;
  }
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) sign = -sign;
  return sign;
}

inline CnfFormula random_cnf(Rng& rng, int vars, int clauses) {
  CnfFormula f;
  f.variables = vars;
  for (int i = 0; i < clauses; ++i) {
    std::array<int, 3> c{};
    for (int& lit : c) lit = pick(rng, 1, vars) * (rng.coin(0.5) ? 1 : -1);
    f.clauses.push_back(c);
  }
  return f;
}

// Satisfiability by trying every assignment.
inline std::optional<std::vector<bool>> truth_table_sat(const CnfFormula& f) {
  for (std::uint32_t mask = 0; mask < (1u << f.variables); ++mask) {
    std::vector<bool> s(static_cast<std::size_t>(f.variables));
    for (int x = 0; x < f.variables; ++x) s[static_cast<std::size_t>(x)] = (mask >> x) & 1u;
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (int lit : clause) any = any || s[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
      all = all && any;
    }
    if (all) return s;
  }
  return std::nullopt;
}

// True when no edge joins two vertices of the same side of some 2-coloring.
inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int id : g.incident(v)) {
        const int w = g.edge(id).other(v);
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Four-cycle 1-2-3-4 with monochromatic edges red, blue, red, blue.
inline Graph alternating_c4() {
  return Graph(4, 2, {{1, 2, 1, 1}, {2, 3, 2, 2}, {3, 4, 1, 1}, {4, 1, 2, 2}});
}

}  // namespace pmvc::testing

#include "pmvc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "pmvc/errors.hpp"

namespace pmvc {

namespace {

void enumerate_from(const Graph& g, std::vector<char>& covered, std::vector<int>& chosen,
                    std::vector<EnumeratedMatching>& out) {
  const int n = g.vertex_count();
  int v = 1;
  while (v <= n && covered[static_cast<std::size_t>(v)]) ++v;
  if (v > n) {
    PerfectMatching pm(chosen);
    VertexColoring c = inherited_coloring(g, pm);
    out.push_back({std::move(pm), std::move(c)});
    return;
  }
  covered[static_cast<std::size_t>(v)] = 1;
  for (int id : g.incident(v)) {
    const int u = g.edge(id).other(v);
    if (covered[static_cast<std::size_t>(u)]) continue;
    covered[static_cast<std::size_t>(u)] = 1;
    chosen.push_back(id);
    enumerate_from(g, covered, chosen, out);
    chosen.pop_back();
    covered[static_cast<std::size_t>(u)] = 0;
  }
  covered[static_cast<std::size_t>(v)] = 0;
}

void check_limit(const Graph& g, int limit) {
  if (g.vertex_count() > limit)
    throw ResourceLimit("oracle: n = " + std::to_string(g.vertex_count()) + " exceeds the enumeration limit " +
                        std::to_string(limit));
}

}  // namespace

std::vector<EnumeratedMatching> enumerate_pms(const Graph& g, int limit) {
  check_limit(g, limit);
  std::vector<EnumeratedMatching> out;
  if (g.vertex_count() % 2 != 0) return out;
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<int> chosen;
  enumerate_from(g, covered, chosen, out);
  std::sort(out.begin(), out.end(),
            [](const EnumeratedMatching& a, const EnumeratedMatching& b) { return a.matching < b.matching; });
  return out;
}

OracleResult oracle_sym(const Graph& g, const SymmetricConstraint& c, int limit) {
  if (c.max_color() > g.color_count())
    throw InputError("constraint mentions color " + std::to_string(c.max_color()) + " but the graph has d = " +
                     std::to_string(g.color_count()));
  for (auto& em : enumerate_pms(g, limit))
    if (c.evaluate(em.coloring.counts(g.color_count()))) return {true, std::move(em.matching)};
  return {};
}

OracleResult oracle_dd(const Graph& g, const DecisionDiagram& dd, int limit) {
  check_limit(g, limit);
  const int n = g.vertex_count();
  if (dd.color_count() != g.color_count()) throw InputError("decision diagram and graph disagree on d");
  for (int v : dd.tested_vertices())
    if (v < 1 || v > n) throw InputError("decision diagram tests vertex " + std::to_string(v) + " outside the graph");
  if (n % 2 != 0) return {};

  // colors[v] == 0 marks an uncovered vertex, so the vector is the whole state.
  std::string colors(static_cast<std::size_t>(n) + 1, '\0');
  std::set<std::string> failed;
  std::vector<int> chosen;

  const auto feasible = [&] {
    std::map<NodeRef, bool> memo;
    std::function<bool(NodeRef)> reach = [&](NodeRef cur) -> bool {
      if (cur < 0) return cur == kTrueNode;
      if (auto it = memo.find(cur); it != memo.end()) return it->second;
      const DDNode& node = dd.nodes()[static_cast<std::size_t>(cur)];
      const int c = colors[static_cast<std::size_t>(node.vertex)];
      bool ok = false;
      if (c != 0) ok = reach(node.children[static_cast<std::size_t>(c - 1)]);
      else
        for (NodeRef child : node.children) ok = ok || reach(child);
      memo[cur] = ok;
      return ok;
    };
    return reach(dd.root());
  };

  std::function<bool()> search = [&]() -> bool {
    int v = 1;
    while (v <= n && colors[static_cast<std::size_t>(v)] != 0) ++v;
    if (v > n) return true;
    if (failed.count(colors)) return false;
    for (int id : g.incident(v)) {
      const Edge& e = g.edge(id);
      const int u = e.other(v);
      if (colors[static_cast<std::size_t>(u)] != 0) continue;
      colors[static_cast<std::size_t>(v)] = static_cast<char>(e.color_at(v));
      colors[static_cast<std::size_t>(u)] = static_cast<char>(e.color_at(u));
      chosen.push_back(id);
      if (feasible() && search()) return true;
      chosen.pop_back();
      colors[static_cast<std::size_t>(u)] = 0;
      colors[static_cast<std::size_t>(v)] = 0;
    }
    failed.insert(colors);
    return false;
  };

  if (!feasible() || !search()) return {};
  return {true, PerfectMatching(chosen)};
}

Polynomial naive_det(const PolyMatrix& m) {
  const int n = m.size();
  if (n > kNaiveDetLimit)
    throw ResourceLimit("naive_det: dimension " + std::to_string(n) + " exceeds " + std::to_string(kNaiveDetLimit));
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
  if (n == 1) return m(0, 0);
  Polynomial det(m.nvars());
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Polynomial term = m(0, j) * naive_det(m.minor(0, j));
    if (j % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace pmvc

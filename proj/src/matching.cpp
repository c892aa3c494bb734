#include "pmvc/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pmvc/errors.hpp"

namespace pmvc {

namespace {

// Classic O(V^3) Edmonds search: grow an alternating BFS forest from one
// exposed root, shrinking odd cycles into their base vertex.
class BlossomSearch {
 public:
  BlossomSearch(int n, const std::vector<std::vector<int>>& adj)
      : n_(n), adj_(adj), mate_(n, -1), parent_(n), base_(n), used_(n), blossom_(n) {}

  std::vector<int> run() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int u : adj_[v]) {
        if (mate_[u] == -1) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        const int pv = parent_[end];
        const int ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns the exposed endpoint of an augmenting path from root, or -1.
  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  const std::vector<std::vector<int>>& adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, blossom_;
};

}  // namespace

std::vector<int> maximum_cardinality_matching(int n, const std::vector<std::vector<int>>& adjacency) {
  return BlossomSearch(n, adjacency).run();
}

std::optional<PerfectMatching> find_perfect_matching(const Graph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  // lowest edge id per unordered pair
  std::vector<std::vector<int>> pair_edge(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const int a = e.u - 1, b = e.v - 1;
    if (pair_edge[a][b] != -1) continue;
    pair_edge[a][b] = pair_edge[b][a] = static_cast<int>(i);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const std::vector<int> mate = maximum_cardinality_matching(n, adj);
  std::vector<int> ids;
  for (int v = 0; v < n; ++v) {
    if (mate[v] == -1) return std::nullopt;
    if (v < mate[v]) ids.push_back(pair_edge[v][mate[v]]);
  }
  return PerfectMatching(std::move(ids));
}

bool blossom_has_pm(const Graph& g) { return find_perfect_matching(g).has_value(); }

Graph restrict_to_coloring(const Graph& g, const VertexColoring& c, std::vector<int>* original_ids) {
  if (c.size() != g.vertex_count())
    throw InputError("coloring has " + std::to_string(c.size()) + " entries, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  std::vector<Edge> kept;
  if (original_ids) original_ids->clear();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.color_u == c(e.u) && e.color_v == c(e.v)) {
      kept.push_back(e);
      if (original_ids) original_ids->push_back(static_cast<int>(i));
    }
  }
  return Graph(g.vertex_count(), g.color_count(), std::move(kept));
}

ExplicitResult solve_explicit(const Graph& g, std::span<const VertexColoring> colorings) {
  for (const VertexColoring& c : colorings) {
    std::vector<int> ids;
    const Graph sub = restrict_to_coloring(g, c, &ids);
    if (auto pm = find_perfect_matching(sub)) {
      std::vector<int> mapped;
      for (int id : pm->edge_ids) mapped.push_back(ids[static_cast<std::size_t>(id)]);
      return {true, PerfectMatching(std::move(mapped)), c};
    }
  }
  return {};
}

}  // namespace pmvc

#include "pmvc/treewidth_dp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "pmvc/errors.hpp"

namespace pmvc {

namespace {

struct State {
  std::vector<std::uint8_t> color;  // aligned with the sorted bag
  std::vector<int> counts;          // colors 1..d of matched vertices below
};

struct Pred {
  int first = -1;   // state index in the (first) child
  int second = -1;  // state index in the second child of a join
  int edge = -1;    // edge matched at an introduce node
};

class Table {
 public:
  // Adds the state unless already present; first writer wins.
  void offer(State s, Pred p) {
    std::string key(s.color.begin(), s.color.end());
    for (int k : s.counts) {
      key.push_back(static_cast<char>(k & 0xff));
      key.push_back(static_cast<char>(k >> 8));
    }
    if (index_.emplace(std::move(key), static_cast<int>(states.size())).second) {
      states.push_back(std::move(s));
      preds.push_back(p);
    }
  }

  std::vector<State> states;
  std::vector<Pred> preds;

 private:
  std::unordered_map<std::string, int> index_;
};

std::size_t position(const std::vector<int>& bag, int v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

}  // namespace

DpResult dp_solve_sym(const Graph& g, const SymmetricConstraint& c, const NiceTreeDecomposition& ntd) {
  const int d = g.color_count();
  const int n = g.vertex_count();
  if (c.max_color() > d)
    throw InputError("constraint mentions color " + std::to_string(c.max_color()) + " but the graph has d = " +
                     std::to_string(d));
  if (auto diag = check_nice_invariants(ntd); !diag.valid) throw InputError("nice decomposition: " + diag.message);
  if (auto diag = validate_td(g, ntd.as_td()); !diag.valid) throw InputError("tree decomposition: " + diag.message);

  DpResult result;
  if (ntd.nodes.empty()) {
    // Only the empty graph has an empty decomposition.
    result.found = c.evaluate(CountVector(static_cast<std::size_t>(d), 0));
    if (result.found) result.witness = PerfectMatching{};
    return result;
  }

  std::vector<Table> tables(ntd.nodes.size());
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    const NiceNode& x = ntd.nodes[i];
    Table& t = tables[i];
    switch (x.kind) {
      case NiceKind::Leaf:
        t.offer({{0}, std::vector<int>(static_cast<std::size_t>(d), 0)}, {});
        break;
      case NiceKind::Introduce: {
        const NiceNode& y = ntd.nodes[static_cast<std::size_t>(x.children[0])];
        const Table& child = tables[static_cast<std::size_t>(x.children[0])];
        const std::size_t pv = position(x.bag, x.vertex);
        // One edge per (neighbor, color at neighbor, color at v): the lowest id.
        std::vector<std::tuple<std::size_t, int, int, int>> options;  // child position of u, cu, cv, edge
        std::set<std::tuple<int, int, int>> seen;
        for (int id : g.incident(x.vertex)) {
          const Edge& e = g.edge(id);
          const int u = e.other(x.vertex);
          if (!std::binary_search(y.bag.begin(), y.bag.end(), u)) continue;
          const int cu = e.color_at(u), cv = e.color_at(x.vertex);
          if (seen.insert({u, cu, cv}).second) options.emplace_back(position(y.bag, u), cu, cv, id);
        }
        for (std::size_t s = 0; s < child.states.size(); ++s) {
          const State& st = child.states[s];
          State base = st;
          base.color.insert(base.color.begin() + static_cast<std::ptrdiff_t>(pv), 0);
          t.offer(base, {static_cast<int>(s), -1, -1});
          for (const auto& [pu, cu, cv, id] : options) {
            if (st.color[pu] != 0) continue;
            State next = base;
            next.color[pu < pv ? pu : pu + 1] = static_cast<std::uint8_t>(cu);
            next.color[pv] = static_cast<std::uint8_t>(cv);
            ++next.counts[static_cast<std::size_t>(cu - 1)];
            ++next.counts[static_cast<std::size_t>(cv - 1)];
            t.offer(std::move(next), {static_cast<int>(s), -1, id});
          }
        }
        break;
      }
      case NiceKind::Forget: {
        const NiceNode& y = ntd.nodes[static_cast<std::size_t>(x.children[0])];
        const Table& child = tables[static_cast<std::size_t>(x.children[0])];
        const std::size_t pv = position(y.bag, x.vertex);
        for (std::size_t s = 0; s < child.states.size(); ++s) {
          const State& st = child.states[s];
          if (st.color[pv] == 0) continue;  // a forgotten vertex must already be matched
          State next = st;
          next.color.erase(next.color.begin() + static_cast<std::ptrdiff_t>(pv));
          t.offer(std::move(next), {static_cast<int>(s), -1, -1});
        }
        break;
      }
      case NiceKind::Join: {
        // Each bag vertex is matched inside at most one of the two subtrees.
        const Table& left = tables[static_cast<std::size_t>(x.children[0])];
        const Table& right = tables[static_cast<std::size_t>(x.children[1])];
        for (std::size_t a = 0; a < left.states.size(); ++a) {
          const State& sa = left.states[a];
          for (std::size_t b = 0; b < right.states.size(); ++b) {
            const State& sb = right.states[b];
            State next = sa;
            bool ok = true;
            for (std::size_t k = 0; k < sa.color.size() && ok; ++k) {
              if (sa.color[k] != 0 && sb.color[k] != 0) ok = false;
              else if (sb.color[k] != 0) next.color[k] = sb.color[k];
            }
            if (!ok) continue;
            for (std::size_t k = 0; k < next.counts.size(); ++k) next.counts[k] += sb.counts[k];
            t.offer(std::move(next), {static_cast<int>(a), static_cast<int>(b), -1});
          }
        }
        break;
      }
    }
    result.states += t.states.size();
  }

  const Table& top = tables[static_cast<std::size_t>(ntd.root)];
  int accepted = -1;
  for (std::size_t s = 0; s < top.states.size() && accepted < 0; ++s) {
    const State& st = top.states[s];
    if (std::count(st.color.begin(), st.color.end(), 0) != 0) continue;
    int total = 0;
    for (int k : st.counts) total += k;
    if (total == n && c.evaluate(st.counts)) accepted = static_cast<int>(s);
  }
  if (accepted < 0) return result;

  std::vector<int> edges;
  std::function<void(int, int)> collect = [&](int node, int state) {
    const Pred& p = tables[static_cast<std::size_t>(node)].preds[static_cast<std::size_t>(state)];
    const NiceNode& x = ntd.nodes[static_cast<std::size_t>(node)];
    if (p.edge >= 0) edges.push_back(p.edge);
    if (!x.children.empty()) collect(x.children[0], p.first);
    if (x.children.size() == 2) collect(x.children[1], p.second);
  };
  collect(ntd.root, accepted);
  PerfectMatching pm(std::move(edges));
  if (!check_perfect_matching(g, pm.edge_ids) || !c.evaluate(inherited_coloring(g, pm).counts(d)))
    throw InternalError("dynamic program rebuilt an invalid witness");
  result.found = true;
  result.witness = std::move(pm);
  return result;
}

}  // namespace pmvc

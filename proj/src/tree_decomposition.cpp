#include "pmvc/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <queue>
#include <set>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& [id, bag] : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

namespace {

TdDiagnostics fail(std::string message) { return {false, std::move(message)}; }

using Adjacency = std::map<int, std::vector<int>>;

// Tree shape and connectivity of every vertex's occurrences; fills `adj`.
TdDiagnostics check_structure(const TreeDecomposition& td, Adjacency& adj) {
  adj.clear();
  for (const auto& [id, bag] : td.bags) {
    adj[id];
    for (std::size_t i = 1; i < bag.size(); ++i)
      if (bag[i - 1] >= bag[i]) return fail("bag " + std::to_string(id) + " is not a sorted set");
  }
  if (td.bags.empty()) {
    if (!td.edges.empty()) return fail("edges given without nodes");
    return {};
  }
  for (const auto& [a, b] : td.edges) {
    if (!td.bags.count(a) || !td.bags.count(b))
      return fail("tree edge {" + std::to_string(a) + "," + std::to_string(b) + "} references an unknown node");
    if (a == b) return fail("tree edge at node " + std::to_string(a) + " is a self-loop");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (td.edges.size() + 1 != td.bags.size()) return fail("a tree on k nodes needs k-1 edges");
  if (!td.bags.count(td.root)) return fail("root " + std::to_string(td.root) + " is not a node");
  std::set<int> seen{td.root};
  std::queue<int> q;
  q.push(td.root);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (seen.insert(y).second) q.push(y);
  }
  if (seen.size() != td.bags.size()) return fail("decomposition tree is not connected");

  // Occurrences of a vertex are connected iff the tree edges inside them
  // number one less than the occurrences.
  std::map<int, int> occurrences, inner_edges;
  for (const auto& [id, bag] : td.bags)
    for (int v : bag) ++occurrences[v];
  for (const auto& [a, b] : td.edges) {
    const auto& ba = td.bags.at(a);
    const auto& bb = td.bags.at(b);
    std::vector<int> common;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
    for (int v : common) ++inner_edges[v];
  }
  for (const auto& [v, count] : occurrences)
    if (inner_edges[v] + 1 != count) return fail("bags containing vertex " + std::to_string(v) + " are not connected");
  return {};
}

bool contains(const std::vector<int>& bag, int v) { return std::binary_search(bag.begin(), bag.end(), v); }

}  // namespace

TdDiagnostics validate_td(const Graph& g, const TreeDecomposition& td) {
  Adjacency adj;
  if (auto d = check_structure(td, adj); !d.valid) return d;
  const int n = g.vertex_count();
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [id, bag] : td.bags)
    for (int v : bag) {
      if (v < 1 || v > n) return fail("bag " + std::to_string(id) + " holds vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      covered[static_cast<std::size_t>(v)] = 1;
    }
  for (int v = 1; v <= n; ++v)
    if (!covered[static_cast<std::size_t>(v)]) return fail("vertex " + std::to_string(v) + " is in no bag");
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const bool ok = std::any_of(td.bags.begin(), td.bags.end(),
                                [&](const auto& kv) { return contains(kv.second, e.u) && contains(kv.second, e.v); });
    if (!ok) return fail("edge " + std::to_string(i) + " is not contained in any bag");
  }
  return {};
}

TreeDecomposition heuristic_td(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> nbr(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : g.edges()) {
    nbr[static_cast<std::size_t>(e.u)].insert(e.v);
    nbr[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> step_of(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<int>> bag_at;  // by elimination step
  for (int step = 0; step < n; ++step) {
    int best = 0;
    for (int v = 1; v <= n; ++v)
      if (!gone[static_cast<std::size_t>(v)] &&
          (best == 0 || nbr[static_cast<std::size_t>(v)].size() < nbr[static_cast<std::size_t>(best)].size()))
        best = v;
    const auto& nb = nbr[static_cast<std::size_t>(best)];
    std::vector<int> bag(nb.begin(), nb.end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bag_at.push_back(bag);
    for (int a : nb)
      for (int b : nb)
        if (a != b) nbr[static_cast<std::size_t>(a)].insert(b);
    for (int a : nb) nbr[static_cast<std::size_t>(a)].erase(best);
    gone[static_cast<std::size_t>(best)] = 1;
    step_of[static_cast<std::size_t>(best)] = step;
  }
  // Tree: each step links to the step of its earliest-eliminated neighbor;
  // components' last steps are chained so the result is one tree.
  std::vector<std::set<int>> tree(static_cast<std::size_t>(n));
  int previous_root = -1;
  for (int step = 0; step < n; ++step) {
    int parent = -1;
    for (int v : bag_at[static_cast<std::size_t>(step)]) {
      const int s = step_of[static_cast<std::size_t>(v)];
      if (s > step && (parent < 0 || s < parent)) parent = s;
    }
    if (parent < 0) {
      if (previous_root >= 0) {
        tree[static_cast<std::size_t>(previous_root)].insert(step);
        tree[static_cast<std::size_t>(step)].insert(previous_root);
      }
      previous_root = step;
      continue;
    }
    tree[static_cast<std::size_t>(step)].insert(parent);
    tree[static_cast<std::size_t>(parent)].insert(step);
  }

  // Contract any node whose bag is a subset of a neighbor's bag.
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  int root = n - 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n && !changed; ++x) {
      if (!alive[static_cast<std::size_t>(x)]) continue;
      for (int y : tree[static_cast<std::size_t>(x)]) {
        const auto& bx = bag_at[static_cast<std::size_t>(x)];
        const auto& by = bag_at[static_cast<std::size_t>(y)];
        if (!std::includes(by.begin(), by.end(), bx.begin(), bx.end())) continue;
        for (int z : tree[static_cast<std::size_t>(x)]) {
          tree[static_cast<std::size_t>(z)].erase(x);
          if (z != y) {
            tree[static_cast<std::size_t>(z)].insert(y);
            tree[static_cast<std::size_t>(y)].insert(z);
          }
        }
        tree[static_cast<std::size_t>(x)].clear();
        alive[static_cast<std::size_t>(x)] = 0;
        if (root == x) root = y;
        changed = true;
        break;
      }
    }
  }

  TreeDecomposition td;
  for (int x = 0; x < n; ++x) {
    if (!alive[static_cast<std::size_t>(x)]) continue;
    td.bags[x] = bag_at[static_cast<std::size_t>(x)];
    for (int y : tree[static_cast<std::size_t>(x)])
      if (x < y) td.edges.emplace_back(x, y);
  }
  td.root = n > 0 ? root : 0;
  return td;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::as_td() const {
  TreeDecomposition td;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    td.bags[static_cast<int>(i)] = nodes[i].bag;
    for (int c : nodes[i].children) td.edges.emplace_back(c, static_cast<int>(i));
  }
  td.root = root < 0 ? 0 : root;
  return td;
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(NiceTreeDecomposition& out) : out_(out) {}

  int add(NiceKind kind, std::vector<int> bag, int vertex, std::vector<int> children) {
    out_.nodes.push_back({kind, std::move(bag), vertex, std::move(children)});
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  // Forget what `to` lacks, then introduce what it adds.
  int transition(int from, const std::vector<int>& to) {
    std::vector<int> bag = out_.nodes[static_cast<std::size_t>(from)].bag;
    std::vector<int> drop, gain;
    std::set_difference(bag.begin(), bag.end(), to.begin(), to.end(), std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), bag.begin(), bag.end(), std::back_inserter(gain));
    for (int v : drop) {
      bag.erase(std::find(bag.begin(), bag.end(), v));
      from = add(NiceKind::Forget, bag, v, {from});
    }
    for (int v : gain) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      from = add(NiceKind::Introduce, bag, v, {from});
    }
    return from;
  }

  int leaf_chain(const std::vector<int>& bag) {
    const int leaf = add(NiceKind::Leaf, {bag.front()}, bag.front(), {});
    return transition(leaf, bag);
  }

 private:
  NiceTreeDecomposition& out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  Adjacency adj;
  if (auto d = check_structure(td, adj); !d.valid) throw InputError("tree decomposition: " + d.message);
  NiceTreeDecomposition out;
  if (td.bags.empty()) return out;
  NiceBuilder b(out);

  // Returns a nice node whose bag equals the bag of `x`, or -1 when the
  // subtree holds no vertices at all.
  std::function<int(int, int)> build = [&](int x, int parent) -> int {
    const auto& bag = td.bags.at(x);
    std::vector<int> parts;
    for (int y : adj[x]) {
      if (y == parent) continue;
      const int sub = build(y, x);
      if (sub >= 0) parts.push_back(b.transition(sub, bag));
    }
    if (parts.empty()) return bag.empty() ? -1 : b.leaf_chain(bag);
    while (parts.size() > 1) {
      std::vector<int> next;
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(b.add(NiceKind::Join, bag, 0, {parts[i], parts[i + 1]}));
      if (parts.size() % 2 == 1) next.push_back(parts.back());
      parts = std::move(next);
    }
    return parts.front();
  };
  out.root = build(td.root, -1);
  if (out.root < 0) out.nodes.clear();
  return out;
}

TdDiagnostics check_nice_invariants(const NiceTreeDecomposition& ntd) {
  const auto& nodes = ntd.nodes;
  if (nodes.empty()) return ntd.root == -1 ? TdDiagnostics{} : fail("root set on an empty decomposition");
  if (ntd.root < 0 || ntd.root >= static_cast<int>(nodes.size())) return fail("root out of range");
  std::vector<int> parent_count(nodes.size(), 0);
  // vertices occurring in the subtree of each node (children precede parents)
  std::vector<std::vector<int>> below(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NiceNode& x = nodes[i];
    const std::string at = "node " + std::to_string(i) + ": ";
    for (int c : x.children) {
      if (c < 0 || c >= static_cast<int>(i)) return fail(at + "children must precede their parent");
      ++parent_count[static_cast<std::size_t>(c)];
    }
    auto child_bag = [&](std::size_t k) -> const std::vector<int>& { return nodes[static_cast<std::size_t>(x.children[k])].bag; };
    std::vector<int> expected;
    switch (x.kind) {
      case NiceKind::Leaf:
        if (!x.children.empty() || x.bag != std::vector<int>{x.vertex}) return fail(at + "leaf must hold exactly its vertex");
        break;
      case NiceKind::Introduce:
        if (x.children.size() != 1 || !contains(x.bag, x.vertex)) return fail(at + "malformed introduce");
        expected = x.bag;
        expected.erase(std::find(expected.begin(), expected.end(), x.vertex));
        if (child_bag(0) != expected) return fail(at + "introduce child bag must be the bag minus the vertex");
        if (contains(below[static_cast<std::size_t>(x.children[0])], x.vertex))
          return fail(at + "introduced vertex already occurs below");
        break;
      case NiceKind::Forget:
        if (x.children.size() != 1 || contains(x.bag, x.vertex)) return fail(at + "malformed forget");
        expected = x.bag;
        expected.insert(std::upper_bound(expected.begin(), expected.end(), x.vertex), x.vertex);
        if (child_bag(0) != expected) return fail(at + "forget child bag must be the bag plus the vertex");
        break;
      case NiceKind::Join: {
        if (x.children.size() != 2 || child_bag(0) != x.bag || child_bag(1) != x.bag)
          return fail(at + "join children must both carry the bag");
        const auto& l = below[static_cast<std::size_t>(x.children[0])];
        const auto& r = below[static_cast<std::size_t>(x.children[1])];
        std::vector<int> common;
        std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(common));
        if (common != x.bag) return fail(at + "join bag differs from the intersection of its subtrees");
        break;
      }
    }
    std::set<int> all(x.bag.begin(), x.bag.end());
    for (int c : x.children) all.insert(below[static_cast<std::size_t>(c)].begin(), below[static_cast<std::size_t>(c)].end());
    below[i].assign(all.begin(), all.end());
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int expected = static_cast<int>(i) == ntd.root ? 0 : 1;
    if (parent_count[i] != expected) return fail("node " + std::to_string(i) + " does not have exactly one parent");
  }
  return {};
}

TreeDecomposition td_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.at("nodes").is_array())
    throw InputError("tree decomposition: expected {\"root\", \"nodes\", \"edges\"}");
  TreeDecomposition td;
  try {
    for (const json& node : j.at("nodes")) {
      const int id = node.at("id").get<int>();
      std::vector<int> bag = node.at("bag").get<std::vector<int>>();
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        throw InputError("tree decomposition: bag " + std::to_string(id) + " repeats a vertex");
      if (!td.bags.emplace(id, std::move(bag)).second)
        throw InputError("tree decomposition: duplicate node id " + std::to_string(id));
    }
    if (j.contains("edges"))
      for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InputError("tree decomposition: edges are [id, id] pairs");
        td.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    if (j.contains("root")) td.root = j.at("root").get<int>();
    else if (!td.bags.empty()) td.root = td.bags.begin()->first;
  } catch (const json::exception& ex) {
    throw InputError(std::string("tree decomposition: ") + ex.what());
  }
  return td;
}

TreeDecomposition parse_td(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("tree decomposition: malformed JSON: ") + ex.what());
  }
  return td_from_json(j);
}

json td_to_json(const TreeDecomposition& td) {
  json nodes = json::array();
  for (const auto& [id, bag] : td.bags) nodes.push_back({{"id", id}, {"bag", bag}});
  json edges = json::array();
  for (const auto& [a, b] : td.edges) edges.push_back({a, b});
  return {{"root", td.root}, {"nodes", nodes}, {"edges", edges}};
}

std::string to_string(NiceKind k) {
  switch (k) {
    case NiceKind::Leaf: return "leaf";
    case NiceKind::Introduce: return "introduce";
    case NiceKind::Forget: return "forget";
    case NiceKind::Join: return "join";
  }
  return "?";
}

}  // namespace pmvc

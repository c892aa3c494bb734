#include "pmvc/decision_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

DecisionDiagram::DecisionDiagram(int d, bool value) : d_(d), root_(value ? kTrueNode : kFalseNode) {
  if (d < 1) throw InputError("decision diagram: d must be at least 1");
}

DecisionDiagram::DecisionDiagram(int d, std::vector<int> order, std::vector<DDNode> nodes, NodeRef root)
    : d_(d), order_(std::move(order)), nodes_(std::move(nodes)), root_(root) {
  validate();
}

void DecisionDiagram::validate() const {
  if (d_ < 1) throw InputError("decision diagram: d must be at least 1");
  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!position.emplace(order_[i], static_cast<int>(i)).second)
      throw InputError("decision diagram: vertex " + std::to_string(order_[i]) + " repeated in order");
  }
  const auto check_ref = [&](NodeRef r) {
    if (r != kTrueNode && r != kFalseNode && (r < 0 || r >= static_cast<int>(nodes_.size())))
      throw InputError("decision diagram: dangling node reference " + std::to_string(r));
  };
  check_ref(root_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const DDNode& node = nodes_[i];
    const std::string where = "decision diagram: node " + std::to_string(i) + ": ";
    auto it = position.find(node.vertex);
    if (it == position.end()) throw InputError(where + "vertex " + std::to_string(node.vertex) + " not in order");
    if (node.children.size() != static_cast<std::size_t>(d_))
      throw InputError(where + "expected " + std::to_string(d_) + " children");
    for (NodeRef child : node.children) {
      check_ref(child);
      // Strictly increasing order positions along every edge also rules out cycles.
      if (child >= 0 && position.at(nodes_[static_cast<std::size_t>(child)].vertex) <= it->second)
        throw InputError(where + "child violates the variable order");
    }
  }
}

std::vector<int> DecisionDiagram::tested_vertices() const {
  std::set<int> vs;
  for (const DDNode& n : nodes_) vs.insert(n.vertex);
  return {vs.begin(), vs.end()};
}

bool DecisionDiagram::evaluate(const VertexColoring& c) const {
  NodeRef cur = root_;
  while (cur >= 0) {
    const DDNode& node = nodes_[static_cast<std::size_t>(cur)];
    if (node.vertex < 1 || node.vertex > c.size())
      throw InputError("decision diagram tests vertex " + std::to_string(node.vertex) + " outside the coloring");
    const int color = c(node.vertex);
    if (color < 1 || color > d_) throw InputError("coloring uses color outside 1..d");
    cur = node.children[static_cast<std::size_t>(color - 1)];
  }
  return cur == kTrueNode;
}

DecisionDiagram dd_all_equal(const std::vector<int>& vertices, int d, const std::vector<int>& order) {
  std::unordered_map<int, int> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], static_cast<int>(i));
  std::vector<int> chain = vertices;
  for (int v : chain)
    if (!position.count(v)) throw InputError("all-equal: vertex " + std::to_string(v) + " missing from order");
  std::sort(chain.begin(), chain.end(), [&](int a, int b) { return position.at(a) < position.at(b); });
  chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
  if (chain.empty()) return DecisionDiagram(d, order, {}, kTrueNode);

  // Node 0 branches on the first vertex; one chain of nodes per color follows.
  std::vector<DDNode> nodes;
  nodes.push_back({chain.front(), std::vector<NodeRef>(static_cast<std::size_t>(d), kTrueNode)});
  if (chain.size() > 1) {
    for (int color = 1; color <= d; ++color) {
      NodeRef next = kTrueNode;
      for (std::size_t i = chain.size() - 1; i >= 1; --i) {
        std::vector<NodeRef> kids(static_cast<std::size_t>(d), kFalseNode);
        kids[static_cast<std::size_t>(color - 1)] = next;
        nodes.push_back({chain[i], std::move(kids)});
        next = static_cast<NodeRef>(nodes.size() - 1);
      }
      nodes[0].children[static_cast<std::size_t>(color - 1)] = next;
    }
  }
  return DecisionDiagram(d, order, std::move(nodes), 0);
}

DecisionDiagram dd_conjoin_disjoint(const DecisionDiagram& a, const DecisionDiagram& b) {
  if (a.color_count() != b.color_count()) throw InputError("conjoin: diagrams disagree on d");
  const std::vector<int> va = a.tested_vertices();
  const std::vector<int> vb = b.tested_vertices();
  std::vector<int> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (!common.empty())
    throw InputError("conjoin: diagrams share vertex " + std::to_string(common.front()));

  // a's order without b's vertices, then b's order.
  const std::set<int> in_b(vb.begin(), vb.end());
  std::vector<int> order;
  std::set<int> seen;
  for (int v : a.order())
    if (!in_b.count(v) && seen.insert(v).second) order.push_back(v);
  for (int v : b.order())
    if (seen.insert(v).second) order.push_back(v);

  if (a.root() == kFalseNode) return DecisionDiagram(a.color_count(), order, {}, kFalseNode);
  const NodeRef offset = static_cast<NodeRef>(a.nodes().size());
  const auto shift_b = [&](NodeRef r) { return r >= 0 ? r + offset : r; };
  const NodeRef b_root = shift_b(b.root());
  std::vector<DDNode> nodes;
  nodes.reserve(a.nodes().size() + b.nodes().size());
  for (DDNode n : a.nodes()) {
    for (NodeRef& r : n.children)
      if (r == kTrueNode) r = b_root;
    nodes.push_back(std::move(n));
  }
  for (DDNode n : b.nodes()) {
    for (NodeRef& r : n.children) r = shift_b(r);
    nodes.push_back(std::move(n));
  }
  const NodeRef root = a.root() == kTrueNode ? b_root : a.root();
  return DecisionDiagram(a.color_count(), std::move(order), std::move(nodes), root);
}

DecisionDiagram dd_from_symmetric(const SymmetricConstraint& c, const std::vector<int>& order, int d) {
  if (c.max_color() > d) throw InputError("constraint mentions a color above d");
  const int levels = static_cast<int>(order.size());
  if (levels == 0) return DecisionDiagram(d, c.evaluate(CountVector(static_cast<std::size_t>(d), 0)));
  std::vector<DDNode> nodes;
  std::vector<std::map<CountVector, NodeRef>> layer(static_cast<std::size_t>(levels));
  const auto node_for = [&](int level, const CountVector& counts) -> NodeRef {
    if (level == levels) return c.evaluate(counts) ? kTrueNode : kFalseNode;
    auto& m = layer[static_cast<std::size_t>(level)];
    auto it = m.find(counts);
    if (it != m.end()) return it->second;
    const NodeRef id = static_cast<NodeRef>(nodes.size());
    nodes.push_back({order[static_cast<std::size_t>(level)], {}});
    m.emplace(counts, id);
    return id;
  };
  const NodeRef root = node_for(0, CountVector(static_cast<std::size_t>(d), 0));
  for (int level = 0; level < levels; ++level) {
    // node_for only touches later layers, so iterating this one is safe.
    const auto& current = layer[static_cast<std::size_t>(level)];
    for (const auto& [counts, id] : current) {
      std::vector<NodeRef> kids;
      for (int color = 1; color <= d; ++color) {
        CountVector next = counts;
        ++next[static_cast<std::size_t>(color - 1)];
        kids.push_back(node_for(level + 1, next));
      }
      nodes[static_cast<std::size_t>(id)].children = std::move(kids);
    }
  }
  return DecisionDiagram(d, order, std::move(nodes), root);
}

namespace {

NodeRef ref_from_json(const json& j, const std::unordered_map<int, int>& index) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "T") return kTrueNode;
    if (s == "F") return kFalseNode;
    throw InputError("decision diagram: unknown terminal '" + s + "'");
  }
  if (!j.is_number_integer()) throw InputError("decision diagram: node reference must be an id, \"T\" or \"F\"");
  auto it = index.find(j.get<int>());
  if (it == index.end()) throw InputError("decision diagram: dangling node reference " + std::to_string(j.get<int>()));
  return it->second;
}

}  // namespace

DecisionDiagram dd_from_json(const json& j, int d) {
  if (!j.is_object() || !j.contains("order") || !j.at("order").is_array() || !j.contains("nodes") ||
      !j.at("nodes").is_array() || !j.contains("root"))
    throw InputError("decision diagram: expected {\"order\",\"root\",\"nodes\"}");
  std::vector<int> order;
  for (const json& v : j.at("order")) {
    if (!v.is_number_integer()) throw InputError("decision diagram: order entries must be integers");
    order.push_back(v.get<int>());
  }
  std::unordered_map<int, int> index;
  const json& arr = j.at("nodes");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& n = arr[i];
    if (!n.is_object() || !n.contains("id") || !n.at("id").is_number_integer())
      throw InputError("decision diagram: node " + std::to_string(i) + " lacks an integer id");
    if (!index.emplace(n.at("id").get<int>(), static_cast<int>(i)).second)
      throw InputError("decision diagram: duplicate node id " + std::to_string(n.at("id").get<int>()));
  }
  std::vector<DDNode> nodes;
  for (const json& n : arr) {
    if (!n.contains("vertex") || !n.at("vertex").is_number_integer() || !n.contains("children") ||
        !n.at("children").is_array())
      throw InputError("decision diagram: node needs 'vertex' and 'children'");
    DDNode node{n.at("vertex").get<int>(), {}};
    for (const json& c : n.at("children")) node.children.push_back(ref_from_json(c, index));
    nodes.push_back(std::move(node));
  }
  const NodeRef root = ref_from_json(j.at("root"), index);
  return DecisionDiagram(d, std::move(order), std::move(nodes), root);
}

DecisionDiagram parse_dd(std::string_view text, int d) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("decision diagram: malformed JSON: ") + ex.what());
  }
  return dd_from_json(j, d);
}

json dd_to_json(const DecisionDiagram& dd) {
  const auto ref = [](NodeRef r) -> json {
    if (r == kTrueNode) return "T";
    if (r == kFalseNode) return "F";
    return r;
  };
  json nodes = json::array();
  for (std::size_t i = 0; i < dd.nodes().size(); ++i) {
    json kids = json::array();
    for (NodeRef c : dd.nodes()[i].children) kids.push_back(ref(c));
    nodes.push_back({{"id", static_cast<int>(i)}, {"vertex", dd.nodes()[i].vertex}, {"children", std::move(kids)}});
  }
  return {{"order", dd.order()}, {"root", ref(dd.root())}, {"nodes", std::move(nodes)}};
}

}  // namespace pmvc

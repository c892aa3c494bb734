#include "pmvc/pfaffian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

namespace {

int dart_index(const Graph& g, const Dart& d) { return 2 * d.edge + (d.tail == g.edge(d.edge).u ? 0 : 1); }

void check_rotation_shape(const Graph& g, const PlanarEmbedding& emb) {
  const int n = g.vertex_count();
  if (static_cast<int>(emb.rotation.size()) != n)
    throw InputError("embedding: expected " + std::to_string(n) + " rotation lists");
  for (int v = 1; v <= n; ++v) {
    std::vector<int> listed = emb.rotation[static_cast<std::size_t>(v - 1)];
    std::sort(listed.begin(), listed.end());
    if (listed != g.incident(v))
      throw InputError("embedding: rotation at vertex " + std::to_string(v) + " must list each incident edge once");
  }
}

// Union-find over vertices for per-component bookkeeping.
struct Components {
  explicit Components(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

}  // namespace

std::vector<std::vector<Dart>> trace_faces(const Graph& g, const PlanarEmbedding& emb) {
  check_rotation_shape(g, emb);
  // position of each edge in the rotation of each of its endpoints
  std::vector<std::map<int, std::size_t>> pos(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const auto& rot = emb.rotation[static_cast<std::size_t>(v - 1)];
    for (std::size_t i = 0; i < rot.size(); ++i) pos[static_cast<std::size_t>(v)][rot[i]] = i;
  }
  std::vector<char> used(2 * g.edge_count(), 0);
  std::vector<std::vector<Dart>> faces;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      const Edge& edge = g.edges()[e];
      Dart start{static_cast<int>(e), side == 0 ? edge.u : edge.v};
      if (used[static_cast<std::size_t>(dart_index(g, start))]) continue;
      std::vector<Dart> face;
      Dart cur = start;
      while (!used[static_cast<std::size_t>(dart_index(g, cur))]) {
        used[static_cast<std::size_t>(dart_index(g, cur))] = 1;
        face.push_back(cur);
        const int head = g.edge(cur.edge).other(cur.tail);
        const auto& rot = emb.rotation[static_cast<std::size_t>(head - 1)];
        const std::size_t i = pos[static_cast<std::size_t>(head)].at(cur.edge);
        cur = Dart{rot[(i + 1) % rot.size()], head};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

void validate_embedding(const Graph& g, const PlanarEmbedding& emb) {
  const auto faces = trace_faces(g, emb);
  const int n = g.vertex_count();
  Components comp(n);
  for (const Edge& e : g.edges()) comp.unite(e.u, e.v);
  std::map<int, long> euler;  // V - E + F per component root
  for (int v = 1; v <= n; ++v) {
    euler[comp.find(v)] += 1;
    if (g.incident(v).empty()) euler[comp.find(v)] += 1;  // an isolated vertex bounds one face
  }
  for (const Edge& e : g.edges()) euler[comp.find(e.u)] -= 1;
  for (const auto& f : faces) euler[comp.find(f.front().tail)] += 1;
  for (const auto& [root, chi] : euler)
    if (chi != 2)
      throw InputError("embedding: component of vertex " + std::to_string(root) + " has V - E + F = " +
                       std::to_string(chi) + ", not planar");
}

XAssignment pfaffian_orientation(const Graph& g, const PlanarEmbedding& emb) {
  validate_embedding(g, emb);
  const int n = g.vertex_count();

  // Orientation is per vertex pair, so work on the simple graph of the lowest
  // edge id of each pair. Deleting edges from a rotation keeps it planar.
  std::map<std::pair<int, int>, int> rep;
  std::vector<Edge> simple_edges;
  std::vector<int> simple_id(g.edge_count(), -1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = rep.try_emplace({key.first, key.second}, static_cast<int>(simple_edges.size()));
    if (inserted) simple_edges.push_back(e);
    simple_id[i] = inserted ? it->second : -1;
  }
  const Graph simple(n, g.color_count(), simple_edges);
  PlanarEmbedding reduced;
  for (const auto& rot : emb.rotation) {
    std::vector<int> r;
    for (int id : rot)
      if (simple_id[static_cast<std::size_t>(id)] >= 0) r.push_back(simple_id[static_cast<std::size_t>(id)]);
    reduced.rotation.push_back(std::move(r));
  }
  const auto faces = trace_faces(simple, reduced);
  const std::size_t m = simple.edge_count();

  // orientation[e]: +1 means u -> v, -1 means v -> u, 0 undecided.
  std::vector<int> orientation(m, 0);
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    visited[static_cast<std::size_t>(s)] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int id : simple.incident(v)) {
        const int w = simple.edge(id).other(v);
        if (visited[static_cast<std::size_t>(w)]) continue;
        visited[static_cast<std::size_t>(w)] = 1;
        // tree edges point from the larger index to the smaller, giving x = +1
        orientation[static_cast<std::size_t>(id)] = simple.edge(id).u > simple.edge(id).v ? 1 : -1;
        q.push(w);
      }
    }
  }

  // Dual tree on non-tree edges; faces of each component rooted at their longest face.
  std::vector<int> face_of(2 * m, -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const Dart& d : faces[f]) face_of[static_cast<std::size_t>(dart_index(simple, d))] = static_cast<int>(f);
  std::vector<std::vector<std::pair<int, int>>> dual(faces.size());  // (neighbor face, edge)
  for (std::size_t e = 0; e < m; ++e) {
    if (orientation[e] != 0) continue;
    const int f1 = face_of[2 * e], f2 = face_of[2 * e + 1];
    if (f1 == f2) throw InternalError("non-tree edge bounded by a single face");
    dual[static_cast<std::size_t>(f1)].emplace_back(f2, static_cast<int>(e));
    dual[static_cast<std::size_t>(f2)].emplace_back(f1, static_cast<int>(e));
  }
  Components comp(n);
  for (const Edge& e : simple.edges()) comp.unite(e.u, e.v);
  std::map<int, int> outer;  // component root -> longest face
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int root = comp.find(faces[f].front().tail);
    auto it = outer.find(root);
    if (it == outer.end() || faces[f].size() > faces[static_cast<std::size_t>(it->second)].size())
      outer[root] = static_cast<int>(f);
  }
  std::vector<int> parent_edge(faces.size(), -1);
  std::vector<char> seen(faces.size(), 0);
  std::vector<int> bfs_order;
  for (const auto& [root, f0] : outer) {
    seen[static_cast<std::size_t>(f0)] = 1;
    std::queue<int> q;
    q.push(f0);
    while (!q.empty()) {
      const int f = q.front();
      q.pop();
      bfs_order.push_back(f);
      for (const auto& [nf, e] : dual[static_cast<std::size_t>(f)]) {
        if (seen[static_cast<std::size_t>(nf)]) continue;
        seen[static_cast<std::size_t>(nf)] = 1;
        parent_edge[static_cast<std::size_t>(nf)] = e;
        q.push(nf);
      }
    }
  }
  // Leaves first: each bounded face fixes its last free edge so that an odd
  // number of its boundary darts agree with the edge orientation.
  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    const int f = *it;
    const int pe = parent_edge[static_cast<std::size_t>(f)];
    if (pe < 0) continue;
    int agree = 0;
    int parent_dir = 0;
    for (const Dart& d : faces[static_cast<std::size_t>(f)]) {
      const int dir = d.tail == simple.edge(d.edge).u ? 1 : -1;
      if (d.edge == pe) {
        parent_dir = dir;
        continue;
      }
      const int o = orientation[static_cast<std::size_t>(d.edge)];
      if (o == 0) throw InternalError("face processed before its children");
      if (o == dir) ++agree;
    }
    orientation[static_cast<std::size_t>(pe)] = agree % 2 == 1 ? -parent_dir : parent_dir;
  }

  XAssignment x;
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = simple.edges()[e];
    const int tail = orientation[e] > 0 ? edge.u : edge.v;
    const int head = edge.other(tail);
    // Entry (tail, head) must be positive; below the diagonal it equals +x.
    x.set(edge.u, edge.v, tail > head ? 1 : -1);
  }
  return x;
}

TriStateAnswer planar_decide_sym(const Graph& g, const PlanarEmbedding& emb, const SymmetricConstraint& c,
                                 std::uint64_t seed, bool verify, int extraction_rounds) {
  const std::vector<Monomial> legal = legal_terms_for(g, c);
  const XAssignment x = pfaffian_orientation(g, emb);
  TriStateAnswer answer;
  answer.trials = 1;
  if (legal.empty() || !has_legal_term(bareiss_det(build_adapted_tutte(g, x)), legal)) return answer;
  answer.kind = TriStateAnswer::Kind::YesUnverified;
  if (verify) {
    answer.certificate = extract_pm_sym(g, c, derive_seed(seed, Stream::Extraction, 0), extraction_rounds);
    if (answer.certificate) answer.kind = TriStateAnswer::Kind::YesVerified;
  }
  return answer;
}

PlanarEmbedding embedding_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rotation") || !j.at("rotation").is_array())
    throw InputError("embedding: expected {\"rotation\": [[edge ids], ...]}");
  PlanarEmbedding emb;
  for (const json& rot : j.at("rotation")) {
    if (!rot.is_array()) throw InputError("embedding: each rotation must be an array of edge ids");
    std::vector<int> r;
    for (const json& id : rot) {
      if (!id.is_number_integer()) throw InputError("embedding: edge ids must be integers");
      r.push_back(id.get<int>());
    }
    emb.rotation.push_back(std::move(r));
  }
  return emb;
}

PlanarEmbedding parse_embedding(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("embedding: malformed JSON: ") + ex.what());
  }
  return embedding_from_json(j);
}

json embedding_to_json(const PlanarEmbedding& emb) { return {{"rotation", emb.rotation}}; }

}  // namespace pmvc

#include "pmvc/reductions.hpp"

#include <cstdlib>
#include <sstream>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

void validate_cnf(const CnfFormula& f) {
  if (f.variables < 0) throw InputError("cnf: negative variable count");
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    for (int lit : f.clauses[i])
      if (lit == 0 || std::abs(lit) > f.variables)
        throw InputError("cnf: clause " + std::to_string(i + 1) + " has literal " + std::to_string(lit) +
                         " outside 1.." + std::to_string(f.variables));
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  long declared_clauses = -1;
  std::vector<int> pending;
  auto close_clause = [&] {
    if (pending.empty()) throw InputError("cnf: empty clause " + std::to_string(f.clauses.size() + 1));
    if (pending.size() > 3)
      throw InputError("cnf: clause " + std::to_string(f.clauses.size() + 1) + " has more than 3 literals");
    while (pending.size() < 3) pending.push_back(pending.back());
    f.clauses.push_back({pending[0], pending[1], pending[2]});
    pending.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c') continue;
    if (first[0] == '%') break;  // SATLIB trailer
    if (first == "p") {
      std::string format;
      long vars = 0;
      if (declared_clauses >= 0 || !(ls >> format >> vars >> declared_clauses) || format != "cnf" || vars < 0 ||
          declared_clauses < 0)
        throw InputError("cnf: malformed header '" + line + "'");
      f.variables = static_cast<int>(vars);
      continue;
    }
    if (declared_clauses < 0) throw InputError("cnf: clause before 'p cnf' header");
    ls.clear();
    ls.str(line);
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw InputError("cnf: bad literal '" + tok + "'");
      if (lit == 0) close_clause();
      else pending.push_back(static_cast<int>(lit));
    }
  }
  if (declared_clauses < 0) throw InputError("cnf: missing 'p cnf' header");
  if (!pending.empty()) close_clause();
  if (static_cast<long>(f.clauses.size()) != declared_clauses)
    throw InputError("cnf: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  validate_cnf(f);
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

bool evaluate_cnf(const CnfFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.variables) throw InputError("cnf: assignment length mismatch");
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) sat = sat || assignment[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0);
    if (!sat) return false;
  }
  return true;
}

Sat3Reduction sat3_to_dd(const CnfFormula& f) {
  validate_cnf(f);
  const int m = static_cast<int>(f.clauses.size());
  GadgetMap map;
  map.classes.resize(static_cast<std::size_t>(f.variables));
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    ClauseGadget gad;
    gad.u = 6 * i + 1;
    for (int k = 0; k < 3; ++k) gad.v[static_cast<std::size_t>(k)] = 6 * i + 2 + k;
    gad.w = {6 * i + 5, 6 * i + 6};
    const auto& clause = f.clauses[static_cast<std::size_t>(i)];
    for (int k = 0; k < 3; ++k) {
      const int lit = clause[static_cast<std::size_t>(k)];
      const int color = lit > 0 ? kRed : kBlue;
      edges.push_back({gad.u, gad.v[static_cast<std::size_t>(k)], color, color});
      map.classes[static_cast<std::size_t>(std::abs(lit) - 1)].push_back(gad.v[static_cast<std::size_t>(k)]);
    }
    for (int w : gad.w)
      for (int v : gad.v) {
        edges.push_back({w, v, kRed, kRed});
        edges.push_back({w, v, kBlue, kBlue});
      }
    map.clauses.push_back(gad);
  }

  std::vector<int> order;
  for (const auto& cls : map.classes) order.insert(order.end(), cls.begin(), cls.end());
  DecisionDiagram dd(2, true);
  for (const auto& cls : map.classes)
    if (!cls.empty()) dd = dd_conjoin_disjoint(dd, dd_all_equal(cls, 2, cls));
  // Re-label with the full grouped order so every literal vertex is listed.
  DecisionDiagram ordered(2, order, dd.nodes(), dd.root());
  return {Graph(6 * m, 2, std::move(edges)), std::move(ordered), std::move(map)};
}

std::vector<bool> decode_assignment(const PerfectMatching& p, const GadgetMap& map, const Graph& g) {
  const VertexColoring coloring = inherited_coloring(g, p);
  std::vector<bool> s(map.classes.size(), false);
  for (std::size_t x = 0; x < map.classes.size(); ++x) {
    const auto& cls = map.classes[x];
    if (cls.empty()) continue;
    const int color = coloring(cls.front());
    for (int v : cls)
      if (coloring(v) != color)
        throw InputError("matching colors the literal vertices of variable " + std::to_string(x + 1) +
                         " inconsistently");
    s[x] = color == kRed;
  }
  return s;
}

PerfectMatching encode_assignment(const CnfFormula& f, const std::vector<bool>& assignment, const GadgetMap& map,
                                  const Graph& g) {
  if (map.clauses.size() != f.clauses.size()) throw InputError("gadget map does not match the formula");
  auto find_edge = [&](int a, int b, int color) {
    for (int id : g.incident(a)) {
      const Edge& e = g.edge(id);
      if (e.other(a) == b && e.color_u == color) return id;
    }
    throw InputError("reduced graph lacks an expected gadget edge");
  };
  auto value = [&](int lit) { return assignment.at(static_cast<std::size_t>(std::abs(lit) - 1)) == (lit > 0); };
  std::vector<int> ids;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const auto& clause = f.clauses[i];
    const ClauseGadget& gad = map.clauses[i];
    int chosen = -1;
    for (int k = 0; k < 3 && chosen < 0; ++k)
      if (value(clause[static_cast<std::size_t>(k)])) chosen = k;
    if (chosen < 0) throw InputError("assignment falsifies clause " + std::to_string(i + 1));
    const int lit = clause[static_cast<std::size_t>(chosen)];
    ids.push_back(find_edge(gad.u, gad.v[static_cast<std::size_t>(chosen)], lit > 0 ? kRed : kBlue));
    std::size_t dummy = 0;
    for (int k = 0; k < 3; ++k) {
      if (k == chosen) continue;
      const int other = clause[static_cast<std::size_t>(k)];
      const bool var_true = assignment.at(static_cast<std::size_t>(std::abs(other) - 1));
      ids.push_back(find_edge(gad.w[dummy++], gad.v[static_cast<std::size_t>(k)], var_true ? kRed : kBlue));
    }
  }
  return PerfectMatching(std::move(ids));
}

XpmReduction xpm_to_sym(const Graph& g, int k) {
  if (g.color_count() != 2) throw InputError("xpm: graph must use exactly d = 2 colors (red = 1, blue = 2)");
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!g.edges()[i].monochromatic()) throw InputError("xpm: edge " + std::to_string(i) + " is not monochromatic");
  if (k < 0) throw InputError("xpm: k must be non-negative");
  return {g, SymmetricConstraint::count_eq(kRed, 2 * k)};
}

json gadget_map_to_json(const GadgetMap& map) {
  json clauses = json::array();
  for (const auto& c : map.clauses) clauses.push_back({{"u", c.u}, {"v", c.v}, {"w", c.w}});
  json classes = json::array();
  for (std::size_t x = 0; x < map.classes.size(); ++x)
    classes.push_back({{"variable", x + 1}, {"vertices", map.classes[x]}});
  return {{"clauses", clauses}, {"classes", classes}};
}

GadgetMap gadget_map_from_json(const json& j) {
  GadgetMap map;
  try {
    for (const json& c : j.at("clauses"))
      map.clauses.push_back({c.at("u").get<int>(), c.at("v").get<std::array<int, 3>>(), c.at("w").get<std::array<int, 2>>()});
    for (const json& cls : j.at("classes")) {
      const auto x = cls.at("variable").get<std::size_t>();
      if (x == 0) throw InputError("gadget map: variables are 1-based");
      if (map.classes.size() < x) map.classes.resize(x);
      map.classes[x - 1] = cls.at("vertices").get<std::vector<int>>();
    }
  } catch (const json::exception& ex) {
    throw InputError(std::string("gadget map: ") + ex.what());
  }
  return map;
}

}  // namespace pmvc

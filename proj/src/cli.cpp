#include "pmvc/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmvc/algebraic.hpp"
#include "pmvc/circuit.hpp"
#include "pmvc/errors.hpp"
#include "pmvc/matching.hpp"
#include "pmvc/oracle.hpp"
#include "pmvc/pfaffian.hpp"
#include "pmvc/reductions.hpp"
#include "pmvc/treewidth_dp.hpp"

namespace pmvc::cli {

namespace {

using Report = nlohmann::ordered_json;

// Largest coloring list the explicit method will enumerate on its own.
constexpr std::uint64_t kExplicitColoringLimit = 1u << 20;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text << '\n';
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& ex) {
    throw InputError("'" + path + "': malformed JSON: " + ex.what());
  }
}

Report report(const std::string& answer, bool verified, const std::optional<PerfectMatching>& cert,
              const std::string& method, std::uint64_t seed, int trials) {
  Report r;
  r["answer"] = answer;
  r["verified"] = verified;
  if (cert) r["certificate"] = cert->edge_ids;
  r["method"] = method;
  r["seed"] = seed;
  r["trials"] = trials;
  return r;
}

Report from_tri_state(const TriStateAnswer& a, const std::string& method, std::uint64_t seed) {
  switch (a.kind) {
    case TriStateAnswer::Kind::No: return report("no", false, std::nullopt, method, seed, a.trials);
    case TriStateAnswer::Kind::YesVerified: return report("yes", true, a.certificate, method, seed, a.trials);
    case TriStateAnswer::Kind::YesUnverified: return report("unknown", false, std::nullopt, method, seed, a.trials);
  }
  throw InternalError("unhandled answer kind");
}

// Every coloring whose count vector satisfies `c`, in lexicographic order.
std::vector<VertexColoring> legal_colorings(const Graph& g, const SymmetricConstraint& c) {
  const int n = g.vertex_count(), d = g.color_count();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(d);
    if (total > kExplicitColoringLimit)
      throw ResourceLimit("explicit: d^n exceeds " + std::to_string(kExplicitColoringLimit) +
                          " colorings; pass --colorings");
  }
  std::vector<VertexColoring> out;
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  while (true) {
    VertexColoring vc(colors);
    if (c.evaluate(vc.counts(d))) out.push_back(std::move(vc));
    int i = n - 1;
    while (i >= 0 && colors[static_cast<std::size_t>(i)] == d) colors[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++colors[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<VertexColoring> colorings_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("colorings: expected an array of color arrays");
  std::vector<VertexColoring> out;
  try {
    for (const auto& c : j) out.emplace_back(c.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("colorings: ") + ex.what());
  }
  return out;
}

struct Options {
  std::string graph, constraint, method, td, embedding, colorings, dd, cnf, out_prefix, circuit, state;
  std::uint64_t seed = 0;
  double epsilon = 0x1.0p-20;
  int rounds = 20;
  int k = 0;
  bool no_verify = false;
};

Report solve_sym(const Options& o) {
  const Graph g = parse_graph(read_file(o.graph));
  const SymmetricConstraint c = parse_constraint(read_file(o.constraint));
  if (o.method == "pit") {
    PitConfig cfg;
    cfg.epsilon = o.epsilon;
    cfg.seed = o.seed;
    cfg.verify = !o.no_verify;
    cfg.extraction_rounds = o.rounds;
    return from_tri_state(pit_decide_sym(g, c, cfg), o.method, o.seed);
  }
  if (o.method == "planar") {
    if (o.embedding.empty()) throw InputError("--method planar needs --embedding");
    const PlanarEmbedding emb = parse_embedding(read_file(o.embedding));
    return from_tri_state(planar_decide_sym(g, emb, c, o.seed, !o.no_verify, o.rounds), o.method, o.seed);
  }
  if (o.method == "dp") {
    const TreeDecomposition td = o.td.empty() ? heuristic_td(g) : parse_td(read_file(o.td));
    if (auto diag = validate_td(g, td); !diag.valid) throw InputError("tree decomposition: " + diag.message);
    const DpResult r = dp_solve_sym(g, c, make_nice(td));
    return report(r.found ? "yes" : "no", r.found, r.witness, o.method, o.seed, 0);
  }
  if (o.method == "oracle") {
    OracleResult r = oracle_sym(g, c);
    return report(r.found ? "yes" : "no", r.found, r.witness, o.method, o.seed, 0);
  }
  if (o.method == "explicit") {
    const auto list = o.colorings.empty() ? legal_colorings(g, c) : colorings_from_json(read_json(o.colorings));
    ExplicitResult r = solve_explicit(g, list);
    return report(r.found ? "yes" : "no", r.found, r.witness, o.method, o.seed, 0);
  }
  throw InputError("unknown method '" + o.method + "'");
}

void add_graph_constraint(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph, "graph JSON file")->required();
  sub->add_option("--constraint", o.constraint, "symmetric constraint JSON file")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect matchings under vertex-color constraints", "pmvc"};
  app.require_subcommand(1);
  Options o;
  std::function<Report()> action;

  auto* solve = app.add_subcommand("solve-sym", "decide a symmetric-constraint instance");
  add_graph_constraint(solve, o);
  solve->add_option("--method", o.method, "pit | dp | planar | oracle | explicit")
      ->required()
      ->check(CLI::IsMember({"pit", "dp", "planar", "oracle", "explicit"}));
  solve->add_option("--seed", o.seed, "random seed");
  solve->add_option("--epsilon", o.epsilon, "failure bound for pit");
  solve->add_option("--td", o.td, "tree decomposition JSON for dp (default: min-degree heuristic)");
  solve->add_option("--embedding", o.embedding, "rotation-system JSON for planar");
  solve->add_option("--colorings", o.colorings, "coloring list JSON for explicit (default: all legal colorings)");
  solve->add_option("--rounds", o.rounds, "extraction rounds for verification")->check(CLI::PositiveNumber);
  solve->add_flag("--no-verify", o.no_verify, "skip witness extraction; positives report \"unknown\"");
  solve->callback([&] { action = [&] { return solve_sym(o); }; });

  auto* extract = app.add_subcommand("extract-sym", "find a legal perfect matching by isolating weights");
  add_graph_constraint(extract, o);
  extract->add_option("--seed", o.seed, "random seed");
  extract->add_option("--rounds", o.rounds, "maximum rounds")->check(CLI::PositiveNumber);
  extract->callback([&] {
    action = [&] {
      const Graph g = parse_graph(read_file(o.graph));
      const SymmetricConstraint c = parse_constraint(read_file(o.constraint));
      auto pm = extract_pm_sym(g, c, o.seed, o.rounds);
      if (!pm) throw ResourceLimit("no verified matching within " + std::to_string(o.rounds) + " rounds");
      return report("yes", true, pm, "extract", o.seed, 0);
    };
  });

  auto* solve_dd = app.add_subcommand("solve-dd", "decide a decision-diagram instance");
  solve_dd->add_option("--graph", o.graph, "graph JSON file")->required();
  solve_dd->add_option("--dd", o.dd, "decision diagram JSON file")->required();
  solve_dd->add_option("--method", o.method, "oracle")->required()->check(CLI::IsMember({"oracle"}));
  solve_dd->callback([&] {
    action = [&] {
      const Graph g = parse_graph(read_file(o.graph));
      const DecisionDiagram dd = parse_dd(read_file(o.dd), g.color_count());
      OracleResult r = oracle_dd(g, dd);
      return report(r.found ? "yes" : "no", r.found, r.witness, o.method, o.seed, 0);
    };
  });

  auto* reduce = app.add_subcommand("reduce", "write reduced instances");
  reduce->require_subcommand(1);
  auto* sat3 = reduce->add_subcommand("sat3", "3-CNF to a decision-diagram instance");
  sat3->add_option("--cnf", o.cnf, "DIMACS file")->required();
  sat3->add_option("--out-prefix", o.out_prefix, "output path prefix")->required();
  sat3->callback([&] {
    action = [&] {
      const Sat3Reduction r = sat3_to_dd(parse_dimacs(read_file(o.cnf)));
      write_file(o.out_prefix + ".graph.json", serialize_graph(r.graph));
      write_file(o.out_prefix + ".dd.json", dd_to_json(r.dd).dump());
      write_file(o.out_prefix + ".gadgets.json", gadget_map_to_json(r.map).dump());
      Report rep;
      rep["graph"] = o.out_prefix + ".graph.json";
      rep["dd"] = o.out_prefix + ".dd.json";
      rep["gadgets"] = o.out_prefix + ".gadgets.json";
      rep["vertices"] = r.graph.vertex_count();
      rep["edges"] = r.graph.edge_count();
      rep["dd_nodes"] = r.dd.node_count();
      return rep;
    };
  });
  auto* xpm = reduce->add_subcommand("xpm", "exact perfect matching to a symmetric instance");
  xpm->add_option("--graph", o.graph, "red/blue graph JSON file")->required();
  xpm->add_option("--k", o.k, "number of red edges")->required();
  xpm->add_option("--out-prefix", o.out_prefix, "output path prefix")->required();
  xpm->callback([&] {
    action = [&] {
      const XpmReduction r = xpm_to_sym(parse_graph(read_file(o.graph)), o.k);
      write_file(o.out_prefix + ".graph.json", serialize_graph(r.graph));
      write_file(o.out_prefix + ".constraint.json", constraint_to_json(r.constraint).dump());
      Report rep;
      rep["graph"] = o.out_prefix + ".graph.json";
      rep["constraint"] = o.out_prefix + ".constraint.json";
      return rep;
    };
  });

  auto* circuit = app.add_subcommand("from-circuit", "translate an optical circuit");
  circuit->add_option("--circuit", o.circuit, "circuit JSON file")->required();
  circuit->add_option("--state", o.state, "ghz | w | dicke:K | general-dicke:K1,K2,...");
  circuit->add_option("--out-prefix", o.out_prefix, "output path prefix")->required();
  circuit->callback([&] {
    action = [&] {
      const Graph g = circuit_to_graph(parse_circuit(read_file(o.circuit)));
      write_file(o.out_prefix + ".graph.json", serialize_graph(g));
      Report rep;
      rep["graph"] = o.out_prefix + ".graph.json";
      if (!o.state.empty()) {
        const auto c = state_constraint(parse_state_kind(o.state), g.vertex_count(), g.color_count());
        write_file(o.out_prefix + ".constraint.json", constraint_to_json(c).dump());
        rep["constraint"] = o.out_prefix + ".constraint.json";
      }
      rep["vertices"] = g.vertex_count();
      rep["edges"] = g.edge_count();
      return rep;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "brute-force tools");
  oracle->require_subcommand(1);
  auto* enumerate = oracle->add_subcommand("enumerate", "list every perfect matching");
  enumerate->add_option("--graph", o.graph, "graph JSON file")->required();
  enumerate->callback([&] {
    action = [&] {
      const Graph g = parse_graph(read_file(o.graph));
      Report list = Report::array();
      for (const auto& em : enumerate_pms(g)) list.push_back({{"edges", em.matching.edge_ids}, {"coloring", em.coloring.colors()}});
      Report rep;
      rep["count"] = list.size();
      rep["matchings"] = std::move(list);
      return rep;
    };
  });

  std::vector<const char*> argv{"pmvc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }
  if (!action) return kExitInput;
  try {
    const Report r = action();
    out << r.dump() << '\n';
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace pmvc::cli

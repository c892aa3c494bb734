#include "pmvc/circuit.hpp"

#include <charconv>
#include <numeric>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

void validate_circuit(const CircuitSpec& spec) {
  if (spec.paths < 0) throw InputError("circuit: negative path count");
  if (spec.modes < 1) throw InputError("circuit: at least one mode required");
  for (std::size_t i = 0; i < spec.crystals.size(); ++i) {
    const Crystal& c = spec.crystals[i];
    const std::string at = "circuit: crystal " + std::to_string(i) + ": ";
    if (c.a < 1 || c.a > spec.paths || c.b < 1 || c.b > spec.paths)
      throw InputError(at + "path outside 1.." + std::to_string(spec.paths));
    if (c.a == c.b) throw InputError(at + "both photons in the same path");
    if (c.ma < 1 || c.ma > spec.modes || c.mb < 1 || c.mb > spec.modes)
      throw InputError(at + "mode outside 1.." + std::to_string(spec.modes));
  }
}

Graph circuit_to_graph(const CircuitSpec& spec) {
  validate_circuit(spec);
  std::vector<Edge> edges;
  for (const Crystal& c : spec.crystals) edges.push_back({c.a, c.b, c.ma, c.mb});
  return Graph(spec.paths, spec.modes, std::move(edges));
}

CircuitSpec circuit_from_json(const json& j) {
  CircuitSpec spec;
  try {
    spec.paths = j.at("paths").get<int>();
    spec.modes = j.at("modes").get<int>();
    for (const json& c : j.at("crystals")) {
      Crystal cr{c.at("a").get<int>(), c.at("b").get<int>(), c.at("ma").get<int>(), c.at("mb").get<int>(), {}};
      if (c.contains("amp") && !c.at("amp").is_null()) cr.amplitude = c.at("amp").get<double>();
      spec.crystals.push_back(cr);
    }
  } catch (const json::exception& ex) {
    throw InputError(std::string("circuit: ") + ex.what());
  }
  validate_circuit(spec);
  return spec;
}

CircuitSpec parse_circuit(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("circuit: malformed JSON: ") + ex.what());
  }
  return circuit_from_json(j);
}

json circuit_to_json(const CircuitSpec& spec) {
  json crystals = json::array();
  for (const Crystal& c : spec.crystals) {
    json o = {{"a", c.a}, {"b", c.b}, {"ma", c.ma}, {"mb", c.mb}};
    if (c.amplitude) o["amp"] = *c.amplitude;
    crystals.push_back(o);
  }
  return {{"paths", spec.paths}, {"modes", spec.modes}, {"crystals", crystals}};
}

namespace {

int parse_count(std::string_view s) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
    throw InputError("state: expected a non-negative integer, got '" + std::string(s) + "'");
  return value;
}

}  // namespace

StateKind parse_state_kind(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  StateKind kind;
  if (name == "ghz" || name == "w") {
    if (colon != std::string_view::npos) throw InputError("state: '" + std::string(name) + "' takes no parameters");
    kind.name = name == "ghz" ? StateKind::Name::GHZ : StateKind::Name::W;
  } else if (name == "dicke") {
    kind.name = StateKind::Name::Dicke;
    kind.k = parse_count(params);
  } else if (name == "general-dicke") {
    kind.name = StateKind::Name::GeneralDicke;
    std::size_t start = 0;
    while (true) {
      const auto comma = params.find(',', start);
      kind.occupation.push_back(parse_count(params.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    throw InputError("state: unknown kind '" + std::string(name) + "' (ghz, w, dicke:K, general-dicke:K1,...)");
  }
  return kind;
}

SymmetricConstraint state_constraint(const StateKind& kind, int n, int d) {
  if (n < 0 || d < 1) throw InputError("state: need n >= 0 and d >= 1");
  switch (kind.name) {
    case StateKind::Name::GHZ: {
      std::vector<SymmetricConstraint> any;
      for (int i = 1; i <= d; ++i) any.push_back(SymmetricConstraint::count_eq(i, n));
      return SymmetricConstraint::any_of(std::move(any));
    }
    case StateKind::Name::W:
      if (n < 1) throw InputError("state: W needs at least one vertex");
      return SymmetricConstraint::count_eq(1, n - 1);
    case StateKind::Name::Dicke:
      if (kind.k < 0 || kind.k > n) throw InputError("state: Dicke k must lie in 0..n");
      return SymmetricConstraint::count_eq(1, n - kind.k);
    case StateKind::Name::GeneralDicke: {
      if (static_cast<int>(kind.occupation.size()) != d)
        throw InputError("state: general Dicke needs one count per mode (" + std::to_string(d) + ")");
      if (std::accumulate(kind.occupation.begin(), kind.occupation.end(), 0) != n)
        throw InputError("state: general Dicke counts must sum to n = " + std::to_string(n));
      std::vector<SymmetricConstraint> all;
      for (int i = 1; i <= d; ++i)
        all.push_back(SymmetricConstraint::count_eq(i, kind.occupation[static_cast<std::size_t>(i - 1)]));
      return SymmetricConstraint::all_of(std::move(all));
    }
  }
  throw InternalError("unhandled state kind");
}

}  // namespace pmvc

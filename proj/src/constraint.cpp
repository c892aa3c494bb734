#include "pmvc/constraint.hpp"

#include <algorithm>
#include <functional>

#include "pmvc/errors.hpp"

namespace pmvc {

using nlohmann::json;

SymmetricConstraint::SymmetricConstraint() : node_(std::make_shared<const Node>()) {}

namespace {

void check_atom(int color, int k) {
  if (color < 1) throw InputError("constraint atom color must be >= 1, got " + std::to_string(color));
  if (k < 0) throw InputError("constraint atom bound must be >= 0, got " + std::to_string(k));
}

}  // namespace

SymmetricConstraint SymmetricConstraint::count_eq(int color, int k) {
  check_atom(color, k);
  return SymmetricConstraint(std::make_shared<const Node>(Node{Kind::CountEq, color, k, {}}));
}

SymmetricConstraint SymmetricConstraint::count_ge(int color, int k) {
  check_atom(color, k);
  return SymmetricConstraint(std::make_shared<const Node>(Node{Kind::CountGe, color, k, {}}));
}

SymmetricConstraint SymmetricConstraint::count_le(int color, int k) {
  check_atom(color, k);
  return SymmetricConstraint(std::make_shared<const Node>(Node{Kind::CountLe, color, k, {}}));
}

SymmetricConstraint SymmetricConstraint::all_of(std::vector<SymmetricConstraint> args) {
  return SymmetricConstraint(std::make_shared<const Node>(Node{Kind::And, 0, 0, std::move(args)}));
}

SymmetricConstraint SymmetricConstraint::any_of(std::vector<SymmetricConstraint> args) {
  return SymmetricConstraint(std::make_shared<const Node>(Node{Kind::Or, 0, 0, std::move(args)}));
}

SymmetricConstraint SymmetricConstraint::negate(SymmetricConstraint arg) {
  return SymmetricConstraint(std::make_shared<const Node>(Node{Kind::Not, 0, 0, {std::move(arg)}}));
}

int SymmetricConstraint::max_color() const {
  int best = node_->color;
  for (const auto& a : node_->args) best = std::max(best, a.max_color());
  return best;
}

bool SymmetricConstraint::evaluate(const CountVector& counts) const {
  const int mc = max_color();
  if (mc > static_cast<int>(counts.size()))
    throw InputError("constraint mentions color " + std::to_string(mc) + " but count vector has dimension " +
                     std::to_string(counts.size()));
  return eval_unchecked(counts);
}

bool SymmetricConstraint::eval_unchecked(const CountVector& counts) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::CountEq: return counts[static_cast<std::size_t>(n.color - 1)] == n.k;
    case Kind::CountGe: return counts[static_cast<std::size_t>(n.color - 1)] >= n.k;
    case Kind::CountLe: return counts[static_cast<std::size_t>(n.color - 1)] <= n.k;
    case Kind::And:
      return std::all_of(n.args.begin(), n.args.end(), [&](const auto& a) { return a.eval_unchecked(counts); });
    case Kind::Or:
      return std::any_of(n.args.begin(), n.args.end(), [&](const auto& a) { return a.eval_unchecked(counts); });
    case Kind::Not: return !n.args.front().eval_unchecked(counts);
  }
  return false;
}

std::string SymmetricConstraint::to_string() const {
  const Node& n = *node_;
  const auto join = [&](const char* op, const char* empty) {
    if (n.args.empty()) return std::string(empty);
    std::string out = "(";
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) out += op;
      out += n.args[i].to_string();
    }
    return out + ")";
  };
  const auto atom = [&](const char* op) {
    return "count(" + std::to_string(n.color) + ")" + op + std::to_string(n.k);
  };
  switch (n.kind) {
    case Kind::CountEq: return atom("=");
    case Kind::CountGe: return atom(">=");
    case Kind::CountLe: return atom("<=");
    case Kind::And: return join(" & ", "true");
    case Kind::Or: return join(" | ", "false");
    case Kind::Not: return "!" + n.args.front().to_string();
  }
  return {};
}

bool operator==(const SymmetricConstraint& a, const SymmetricConstraint& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.color() == b.color() && a.k() == b.k() && a.args() == b.args();
}

std::vector<CountVector> legal_count_vectors(const SymmetricConstraint& c, int n, int d) {
  if (n < 0) throw InputError("n must be non-negative");
  if (d < 1) throw InputError("d must be at least 1");
  if (c.max_color() > d)
    throw InputError("constraint mentions color " + std::to_string(c.max_color()) + " but d = " + std::to_string(d));
  std::vector<CountVector> out;
  CountVector cur(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == d - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      if (c.evaluate(cur)) out.push_back(cur);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, remaining - k);
    }
  };
  rec(0, n);
  return out;
}

std::vector<Monomial> legal_terms(const std::vector<CountVector>& vectors) {
  std::vector<Monomial> out;
  out.reserve(vectors.size());
  for (const CountVector& v : vectors) {
    if (!out.empty() && v.size() != vectors.front().size())
      throw InputError("count vectors of differing dimension");
    std::vector<int> exps(v.size());
    std::transform(v.begin(), v.end(), exps.begin(), [](int k) { return 2 * k; });
    out.emplace_back(exps);
  }
  return out;
}

SymmetricConstraint constraint_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw InputError("constraint: expected an object with a string 'type'");
  const std::string type = j.at("type").get<std::string>();
  if (type == "count_eq" || type == "count_ge" || type == "count_le") {
    if (!j.contains("color") || !j.at("color").is_number_integer() || !j.contains("k") ||
        !j.at("k").is_number_integer())
      throw InputError("constraint: atom '" + type + "' needs integer 'color' and 'k'");
    const int color = j.at("color").get<int>();
    const int k = j.at("k").get<int>();
    if (type == "count_eq") return SymmetricConstraint::count_eq(color, k);
    if (type == "count_ge") return SymmetricConstraint::count_ge(color, k);
    return SymmetricConstraint::count_le(color, k);
  }
  if (type == "and" || type == "or" || type == "not") {
    if (!j.contains("args") || !j.at("args").is_array())
      throw InputError("constraint: combinator '" + type + "' needs an 'args' array");
    std::vector<SymmetricConstraint> args;
    for (const json& a : j.at("args")) args.push_back(constraint_from_json(a));
    if (type == "and") return SymmetricConstraint::all_of(std::move(args));
    if (type == "or") return SymmetricConstraint::any_of(std::move(args));
    if (args.size() != 1) throw InputError("constraint: 'not' takes exactly one argument");
    return SymmetricConstraint::negate(std::move(args.front()));
  }
  throw InputError("constraint: unknown type '" + type + "'");
}

SymmetricConstraint parse_constraint(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("constraint: malformed JSON: ") + ex.what());
  }
  return constraint_from_json(j);
}

json constraint_to_json(const SymmetricConstraint& c) {
  using K = SymmetricConstraint::Kind;
  switch (c.kind()) {
    case K::CountEq: return {{"type", "count_eq"}, {"color", c.color()}, {"k", c.k()}};
    case K::CountGe: return {{"type", "count_ge"}, {"color", c.color()}, {"k", c.k()}};
    case K::CountLe: return {{"type", "count_le"}, {"color", c.color()}, {"k", c.k()}};
    default: break;
  }
  json args = json::array();
  for (const auto& a : c.args()) args.push_back(constraint_to_json(a));
  const char* type = c.kind() == K::And ? "and" : c.kind() == K::Or ? "or" : "not";
  return {{"type", type}, {"args", std::move(args)}};
}

}  // namespace pmvc

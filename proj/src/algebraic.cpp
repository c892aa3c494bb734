#include "pmvc/algebraic.hpp"

#include <algorithm>
#include <cmath>

#include "pmvc/errors.hpp"

namespace pmvc {

std::int64_t XAssignment::at(int u, int v) const {
  auto it = values_.find(key(u, v));
  if (it == values_.end())
    throw InputError("no x value for vertex pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return it->second;
}

XAssignment XAssignment::constant(const Graph& g, std::int64_t value) {
  XAssignment x;
  for (const Edge& e : g.edges()) x.set(e.u, e.v, value);
  return x;
}

XAssignment XAssignment::sample(const Graph& g, std::int64_t bound, Rng& rng) {
  XAssignment x;
  // Pairs in sorted order so the draw sequence does not depend on edge order.
  for (const Edge& e : g.edges()) x.values_.emplace(key(e.u, e.v), 0);
  for (auto& [pair, value] : x.values_) value = rng.uniform(1, bound);
  return x;
}

namespace {

void check_color_count(const Graph& g) {
  if (g.color_count() > Monomial::kMaxVariables)
    throw InputError("algebraic methods support at most " + std::to_string(Monomial::kMaxVariables) +
                     " colors, graph has " + std::to_string(g.color_count()));
}

// y_{color at u} * y_{color at v} as a monomial.
Monomial edge_monomial(const Edge& e) {
  return Monomial::variable(e.color_u) * Monomial::variable(e.color_v);
}

// Writes +term at (hi,lo) and -term at (lo,hi) for the 0-based row of the
// larger vertex index.
void add_skew(PolyMatrix& m, const Edge& e, const Polynomial& term) {
  const int hi = std::max(e.u, e.v) - 1;
  const int lo = std::min(e.u, e.v) - 1;
  m(hi, lo) += term;
  m(lo, hi) -= term;
}

}  // namespace

PolyMatrix build_adapted_tutte(const Graph& g, const XAssignment& x) {
  check_color_count(g);
  const int d = g.color_count();
  PolyMatrix m(g.vertex_count(), d);
  for (const Edge& e : g.edges()) add_skew(m, e, Polynomial::monomial(d, edge_monomial(e), Integer(x.at(e.u, e.v))));
  return m;
}

PolyMatrix build_weighted_matrix(const Graph& g, const std::vector<int>& weights) {
  check_color_count(g);
  if (weights.size() != g.edge_count()) throw InputError("one weight per edge required");
  const int d = g.color_count();
  PolyMatrix m(g.vertex_count(), d);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(weights[i]));
    add_skew(m, g.edges()[i], Polynomial::monomial(d, edge_monomial(g.edges()[i]), scale));
  }
  return m;
}

std::int64_t default_sample_bound(const Graph& g) {
  const std::int64_t e2 = 2 * static_cast<std::int64_t>(g.edge_count());
  const std::int64_t n2 = 2 * static_cast<std::int64_t>(g.vertex_count());
  return std::max<std::int64_t>({e2, n2, 2});
}

int pit_trial_count(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0,1)");
  return std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / epsilon) - 1e-9)));
}

std::string to_string(TriStateAnswer::Kind k) {
  switch (k) {
    case TriStateAnswer::Kind::No: return "No";
    case TriStateAnswer::Kind::YesVerified: return "YesVerified";
    case TriStateAnswer::Kind::YesUnverified: return "YesUnverified";
  }
  return "?";
}

std::vector<Monomial> legal_terms_for(const Graph& g, const SymmetricConstraint& c) {
  check_color_count(g);
  if (c.max_color() > g.color_count())
    throw InputError("constraint mentions color " + std::to_string(c.max_color()) + " but the graph has d = " +
                     std::to_string(g.color_count()));
  return legal_terms(legal_count_vectors(c, g.vertex_count(), g.color_count()));
}

bool has_legal_term(const Polynomial& p, const std::vector<Monomial>& legal) {
  return std::any_of(legal.begin(), legal.end(), [&](const Monomial& m) { return sgn(p.coefficient(m)) != 0; });
}

bool raw_pit_trial(const Graph& g, const std::vector<Monomial>& legal, std::int64_t sample_bound, Rng& rng) {
  const XAssignment x = XAssignment::sample(g, sample_bound, rng);
  return has_legal_term(bareiss_det(build_adapted_tutte(g, x)), legal);
}

TriStateAnswer pit_decide_sym(const Graph& g, const SymmetricConstraint& c, const PitConfig& cfg) {
  if (cfg.sample_bound != 0 && cfg.sample_bound < 2) throw InputError("sample bound must be at least 2");
  const std::vector<Monomial> legal = legal_terms_for(g, c);
  const int trials = pit_trial_count(cfg.epsilon);
  const std::int64_t bound = cfg.sample_bound != 0 ? cfg.sample_bound : default_sample_bound(g);
  TriStateAnswer answer;
  if (legal.empty()) return answer;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(cfg.seed, Stream::PitTrial, static_cast<std::uint64_t>(t)));
    answer.trials = t + 1;
    if (!raw_pit_trial(g, legal, bound, rng)) continue;
    answer.kind = TriStateAnswer::Kind::YesUnverified;
    if (cfg.verify) {
      answer.certificate =
          extract_pm_sym(g, c, derive_seed(cfg.seed, Stream::Extraction, 0), cfg.extraction_rounds);
      if (answer.certificate) answer.kind = TriStateAnswer::Kind::YesVerified;
    }
    return answer;
  }
  return answer;
}

namespace {

// Edges whose minor coefficient, scaled by 2^{w_e}, has 2-adic valuation
// exactly `two_w` (i.e. the scaled value divided by 2^{two_w} is odd).
std::vector<int> edges_in_isolated_matching(const Graph& g, const std::vector<int>& weights,
                                            const PolyMatrix& adjugate, const Monomial& target, int two_w) {
  std::vector<int> picked;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    const Monomial em = edge_monomial(e);
    if (!target.divisible_by(em)) continue;
    // det of the matrix without row u and column v is +-adj(v,u).
    const Integer coeff = adjugate(e.v - 1, e.u - 1).coefficient(target / em);
    const int val = two_adic_valuation(coeff);
    if (val != kInfiniteValuation && val + weights[id] == two_w) picked.push_back(static_cast<int>(id));
  }
  return picked;
}

}  // namespace

std::optional<PerfectMatching> extract_pm_sym(const Graph& g, const SymmetricConstraint& c, std::uint64_t seed,
                                              int max_rounds) {
  const std::vector<Monomial> legal = legal_terms_for(g, c);
  if (legal.empty() || g.vertex_count() % 2 != 0) return std::nullopt;
  const int weight_bound = std::max(1, 2 * static_cast<int>(g.edge_count()));
  for (int round = 0; round < max_rounds; ++round) {
    Rng rng(derive_seed(seed, Stream::Extraction, static_cast<std::uint64_t>(round)));
    std::vector<int> weights(g.edge_count());
    for (int& w : weights) w = static_cast<int>(rng.uniform(1, weight_bound));
    const DeterminantAndAdjugate da = bareiss_adjugate(build_weighted_matrix(g, weights));
    if (da.det.is_zero()) return std::nullopt;  // no perfect matching at all

    // Legal monomials present in det(B), lowest 2-adic valuation first.
    std::vector<std::pair<int, Monomial>> candidates;
    for (const Monomial& m : legal) {
      const int val = two_adic_valuation(da.det.coefficient(m));
      if (val != kInfiniteValuation) candidates.emplace_back(val, m);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [two_w, m] : candidates) {
      PerfectMatching pm(edges_in_isolated_matching(g, weights, da.adjugate, m, two_w));
      if (!check_perfect_matching(g, pm.edge_ids)) continue;
      if (c.evaluate(inherited_coloring(g, pm).counts(g.color_count()))) return pm;
    }
  }
  return std::nullopt;
}

}  // namespace pmvc

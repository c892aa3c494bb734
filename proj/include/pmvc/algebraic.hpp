#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmvc/constraint.hpp"
#include "pmvc/graph.hpp"
#include "pmvc/poly_matrix.hpp"
#include "pmvc/random.hpp"

namespace pmvc {

// Integer value for each unordered vertex pair joined by at least one edge.
class XAssignment {
 public:
  void set(int u, int v, std::int64_t value) { values_[key(u, v)] = value; }
  bool contains(int u, int v) const { return values_.count(key(u, v)) != 0; }
  // Throws InputError when the pair has no value.
  std::int64_t at(int u, int v) const;
  const std::map<std::pair<int, int>, std::int64_t>& values() const { return values_; }

  // Every edge-bearing pair set to `value`.
  static XAssignment constant(const Graph& g, std::int64_t value);
  // Every edge-bearing pair drawn uniformly from 1..bound.
  static XAssignment sample(const Graph& g, std::int64_t bound, Rng& rng);

 private:
  static std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }
  std::map<std::pair<int, int>, std::int64_t> values_;
};

// Skew-symmetric matrix in y_1..y_d: entry (u,v) for u > v is
// x_uv * sum over parallel edges e of y_{color of e at u} * y_{color of e at v},
// negated above the diagonal.
PolyMatrix build_adapted_tutte(const Graph& g, const XAssignment& x);

// Same shape with each edge term scaled by 2^{w_e} instead of a pair value.
PolyMatrix build_weighted_matrix(const Graph& g, const std::vector<int>& weights);

struct PitConfig {
  double epsilon = 0x1.0p-20;
  std::uint64_t seed = 0;
  // Size of the sample set for x values; 0 selects max(2|E|, 2n).
  std::int64_t sample_bound = 0;
  bool verify = true;
  int extraction_rounds = 20;
};

std::int64_t default_sample_bound(const Graph& g);
// ceil(log2(1/epsilon)), at least 1.
int pit_trial_count(double epsilon);

struct TriStateAnswer {
  enum class Kind { No, YesVerified, YesUnverified };
  Kind kind = Kind::No;
  std::optional<PerfectMatching> certificate;  // set iff kind == YesVerified
  int trials = 0;

  bool is_yes() const { return kind != Kind::No; }
};

std::string to_string(TriStateAnswer::Kind k);

// One randomized identity test: sample x, compute det of the adapted Tutte
// matrix and report whether any legal term has a non-zero coefficient.
bool raw_pit_trial(const Graph& g, const std::vector<Monomial>& legal, std::int64_t sample_bound, Rng& rng);

// Repeated identity testing followed, on a positive trial, by witness
// extraction when cfg.verify is set.
TriStateAnswer pit_decide_sym(const Graph& g, const SymmetricConstraint& c, const PitConfig& cfg);

// Isolating-weight extraction; every returned matching has been checked to be
// a perfect matching whose coloring satisfies `c`.
std::optional<PerfectMatching> extract_pm_sym(const Graph& g, const SymmetricConstraint& c, std::uint64_t seed,
                                              int max_rounds);

// Legal monomials for the graph's n and d; throws InputError if the
// constraint mentions a color above d.
std::vector<Monomial> legal_terms_for(const Graph& g, const SymmetricConstraint& c);

// True when some monomial of `legal` has a non-zero coefficient in `p`.
bool has_legal_term(const Polynomial& p, const std::vector<Monomial>& legal);

}  // namespace pmvc

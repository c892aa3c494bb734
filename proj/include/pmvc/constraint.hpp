#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pmvc/monomial.hpp"

namespace pmvc {

// counts[i] is the number of vertices with color i+1.
using CountVector = std::vector<int>;

// Predicate over color-count vectors built from count atoms and boolean
// combinators. Values are immutable and cheap to copy (shared tree).
class SymmetricConstraint {
 public:
  enum class Kind { CountEq, CountGe, CountLe, And, Or, Not };

  // Empty conjunction: accepts every count vector.
  SymmetricConstraint();

  static SymmetricConstraint count_eq(int color, int k);
  static SymmetricConstraint count_ge(int color, int k);
  static SymmetricConstraint count_le(int color, int k);
  static SymmetricConstraint all_of(std::vector<SymmetricConstraint> args);
  static SymmetricConstraint any_of(std::vector<SymmetricConstraint> args);
  static SymmetricConstraint negate(SymmetricConstraint arg);
  static SymmetricConstraint always() { return all_of({}); }
  static SymmetricConstraint never() { return any_of({}); }

  Kind kind() const { return node_->kind; }
  int color() const { return node_->color; }
  int k() const { return node_->k; }
  const std::vector<SymmetricConstraint>& args() const { return node_->args; }

  // Largest color mentioned by any atom (0 if none).
  int max_color() const;

  // Throws InputError when an atom's color exceeds counts.size().
  bool evaluate(const CountVector& counts) const;

  std::string to_string() const;

  friend bool operator==(const SymmetricConstraint& a, const SymmetricConstraint& b);

 private:
  struct Node {
    Kind kind = Kind::And;
    int color = 0;
    int k = 0;
    std::vector<SymmetricConstraint> args;
  };
  explicit SymmetricConstraint(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  bool eval_unchecked(const CountVector& counts) const;

  std::shared_ptr<const Node> node_;
};

inline bool sym_eval(const SymmetricConstraint& c, const CountVector& counts) { return c.evaluate(counts); }

// All length-d vectors with non-negative entries summing to n that satisfy
// the constraint, in lexicographically descending order.
std::vector<CountVector> legal_count_vectors(const SymmetricConstraint& c, int n, int d);

// Maps (k_1..k_d) to the monomial y_1^{2k_1} ... y_d^{2k_d}.
std::vector<Monomial> legal_terms(const std::vector<CountVector>& vectors);

SymmetricConstraint constraint_from_json(const nlohmann::json& j);
SymmetricConstraint parse_constraint(std::string_view text);
nlohmann::json constraint_to_json(const SymmetricConstraint& c);

}  // namespace pmvc

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pmvc/monomial.hpp"

namespace pmvc {

using Integer = mpz_class;

// Sparse polynomial over the integers in variables y_1..y_nvars.
// Terms are kept sorted by descending monomial (leading term first) and no
// zero coefficient is ever stored, so equal polynomials compare equal.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  explicit Polynomial(int nvars = 0);
  static Polynomial constant(int nvars, const Integer& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, const Monomial& m, const Integer& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  Integer coefficient(const Monomial& m) const;
  // Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  // True for the zero polynomial or when every term has total degree `deg`.
  bool is_homogeneous_of_degree(int deg) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }

  // a*b - c*e in one pass.
  static Polynomial mul_sub(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& e);

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  friend class PolynomialBuilder;
  int nvars_;
  std::vector<Term> terms_;
};

// Quotient q with q*b == a. Throws InternalError when b does not divide a
// exactly over the integers, and InputError when b is zero.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

// Exponent of 2 in |c|; kInfiniteValuation for zero.
inline constexpr int kInfiniteValuation = 1 << 30;
int two_adic_valuation(const Integer& c);

}  // namespace pmvc

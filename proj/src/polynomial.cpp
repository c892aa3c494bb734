#include "pmvc/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "pmvc/errors.hpp"

namespace pmvc {

namespace {

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVariables)
    throw InputError("polynomials support 0.." + std::to_string(Monomial::kMaxVariables) + " variables");
}

}  // namespace

// Collects sum-of-products terms keyed by monomial, then emits canonical form.
class PolynomialBuilder {
 public:
  void add_product(const Monomial& m, const Integer& a, const Integer& b) {
    mpz_addmul(slot(m).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void sub_product(const Monomial& m, const Integer& a, const Integer& b) {
    mpz_submul(slot(m).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }

  Polynomial finish(int nvars) {
    Polynomial p(nvars);
    p.terms_.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) p.terms_.emplace_back(Monomial::from_key(keys_[i]), std::move(coeffs_[i]));
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Polynomial::Term& x, const Polynomial::Term& y) { return x.first > y.first; });
    return p;
  }

 private:
  Integer& slot(const Monomial& m) {
    auto [it, inserted] = index_.try_emplace(m.key(), keys_.size());
    if (inserted) {
      keys_.push_back(m.key());
      coeffs_.emplace_back(0);
    }
    return coeffs_[it->second];
  }

  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::uint64_t> keys_;
  std::vector<Integer> coeffs_;
};

Polynomial::Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial Polynomial::constant(int nvars, const Integer& c) { return monomial(nvars, Monomial(), c); }

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw InputError("variable index out of range");
  return monomial(nvars, Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Integer& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const Term& t : terms_) best = std::max(best, t.first.degree());
  return best;
}

bool Polynomial::is_homogeneous_of_degree(int deg) const {
  return std::all_of(terms_.begin(), terms_.end(), [deg](const Term& t) { return t.first.degree() == deg; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomial variable counts differ");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first > j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first > i->first) {
      out.push_back(*j++);
    } else {
      Integer c = i->second + j->second;
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw InputError("polynomial variable counts differ");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
  PolynomialBuilder acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc.add_product(ma * mb, ca, cb);
  return acc.finish(a.nvars_);
}

Polynomial Polynomial::mul_sub(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& e) {
  PolynomialBuilder acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc.add_product(ma * mb, ca, cb);
  for (const auto& [mc, cc] : c.terms_)
    for (const auto& [me, ce] : e.terms_) acc.sub_product(mc * me, cc, ce);
  return acc.finish(a.nvars_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool unit_monomial = m.key() == 0;
    std::string coeff = c.get_str();
    if (!out.empty()) {
      if (coeff.front() == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (unit_monomial) {
      out += coeff;
    } else {
      if (coeff == "-1") out += "-";
      else if (coeff != "1") out += coeff + "*";
      out += m.to_string(nvars_);
    }
  }
  return out;
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw InputError("polynomial variable counts differ");
  if (a.is_zero()) return Polynomial(a.nvars());
  const auto& [lead_m, lead_c] = b.leading_term();
  if (b.term_count() == 1) {
    // Monomial divisor: divide term by term.
    PolynomialBuilder q;
    Integer quot;
    for (const auto& [m, c] : a.terms()) {
      if (!m.divisible_by(lead_m) || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
        throw InternalError("inexact polynomial division");
      mpz_divexact(quot.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
      q.add_product(m / lead_m, quot, 1);
    }
    return q.finish(a.nvars());
  }
  std::map<std::uint64_t, Integer, std::greater<>> rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m.key(), c);
  PolynomialBuilder q;
  Integer qc;
  while (!rem.empty()) {
    auto top = rem.begin();
    const Monomial m = Monomial::from_key(top->first);
    if (!m.divisible_by(lead_m) || !mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t()))
      throw InternalError("inexact polynomial division");
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    const Monomial qm = m / lead_m;
    q.add_product(qm, qc, 1);
    rem.erase(top);
    // Subtract qc*qm*b without its leading term (already cancelled).
    for (auto it = b.terms().begin() + 1; it != b.terms().end(); ++it) {
      const std::uint64_t key = (qm * it->first).key();
      auto [slot, inserted] = rem.try_emplace(key, 0);
      mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), it->second.get_mpz_t());
      if (sgn(slot->second) == 0) rem.erase(slot);
    }
  }
  return q.finish(a.nvars());
}

int two_adic_valuation(const Integer& c) {
  if (sgn(c) == 0) return kInfiniteValuation;
  return static_cast<int>(mpz_scan1(c.get_mpz_t(), 0));
}

}  // namespace pmvc

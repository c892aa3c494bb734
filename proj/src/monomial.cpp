#include "pmvc/monomial.hpp"

#include "pmvc/errors.hpp"

namespace pmvc {

namespace {
constexpr std::uint64_t kLow7 = 0x7F7F7F7F7F7F7F7FULL;
constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
}  // namespace

Monomial::Monomial(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
    throw InputError("monomials support at most " + std::to_string(kMaxVariables) + " variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i];
    if (e < 0 || e > kMaxExponent) throw InputError("monomial exponent out of range: " + std::to_string(e));
    key_ |= static_cast<std::uint64_t>(e) << shift(static_cast<int>(i) + 1);
  }
}

Monomial Monomial::variable(int i) {
  if (i < 1 || i > kMaxVariables) throw InputError("variable index out of range: " + std::to_string(i));
  return from_key(std::uint64_t{1} << shift(i));
}

int Monomial::degree() const {
  int total = 0;
  for (int i = 1; i <= kMaxVariables; ++i) total += exponent(i);
  return total;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(static_cast<std::size_t>(nvars));
  for (int i = 1; i <= nvars; ++i) out[static_cast<std::size_t>(i - 1)] = exponent(i);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  // Bytewise add without cross-byte carries, then detect per-byte overflow.
  const std::uint64_t a = key_, b = other.key_;
  const std::uint64_t sum = ((a & kLow7) + (b & kLow7)) ^ ((a ^ b) & kHigh);
  const std::uint64_t carry = ((a & b) | ((a | b) & ~sum)) & kHigh;
  if (carry != 0) throw InputError("monomial exponent overflow (limit 255 per variable)");
  return from_key(sum);
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (int i = 1; i <= kMaxVariables; ++i)
    if (exponent(i) < other.exponent(i)) return false;
  return true;
}

std::string Monomial::to_string(int nvars) const {
  std::string out;
  for (int i = 1; i <= nvars; ++i) {
    const int e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "y" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace pmvc

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pmvc {

// Power product y_1^{e_1} ... y_d^{e_d} over at most kMaxVariables symbols.
// Exponents are packed 8 bits each, y_1 in the most significant byte, so the
// integer order of keys is the lexicographic order with y_1 > y_2 > ...
class Monomial {
 public:
  static constexpr int kMaxVariables = 8;
  static constexpr int kMaxExponent = 255;

  Monomial() = default;
  // Throws InputError on more than kMaxVariables entries or an exponent
  // outside 0..kMaxExponent.
  explicit Monomial(const std::vector<int>& exponents);
  static Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }
  // y_i for 1-based i.
  static Monomial variable(int i);

  int exponent(int i) const { return static_cast<int>((key_ >> shift(i)) & 0xFF); }
  int degree() const;
  std::vector<int> exponents(int nvars) const;
  std::uint64_t key() const { return key_; }

  // Throws InputError if some exponent would exceed kMaxExponent.
  Monomial operator*(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;
  // Requires divisible_by(other).
  Monomial operator/(const Monomial& other) const { return from_key(key_ - other.key_); }

  std::string to_string(int nvars) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  static int shift(int i) { return 8 * (kMaxVariables - i); }
  std::uint64_t key_ = 0;
};

}  // namespace pmvc

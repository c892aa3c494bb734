#pragma once

#include <functional>
#include <vector>

#include "pmvc/polynomial.hpp"

namespace pmvc {

// Dense square matrix of polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix(int size, int nvars);

  int size() const { return n_; }
  int nvars() const { return nvars_; }
  Polynomial& operator()(int row, int col) { return cells_[index(row, col)]; }
  const Polynomial& operator()(int row, int col) const { return cells_[index(row, col)]; }

  // Zero diagonal and m(i,j) == -m(j,i).
  bool is_skew_symmetric() const;
  // Copy without row `row` and column `col`.
  PolyMatrix minor(int row, int col) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }
  int n_;
  int nvars_;
  std::vector<Polynomial> cells_;
};

// Called before each elimination step k (1-based) with the working matrix;
// rows and columns k-1.. (0-based) form the active block a^k.
using BareissObserver = std::function<void(int stage, const PolyMatrix& work)>;

// Determinant by fraction-free (Bareiss) elimination with row pivoting on
// zero pivots. Every interior division is exact; InternalError otherwise.
// In debug builds, when all input entries are 0 or homogeneous of degree 2,
// each stage-k active entry is checked to be 0 or homogeneous of degree 2k.
Polynomial bareiss_det(const PolyMatrix& m, const BareissObserver& observer = {});

struct DeterminantAndAdjugate {
  Polynomial det;
  PolyMatrix adjugate;  // adj(m)(j,i) = (-1)^{i+j} det(minor(i,j))
};

// Fraction-free Gauss-Jordan elimination on [m | I]. When det(m) is zero the
// adjugate is left empty (all zero) since the elimination cannot complete.
DeterminantAndAdjugate bareiss_adjugate(const PolyMatrix& m);

}  // namespace pmvc

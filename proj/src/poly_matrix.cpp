#include "pmvc/poly_matrix.hpp"

#include <cassert>
#include <utility>

#include "pmvc/errors.hpp"

namespace pmvc {

PolyMatrix::PolyMatrix(int size, int nvars)
    : n_(size), nvars_(nvars), cells_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), Polynomial(nvars)) {
  if (size < 0) throw InputError("matrix size must be non-negative");
}

bool PolyMatrix::is_skew_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::minor(int row, int col) const {
  PolyMatrix out(n_ - 1, nvars_);
  for (int i = 0, oi = 0; i < n_; ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < n_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

namespace {

// Rows r..n-1 with a non-zero entry in column c; returns -1 if none.
int find_pivot_row(const PolyMatrix& w, int r, int c, int rows) {
  for (int p = r; p < rows; ++p)
    if (!w(p, c).is_zero()) return p;
  return -1;
}

void swap_rows(PolyMatrix& w, int a, int b, int cols) {
  for (int j = 0; j < cols; ++j) std::swap(w(a, j), w(b, j));
}

[[maybe_unused]] bool entries_homogeneous_degree_two(const PolyMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!m(i, j).is_homogeneous_of_degree(2)) return false;
  return true;
}

[[maybe_unused]] bool active_block_homogeneous(const PolyMatrix& w, int stage) {
  for (int i = stage - 1; i < w.size(); ++i)
    for (int j = stage - 1; j < w.size(); ++j)
      if (!w(i, j).is_homogeneous_of_degree(2 * stage)) return false;
  return true;
}

}  // namespace

Polynomial bareiss_det(const PolyMatrix& m, const BareissObserver& observer) {
  const int n = m.size();
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
#ifndef NDEBUG
  const bool track_degree = entries_homogeneous_degree_two(m);
#endif
  PolyMatrix w = m;
  bool negate = false;
  Polynomial prev = Polynomial::constant(m.nvars(), 1);
  for (int k = 0; k < n; ++k) {
    if (w(k, k).is_zero()) {
      const int p = find_pivot_row(w, k + 1, k, n);
      if (p < 0) return Polynomial(m.nvars());
      swap_rows(w, k, p, n);
      negate = !negate;
    }
    if (observer) observer(k + 1, w);
#ifndef NDEBUG
    if (track_degree) assert(active_block_homogeneous(w, k + 1));
#endif
    if (k == n - 1) break;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w(i, j) = poly_div_exact(Polynomial::mul_sub(w(k, k), w(i, j), w(i, k), w(k, j)), prev);
      w(i, k) = Polynomial(m.nvars());
    }
    prev = w(k, k);
  }
  Polynomial det = w(n - 1, n - 1);
  return negate ? -det : det;
}

DeterminantAndAdjugate bareiss_adjugate(const PolyMatrix& m) {
  const int n = m.size();
  const int cols = 2 * n;
  PolyMatrix w(cols, m.nvars());  // only the first n rows are used
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = Polynomial::constant(m.nvars(), 1);
  }
  DeterminantAndAdjugate out{Polynomial::constant(m.nvars(), 1), PolyMatrix(n, m.nvars())};
  if (n == 0) return out;
  bool negate = false;
  Polynomial prev = Polynomial::constant(m.nvars(), 1);
  for (int k = 0; k < n; ++k) {
    if (w(k, k).is_zero()) {
      const int p = find_pivot_row(w, k + 1, k, n);
      if (p < 0) {
        out.det = Polynomial(m.nvars());
        return out;
      }
      swap_rows(w, k, p, cols);
      negate = !negate;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      for (int j = k + 1; j < cols; ++j)
        w(i, j) = poly_div_exact(Polynomial::mul_sub(w(k, k), w(i, j), w(i, k), w(k, j)), prev);
      w(i, k) = Polynomial(m.nvars());
    }
    prev = w(k, k);
  }
  // w now holds [det(PA) I | det(PA) A^{-1}] for the row permutation P.
  out.det = negate ? -w(n - 1, n - 1) : w(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.adjugate(i, j) = negate ? -w(i, n + j) : w(i, n + j);
  return out;
}

}  // namespace pmvc

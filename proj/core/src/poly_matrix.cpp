#include "coxfree/poly_matrix.hpp"

#include <stdexcept>

namespace coxfree {

namespace {

constexpr std::size_t kCofactorLimit = 4;

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars), data_(rows * cols, Polynomial(num_vars)) {}

PolyMatrix PolyMatrix::minor_matrix(std::size_t r, std::size_t c) const {
  PolyMatrix out(rows_ - 1, cols_ - 1, num_vars_);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.num_vars(), Scalar(1));
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Polynomial det(m.num_vars());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Polynomial term = m(0, c) * determinant_cofactor(m.minor_matrix(0, c));
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.num_vars(), Scalar(1));
  PolyMatrix a = m;
  Polynomial prev = Polynomial::constant(m.num_vars(), Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(m.num_vars());
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes this division exact.
        a(i, j) = exact_divide(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
    }
    prev = a(k, k);
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

Polynomial determinant(const PolyMatrix& m) {
  require_square(m);
  return m.rows() <= kCofactorLimit ? determinant_cofactor(m) : determinant_bareiss(m);
}

PolyMatrix cofactor_matrix(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  PolyMatrix out(n, n, m.num_vars());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial d = n == 1 ? Polynomial::constant(m.num_vars(), Scalar(1)) : determinant(m.minor_matrix(r, c));
      out(r, c) = (r + c) % 2 == 0 ? d : -d;
    }
  }
  return out;
}

}  // namespace coxfree

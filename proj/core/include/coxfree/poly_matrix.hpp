#pragma once

#include <vector>

#include "coxfree/polynomial.hpp"

namespace coxfree {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Matrix with row r and column c removed.
  PolyMatrix minor_matrix(std::size_t r, std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t num_vars_ = 0;
  std::vector<Polynomial> data_;
};

/// Cofactor expansion up to size 4, fraction-free elimination above.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyMatrix& m);
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Matrix of cofactors C(r, c) = (-1)^(r+c) det(minor(r, c)).
PolyMatrix cofactor_matrix(const PolyMatrix& m);

}  // namespace coxfree

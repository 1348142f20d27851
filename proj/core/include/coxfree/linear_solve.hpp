#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "coxfree/scalar.hpp"

namespace coxfree {

/// Dense row-major matrix over Scalar. Used for group elements, Gram
/// matrices and small coefficient systems.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Scalar> row(std::size_t r) const;

  ScalarMatrix transpose() const;
  /// Throws std::domain_error for singular or non-square input.
  ScalarMatrix inverse() const;
  Scalar determinant() const;
  std::size_t rank() const;
  bool is_symmetric() const;

  friend ScalarMatrix operator*(const ScalarMatrix& lhs, const ScalarMatrix& rhs);
  friend ScalarMatrix operator-(const ScalarMatrix& lhs, const ScalarMatrix& rhs);
  friend bool operator==(const ScalarMatrix& lhs, const ScalarMatrix& rhs) = default;
  /// Entrywise numeric lexicographic order; lets matrices key ordered maps.
  friend bool operator<(const ScalarMatrix& lhs, const ScalarMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

struct LinearSolution {
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

/// Incremental Gaussian elimination over Scalar. Equations are reduced
/// against the pivots seen so far as they arrive; the pivot is always the
/// first nonzero column of the reduced row, so the result does not depend
/// on anything but the order of insertion.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t num_unknowns) : n_(num_unknowns) {}

  /// Adds the equation sum(row) = rhs.
  void add_equation(SparseRow row, const Scalar& rhs = Scalar(0));

  std::size_t num_unknowns() const noexcept { return n_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool consistent() const noexcept { return consistent_; }

  /// Throws NoSolution when some equation reduced to 0 = c with c != 0.
  LinearSolution solve() const;
  /// Basis of the homogeneous solution space, one vector per free column in
  /// increasing column order.
  std::vector<std::vector<Scalar>> kernel() const;

 private:
  std::map<std::uint32_t, SparseRow> reduced() const;

  std::size_t n_;
  // pivot column -> row with leading entry 1; the right hand side sits in column n_
  std::map<std::uint32_t, SparseRow> pivots_;
  bool consistent_ = true;
};

/// Solves A x = b exactly. Returns one particular solution (free variables
/// set to zero) and a kernel basis; throws NoSolution if inconsistent.
LinearSolution solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b);

/// row <- row - factor * other (both sorted sparse rows).
void axpy_row(SparseRow& row, const Scalar& factor, const SparseRow& other);

}  // namespace coxfree

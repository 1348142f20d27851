#include "coxfree/linear_solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxfree/errors.hpp"

namespace coxfree {

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

std::vector<Scalar> ScalarMatrix::row(std::size_t r) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix operator*(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  ScalarMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  ScalarMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

bool operator<(const ScalarMatrix& lhs, const ScalarMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_) return lhs.rows_ < rhs.rows_;
  if (lhs.cols_ != rhs.cols_) return lhs.cols_ < rhs.cols_;
  for (std::size_t i = 0; i < lhs.data_.size(); ++i) {
    if (lhs.data_[i] == rhs.data_[i]) continue;
    return lhs.data_[i] < rhs.data_[i];
  }
  return false;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

ScalarMatrix ScalarMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Scalar scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar ScalarMatrix::determinant() const {
  if (rows_ != cols_) throw std::domain_error("determinant of a non-square matrix");
  const std::size_t n = rows_;
  ScalarMatrix a = *this;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

std::size_t ScalarMatrix::rank() const {
  RowEchelon ech(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) row.emplace_back(static_cast<std::uint32_t>(c), (*this)(r, c));
    }
    ech.add_equation(std::move(row));
  }
  return ech.rank();
}

void axpy_row(SparseRow& row, const Scalar& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(factor * b->second));
      ++b;
    } else {
      Scalar v = a->second - factor * b->second;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

void RowEchelon::add_equation(SparseRow row, const Scalar& rhs) {
  if (!std::is_sorted(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first <= b.first; })) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow merged;
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second += v;
      } else {
        merged.emplace_back(c, std::move(v));
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second.is_zero(); });
    row = std::move(merged);
  }
  for (const auto& [c, v] : row) {
    if (c >= n_) throw std::out_of_range("equation column out of range");
    (void)v;
  }
  if (!rhs.is_zero()) row.emplace_back(static_cast<std::uint32_t>(n_), rhs);
  while (!row.empty()) {
    const auto col = row.front().first;
    if (col == n_) {
      consistent_ = false;
      return;
    }
    auto it = pivots_.find(col);
    if (it == pivots_.end()) {
      const Scalar inv = row.front().second.inverse();
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(col, std::move(row));
      return;
    }
    const Scalar factor = row.front().second;
    axpy_row(row, factor, it->second);
  }
}

std::map<std::uint32_t, SparseRow> RowEchelon::reduced() const {
  std::map<std::uint32_t, SparseRow> out;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    std::vector<std::pair<std::uint32_t, Scalar>> hits;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first != n_ && out.count(row[i].first)) hits.push_back(row[i]);
    }
    for (const auto& [c, v] : hits) axpy_row(row, v, out.at(c));
    out.emplace(it->first, std::move(row));
  }
  return out;
}

LinearSolution RowEchelon::solve() const {
  if (!consistent_) throw NoSolution();
  const auto rows = reduced();
  LinearSolution sol;
  sol.particular.assign(n_, Scalar(0));
  for (const auto& [p, row] : rows) {
    if (!row.empty() && row.back().first == n_) sol.particular[p] = row.back().second;
  }
  sol.kernel = kernel();
  return sol;
}

std::vector<std::vector<Scalar>> RowEchelon::kernel() const {
  const auto rows = reduced();
  std::vector<std::vector<Scalar>> basis;
  for (std::uint32_t f = 0; f < n_; ++f) {
    if (rows.count(f)) continue;
    std::vector<Scalar> v(n_, Scalar(0));
    v[f] = Scalar(1);
    for (const auto& [p, row] : rows) {
      for (const auto& [c, val] : row) {
        if (c == f) v[p] = -val;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right hand side length does not match the row count");
  RowEchelon ech(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a(r, c).is_zero()) row.emplace_back(static_cast<std::uint32_t>(c), a(r, c));
    }
    ech.add_equation(std::move(row), b[r]);
  }
  return ech.solve();
}

}  // namespace coxfree

#pragma once

// Assembles a linear system from the images of unknown basis vectors, where
// each image is a sparse vector indexed by a structured key (equation family,
// component, monomial). Rows come out in key order, so elimination is
// deterministic.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "coxfree/linear_solve.hpp"
#include "coxfree/polynomial.hpp"

namespace coxfree::detail {

struct EquationKey {
  std::uint32_t family = 0;
  std::uint32_t component = 0;
  Monomial monomial;

  friend bool operator<(const EquationKey& a, const EquationKey& b) {
    return std::tie(a.family, a.component, a.monomial) < std::tie(b.family, b.component, b.monomial);
  }
};

class KeyedSystem {
 public:
  explicit KeyedSystem(std::size_t num_unknowns) : n_(num_unknowns) {}

  /// Adds coefficient * e_unknown to the equation `key`. Unknowns must be fed
  /// in nondecreasing order.
  void add(const EquationKey& key, std::size_t unknown, const Scalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto& row = rows_[key];
    if (!row.empty() && row.back().first == unknown) {
      row.back().second += coefficient;
      if (row.back().second.is_zero()) row.pop_back();
    } else {
      row.emplace_back(static_cast<std::uint32_t>(unknown), coefficient);
    }
  }

  /// Adds every term of p, as equations (family, component, monomial).
  void add_polynomial(std::uint32_t family, std::uint32_t component, std::size_t unknown, const Polynomial& p) {
    for (const auto& t : p.terms()) add(EquationKey{family, component, t.monomial}, unknown, t.coefficient);
  }

  void add_rhs(std::uint32_t family, std::uint32_t component, const Polynomial& p) {
    for (const auto& t : p.terms()) {
      auto& v = rhs_[EquationKey{family, component, t.monomial}];
      v += t.coefficient;
    }
  }

  RowEchelon eliminate() const {
    RowEchelon ech(n_);
    auto r = rows_.begin();
    auto b = rhs_.begin();
    while (r != rows_.end() || b != rhs_.end()) {
      if (b == rhs_.end() || (r != rows_.end() && r->first < b->first)) {
        ech.add_equation(r->second);
        ++r;
      } else if (r == rows_.end() || b->first < r->first) {
        ech.add_equation({}, b->second);
        ++b;
      } else {
        ech.add_equation(r->second, b->second);
        ++r;
        ++b;
      }
    }
    return ech;
  }

 private:
  std::size_t n_;
  std::map<EquationKey, SparseRow> rows_;
  std::map<EquationKey, Scalar> rhs_;
};

}  // namespace coxfree::detail

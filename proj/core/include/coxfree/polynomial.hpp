#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "coxfree/scalar.hpp"

namespace coxfree {

inline constexpr std::size_t kMaxVariables = 8;

/// Exponent vector. Ordered by graded lexicographic order with x1 > x2 > ...
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const unsigned> exponents);
  Monomial(std::initializer_list<unsigned> exponents);

  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }

  bool divides(const Monomial& other) const noexcept;
  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  /// Requires rhs.divides(lhs).
  friend Monomial operator/(const Monomial& lhs, const Monomial& rhs);

  friend bool operator==(const Monomial& lhs, const Monomial& rhs) noexcept {
    return lhs.exps_ == rhs.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) noexcept {
    if (lhs.degree_ != rhs.degree_) return lhs.degree_ <=> rhs.degree_;
    return lhs.exps_ <=> rhs.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

/// All monomials of total degree `degree` in `num_vars` variables, in
/// decreasing graded lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);
/// Number of monomials of total degree `degree` in `num_vars` variables;
/// zero for negative degrees.
std::size_t count_monomials(std::size_t num_vars, int degree);

struct Term {
  Monomial monomial;
  Scalar coefficient;
};

inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over Scalar. Terms are kept in strictly
/// decreasing graded lexicographic order and never carry a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 0);

  static Polynomial constant(std::size_t num_vars, const Scalar& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(std::size_t num_vars, const Monomial& m, const Scalar& c = Scalar(1));
  static Polynomial linear_form(std::span<const Scalar> coefficients);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// kZeroDegree for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  const Term& leading_term() const;
  Scalar coefficient(const Monomial& m) const;
  /// Coefficients of x1..xn of a linear form (ignores other terms).
  std::vector<Scalar> linear_coefficients() const;

  Polynomial derivative(std::size_t index) const;
  /// Replaces x_i by images[i]; all images share one variable count.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& rhs);
  Polynomial& operator/=(const Scalar& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Scalar& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator/(Polynomial lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& rhs) const;
  Polynomial& add_scaled(const Polynomial& rhs, const Scalar& factor);

  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Formal partial derivative with respect to x_index (zero based).
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division by a single polynomial in graded lex order. The
/// remainder vanishes exactly when q divides p.
DivisionResult divide(const Polynomial& p, const Polynomial& q);

/// Returns r with p == q * r; throws NotDivisible carrying the remainder.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

/// Multiplicity of a linear form as a factor. The zero polynomial has
/// infinite order.
class Order {
 public:
  constexpr Order() = default;
  constexpr explicit Order(unsigned value) : value_(value) {}
  static constexpr Order infinite() {
    Order o;
    o.infinite_ = true;
    return o;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Meaningless for the infinite order.
  constexpr unsigned value() const noexcept { return value_; }
  constexpr bool at_least(unsigned k) const noexcept { return infinite_ || value_ >= k; }

  friend constexpr bool operator==(const Order&, const Order&) = default;
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  unsigned value_ = 0;
  bool infinite_ = false;
};

/// Largest k with alpha^k | p, computed by repeated exact division.
/// alpha must be a nonzero linear form.
Order linear_form_order(const Polynomial& p, const Polynomial& alpha);

}  // namespace coxfree

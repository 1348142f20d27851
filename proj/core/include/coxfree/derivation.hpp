#pragma once

#include <string>
#include <vector>

#include "coxfree/polynomial.hpp"
#include "coxfree/reflection_group.hpp"

namespace coxfree {

/// Polynomial vector field sum_i f_i d/dx_i.
///
/// Degrees are coefficient degrees: the Euler field has degree 1 and the
/// coordinate fields degree 0.
class Derivation {
 public:
  explicit Derivation(std::size_t num_vars = 0);
  explicit Derivation(std::vector<Polynomial> coefficients);

  static Derivation coordinate(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return coefficients_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coefficients_; }

  bool is_zero() const;
  /// Every nonzero coefficient is homogeneous of one common degree.
  bool is_homogeneous() const;
  /// Largest coefficient degree; kZeroDegree for the zero field.
  int degree() const;

  /// delta(f) = sum_i f_i df/dx_i
  Polynomial apply(const Polynomial& f) const;

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& rhs);
  Derivation& operator-=(const Derivation& rhs);
  Derivation& operator*=(const Scalar& c);
  Derivation& operator*=(const Polynomial& f);

  friend Derivation operator+(Derivation lhs, const Derivation& rhs) { return lhs += rhs; }
  friend Derivation operator-(Derivation lhs, const Derivation& rhs) { return lhs -= rhs; }
  friend Derivation operator*(const Scalar& c, Derivation d) { return d *= c; }
  friend Derivation operator*(const Polynomial& f, Derivation d) { return d *= f; }
  friend bool operator==(const Derivation&, const Derivation&) = default;

  std::string to_string() const;

 private:
  std::vector<Polynomial> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const Derivation& d);

/// (w.delta)(x) = w delta(w^{-1} x)
Derivation act(const ReflectionGroup& group, std::size_t element, const Derivation& delta);

/// Invariance under the simple reflections, hence under all of W.
bool is_invariant(const ReflectionGroup& group, const Derivation& delta);
bool is_invariant(const ReflectionGroup& group, const Polynomial& p);

}  // namespace coxfree

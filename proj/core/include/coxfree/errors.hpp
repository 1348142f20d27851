#pragma once

#include <stdexcept>
#include <string>

#include "coxfree/polynomial.hpp"

namespace coxfree {

/// Raised by exact_divide when the divisor does not divide the dividend.
/// The remainder is kept as a witness: a nonzero remainder proves that the
/// dividend lies outside the ideal generated by the divisor.
class NotDivisible : public std::runtime_error {
 public:
  NotDivisible(Polynomial remainder)
      : std::runtime_error("polynomial is not divisible"), remainder_(std::move(remainder)) {}
  const Polynomial& remainder() const noexcept { return remainder_; }

 private:
  Polynomial remainder_;
};

class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  NoSolution() : std::runtime_error("linear system is inconsistent") {}
};

/// The solution space of a system that should have a unique solution is
/// positive dimensional.
class NonUnique : public std::runtime_error {
 public:
  NonUnique(std::size_t kernel_dimension)
      : std::runtime_error("solution is not unique (kernel dimension " +
                           std::to_string(kernel_dimension) + ")"),
        kernel_dimension_(kernel_dimension) {}
  std::size_t kernel_dimension() const noexcept { return kernel_dimension_; }

 private:
  std::size_t kernel_dimension_;
};

/// A rational vector field applied to a polynomial field did not produce a
/// polynomial field.
class NotPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class JacobianDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxfree

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coxfree {

/// Element a + b*sqrt(d) of Q(sqrt d), with d a square-free integer > 1, or of
/// Q itself.
///
/// Canonical form: a and b are reduced fractions, and whenever b == 0 the
/// radicand is stored as 1. A value with b == 0 is therefore a plain rational
/// and combines with elements of any quadratic field. Mixing two different
/// radicands is a domain error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : a_(value) {}
  Scalar(long value) : a_(value) {}
  Scalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }
  Scalar(long num, long den);
  Scalar(mpq_class a, mpq_class b, std::uint32_t radicand);

  /// sqrt(d) for a square-free d > 1.
  static Scalar sqrt_of(std::uint32_t radicand);
  /// Parses "p", "p/q", "a+b*sqrt(d)", "a-b*sqrt(d)" and "b*sqrt(d)".
  static Scalar parse(std::string_view text);

  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& irrational_part() const noexcept { return b_; }
  std::uint32_t radicand() const noexcept { return d_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const noexcept { return sgn(b_) == 0 && a_ == 1; }
  bool is_rational() const noexcept { return d_ == 1; }
  /// Exact sign of the real number a + b*sqrt(d).
  int sign() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  /// Numeric order on the real line.
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

 private:
  void normalize();
  std::uint32_t common_radicand(const Scalar& rhs) const;

  mpq_class a_{0};
  mpq_class b_{0};
  std::uint32_t d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

bool is_square_free(std::uint32_t n);

}  // namespace coxfree

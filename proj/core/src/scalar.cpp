#include "coxfree/scalar.hpp"

#include <ostream>
#include <regex>
#include <stdexcept>

namespace coxfree {

bool is_square_free(std::uint32_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  a_ = mpq_class(num, den);
  a_.canonicalize();
}

Scalar::Scalar(mpq_class a, mpq_class b, std::uint32_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  if (d_ != 1 && (d_ < 2 || !is_square_free(d_))) {
    throw std::domain_error("radicand must be square-free and > 1");
  }
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 1 && sgn(b_) != 0) {
    // sqrt(1) == 1
    a_ += b_;
    b_ = 0;
  }
  normalize();
}

Scalar Scalar::sqrt_of(std::uint32_t radicand) { return Scalar(mpq_class(0), mpq_class(1), radicand); }

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 1;
}

std::uint32_t Scalar::common_radicand(const Scalar& rhs) const {
  if (d_ == 1) return rhs.d_;
  if (rhs.d_ == 1 || rhs.d_ == d_) return d_;
  throw std::domain_error("cannot combine scalars from Q(sqrt " + std::to_string(d_) +
                          ") and Q(sqrt " + std::to_string(rhs.d_) + ")");
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with d b^2
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = b_ * b_ * d_;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (d_ == 1) return Scalar(mpq_class(1) / a_);
  const mpq_class norm = a_ * a_ - b_ * b_ * d_;
  return Scalar(mpq_class(a_ / norm), mpq_class(-b_ / norm), d_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  const auto d = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  const auto d = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (rhs.d_ == 1 && d_ == 1) {
    a_ *= rhs.a_;
    return *this;
  }
  const auto d = common_radicand(rhs);
  const mpq_class a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  const mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.d_ == 1) {
    if (sgn(rhs.a_) == 0) throw std::domain_error("division by zero scalar");
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  const int s = (lhs - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (d_ == 1) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  if (sgn(b_) < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  mpq_class mag = abs(b_);
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

namespace {

mpq_class parse_rational(std::string text) {
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  static const std::regex rational_re(R"(^\s*([+-]?\d+(?:/\d+)?)\s*$)");
  static const std::regex quadratic_re(
      R"(^\s*([+-]?\d+(?:/\d+)?)?\s*(?:([+-])\s*(\d+(?:/\d+)?\s*\*)?\s*|((?:[+-]?\d+(?:/\d+)?)\s*\*)?\s*)sqrt\((\d+)\)\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, rational_re)) return Scalar(parse_rational(m[1].str()));
  if (!std::regex_match(s, m, quadratic_re)) throw std::invalid_argument("malformed scalar '" + s + "'");

  mpq_class a = m[1].matched ? parse_rational(m[1].str()) : mpq_class(0);
  mpq_class b(1);
  if (m[2].matched) {
    if (m[3].matched) {
      std::string coeff = m[3].str();
      coeff.erase(coeff.find('*'));
      while (!coeff.empty() && coeff.back() == ' ') coeff.pop_back();
      b = parse_rational(coeff);
    }
    if (m[2].str() == "-") b = -b;
  } else {
    if (m[1].matched) throw std::invalid_argument("malformed scalar '" + s + "'");
    if (m[4].matched) {
      std::string coeff = m[4].str();
      coeff.erase(coeff.find('*'));
      while (!coeff.empty() && coeff.back() == ' ') coeff.pop_back();
      b = parse_rational(coeff);
    }
  }
  const auto d = static_cast<std::uint32_t>(std::stoul(m[5].str()));
  return Scalar(std::move(a), std::move(b), d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace coxfree

#include "coxfree/derivation.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxfree {

Derivation::Derivation(std::size_t num_vars) : coefficients_(num_vars, Polynomial(num_vars)) {}

Derivation::Derivation(std::vector<Polynomial> coefficients) : coefficients_(std::move(coefficients)) {
  for (const auto& c : coefficients_) {
    if (c.num_vars() != coefficients_.size()) {
      throw std::invalid_argument("derivation needs one coefficient per variable");
    }
  }
}

Derivation Derivation::coordinate(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("coordinate field index out of range");
  Derivation d(num_vars);
  d.coefficients_[index] = Polynomial::constant(num_vars, Scalar(1));
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& c : coefficients_)
    if (!c.is_zero()) return false;
  return true;
}

bool Derivation::is_homogeneous() const {
  int deg = kZeroDegree;
  for (const auto& c : coefficients_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    if (deg == kZeroDegree) {
      deg = c.degree();
    } else if (deg != c.degree()) {
      return false;
    }
  }
  return true;
}

int Derivation::degree() const {
  int deg = kZeroDegree;
  for (const auto& c : coefficients_) deg = std::max(deg, c.degree());
  return deg;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  if (f.num_vars() != num_vars()) throw std::invalid_argument("derivation and polynomial disagree on variable count");
  Polynomial out(num_vars());
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    out += coefficients_[i] * f.derivative(i);
  }
  return out;
}

Derivation Derivation::operator-() const {
  Derivation r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

Derivation& Derivation::operator+=(const Derivation& rhs) {
  if (rhs.num_vars() != num_vars()) throw std::invalid_argument("derivations disagree on variable count");
  for (std::size_t i = 0; i < num_vars(); ++i) coefficients_[i] += rhs.coefficients_[i];
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& rhs) {
  if (rhs.num_vars() != num_vars()) throw std::invalid_argument("derivations disagree on variable count");
  for (std::size_t i = 0; i < num_vars(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  return *this;
}

Derivation& Derivation::operator*=(const Scalar& c) {
  for (auto& p : coefficients_) p *= c;
  return *this;
}

Derivation& Derivation::operator*=(const Polynomial& f) {
  for (auto& p : coefficients_) p *= f;
  return *this;
}

std::string Derivation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coefficients_[i] << ")*d" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Derivation& d) { return os << d.to_string(); }

Derivation act(const ReflectionGroup& group, std::size_t element, const Derivation& delta) {
  const std::size_t n = delta.num_vars();
  const ScalarMatrix& w = group.element(element);
  std::vector<Polynomial> moved;
  moved.reserve(n);
  for (std::size_t j = 0; j < n; ++j) moved.push_back(act(group, element, delta[j]));
  std::vector<Polynomial> out(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!w(i, j).is_zero()) out[i] += moved[j] * w(i, j);
  return Derivation(std::move(out));
}

bool is_invariant(const ReflectionGroup& group, const Derivation& delta) {
  for (std::size_t s : group.simple_reflections())
    if (!(act(group, s, delta) == delta)) return false;
  return true;
}

bool is_invariant(const ReflectionGroup& group, const Polynomial& p) {
  for (std::size_t s : group.simple_reflections())
    if (!(act(group, s, p) == p)) return false;
  return true;
}

}  // namespace coxfree

#include "coxfree/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "coxfree/errors.hpp"

namespace coxfree {

namespace {

using TermMap = std::map<Monomial, Scalar, std::greater<>>;

std::vector<Term> drain(TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
  }
  return out;
}

const char* short_name(std::size_t i) {
  static const char* names[] = {"x", "y", "z", "w"};
  return names[i];
}

}  // namespace

Monomial::Monomial(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::out_of_range("monomial index");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(lhs.exps_[i] + rhs.exps_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(lhs.degree_ + rhs.degree_);
  return r;
}

Monomial operator/(const Monomial& lhs, const Monomial& rhs) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(lhs.exps_[i] - rhs.exps_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(lhs.degree_ - rhs.degree_);
  return r;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> exps(num_vars, 0);
  // Enumerate compositions in decreasing lex order of the exponent vector.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == num_vars) {
      exps[i] = left;
      out.emplace_back(std::span<const unsigned>(exps));
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[i] = e;
      rec(i + 1, left - e);
    }
  };
  rec(0, degree);
  return out;
}

std::size_t count_monomials(std::size_t num_vars, int degree) {
  if (degree < 0) return 0;
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  // C(degree + n - 1, n - 1)
  std::size_t r = 1;
  for (std::size_t i = 1; i < num_vars; ++i) {
    r = r * (static_cast<std::size_t>(degree) + i) / i;
  }
  return r;
}

Polynomial::Polynomial(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars > kMaxVariables) throw std::invalid_argument("too many variables");
}

Polynomial Polynomial::constant(std::size_t num_vars, const Scalar& c) {
  Polynomial p(num_vars);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return monomial(num_vars, m);
}

Polynomial Polynomial::monomial(std::size_t num_vars, const Monomial& m, const Scalar& c) {
  Polynomial p(num_vars);
  for (std::size_t i = num_vars; i < kMaxVariables; ++i) {
    if (m[i] != 0) throw std::invalid_argument("monomial uses more variables than the ring has");
  }
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::linear_form(std::span<const Scalar> coefficients) {
  Polynomial p(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    Monomial m;
    m.set(i, 1);
    p.terms_.push_back(Term{m, coefficients[i]});
  }
  return p;
}

Polynomial Polynomial::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(t.monomial, t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  Polynomial p(num_vars);
  p.terms_ = drain(acc);
  for (const auto& t : p.terms_) {
    for (std::size_t i = num_vars; i < kMaxVariables; ++i) {
      if (t.monomial[i] != 0) throw std::invalid_argument("term uses more variables than the ring has");
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.degree() == 0);
}

int Polynomial::degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  // grlex: the leading term has maximal total degree
  return static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.front().monomial.degree();
  return terms_.back().monomial.degree() == d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Scalar(0);
}

std::vector<Scalar> Polynomial::linear_coefficients() const {
  std::vector<Scalar> out(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    Monomial m;
    m.set(i, 1);
    out[i] = coefficient(m);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= num_vars_) throw std::out_of_range("partial derivative index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    out.push_back(Term{m, t.coefficient * Scalar(static_cast<long>(e))});
  }
  // Lowering one exponent can reorder terms, so go through from_terms.
  return from_terms(num_vars_, std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_vars_) throw std::invalid_argument("substitution arity mismatch");
  const std::size_t target_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images) {
    if (img.num_vars() != target_vars) throw std::invalid_argument("substitution images disagree on variable count");
  }
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, Scalar(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  TermMap acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target_vars, t.coefficient);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (t.monomial[i] != 0) prod *= power(i, t.monomial[i]);
    }
    for (auto& pt : prod.terms_) {
      auto [it, inserted] = acc.try_emplace(pt.monomial, pt.coefficient);
      if (!inserted) it->second += pt.coefficient;
    }
  }
  Polynomial r(target_vars);
  r.terms_ = drain(acc);
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(num_vars_, Scalar(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (num_vars_ != rhs.num_vars_) {
    throw std::invalid_argument("polynomials live in rings with different variable counts (" +
                                std::to_string(num_vars_) + " vs " + std::to_string(rhs.num_vars_) + ")");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::add_scaled(const Polynomial& rhs, const Scalar& factor) {
  check_compatible(rhs);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back(Term{b->monomial, b->coefficient * factor});
      ++b;
    } else {
      Scalar c = a->coefficient + b->coefficient * factor;
      if (!c.is_zero()) out.push_back(Term{a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) { return add_scaled(rhs, Scalar(1)); }
Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return add_scaled(rhs, Scalar(-1)); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_compatible(rhs);
  Polynomial r(lhs.num_vars_);
  if (lhs.is_zero() || rhs.is_zero()) return r;
  if (rhs.terms_.size() == 1) {
    const auto& [m, c] = rhs.terms_.front();
    r.terms_.reserve(lhs.terms_.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& t : lhs.terms_) r.terms_.push_back(Term{t.monomial * m, t.coefficient * c});
    return r;
  }
  if (lhs.terms_.size() == 1) return rhs * lhs;
  TermMap acc;
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      Scalar prod = a.coefficient * b.coefficient;
      auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial);
      if (inserted) {
        it->second = std::move(prod);
      } else {
        it->second += prod;
      }
    }
  }
  r.terms_ = drain(acc);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= rhs;
  return *this;
}

Polynomial& Polynomial::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.num_vars_ != rhs.num_vars_ || lhs.terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (!(lhs.terms_[i].monomial == rhs.terms_[i].monomial) ||
        !(lhs.terms_[i].coefficient == rhs.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coefficient;
    const bool irrational = !c.is_rational();
    bool negative = !irrational && c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c.is_one();
    if (t.monomial.degree() == 0 || !unit) {
      if (irrational) {
        os << "(" << c << ")";
      } else {
        os << c;
      }
    }
    bool need_star = t.monomial.degree() != 0 && !unit;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (num_vars_ <= 4) {
        os << short_name(i);
      } else {
        os << "x" << (i + 1);
      }
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial partial_derivative(const Polynomial& p, std::size_t index) { return p.derivative(index); }

DivisionResult divide(const Polynomial& p, const Polynomial& q) {
  if (p.num_vars() != q.num_vars()) throw std::invalid_argument("division across rings with different variable counts");
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& lead = q.leading_term();
  const Scalar lead_inv = lead.coefficient.inverse();

  TermMap work;
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coefficient);
  std::vector<Term> quotient;
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    if (!lead.monomial.divides(it->first)) {
      remainder.push_back(Term{it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    const Monomial m = it->first / lead.monomial;
    const Scalar c = it->second * lead_inv;
    work.erase(it);
    for (std::size_t i = 1; i < q.terms().size(); ++i) {
      const auto& qt = q.terms()[i];
      Scalar delta = -(c * qt.coefficient);
      auto [slot, inserted] = work.try_emplace(qt.monomial * m, delta);
      if (!inserted) {
        slot->second += delta;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
    quotient.push_back(Term{m, c});
  }
  return DivisionResult{Polynomial::from_terms(p.num_vars(), std::move(quotient)),
                        Polynomial::from_terms(p.num_vars(), std::move(remainder))};
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
  auto [quotient, remainder] = divide(p, q);
  if (!remainder.is_zero()) throw NotDivisible(std::move(remainder));
  return quotient;
}

Order linear_form_order(const Polynomial& p, const Polynomial& alpha) {
  if (alpha.is_zero() || alpha.degree() != 1 || !alpha.is_homogeneous()) {
    throw std::invalid_argument("linear_form_order needs a nonzero linear form, got " + alpha.to_string());
  }
  if (p.is_zero()) return Order::infinite();
  unsigned k = 0;
  Polynomial current = p;
  while (true) {
    auto [quotient, remainder] = divide(current, alpha);
    if (!remainder.is_zero()) break;
    current = std::move(quotient);
    ++k;
  }
  return Order(k);
}

}  // namespace coxfree

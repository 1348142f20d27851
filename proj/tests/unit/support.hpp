#pragma once

#include <cctype>
#include <random>
#include <string>

#include "coxfree/polynomial.hpp"

namespace coxfree::testing {

inline Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
inline Polynomial cst(std::size_t n, long c) { return Polynomial::constant(n, Scalar(c)); }

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree, std::size_t terms) {
  std::vector<Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> e(n, 0);
    unsigned budget = static_cast<unsigned>(rng() % (max_degree + 1));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      const unsigned take = (i + 1 == n) ? budget : static_cast<unsigned>(rng() % (budget + 1));
      e[i] = take;
      budget -= take;
    }
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 3) + 1;
    out.push_back(Term{Monomial(e), Scalar(num, den)});
  }
  return Polynomial::from_terms(n, std::move(out));
}

inline Scalar evaluate(const Polynomial& p, const std::vector<long>& point) {
  std::vector<Polynomial> images;
  for (long v : point) images.push_back(Polynomial::constant(p.num_vars(), Scalar(v)));
  const Polynomial value = p.substitute(images);
  return value.is_zero() ? Scalar(0) : value.leading_term().coefficient;
}

}  // namespace coxfree::testing

namespace coxfree::testing {

inline std::string label_name(const char* label) {
  std::string out;
  for (const char* p = label; *p; ++p) {
    if (std::isalnum(static_cast<unsigned char>(*p))) out += *p;
  }
  return out;
}

struct LabelName {
  template <class Info>
  std::string operator()(const Info& info) const {
    return label_name(info.param);
  }
};

}  // namespace coxfree::testing

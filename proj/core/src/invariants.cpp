#include "coxfree/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "coxfree/errors.hpp"

namespace coxfree {

namespace {

// Exponent vectors a with sum a_i * weights[i] == total, last index varying
// slowest.
std::vector<std::vector<unsigned>> weighted_compositions(const std::vector<unsigned>& weights, unsigned total) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> a(weights.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == weights.size()) {
      if (left == 0) out.push_back(a);
      return;
    }
    for (unsigned e = 0; e * weights[i] <= left; ++e) {
      a[i] = e;
      rec(i + 1, left - e * weights[i]);
    }
    a[i] = 0;
  };
  rec(0, total);
  return out;
}

std::vector<Polynomial> products(const std::vector<Polynomial>& gens, const std::vector<unsigned>& weights,
                                 unsigned total, std::size_t num_vars) {
  std::vector<Polynomial> out;
  std::vector<std::vector<Polynomial>> powers(gens.size());
  for (const auto& a : weighted_compositions(weights, total)) {
    Polynomial p = Polynomial::constant(num_vars, Scalar(1));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial::constant(num_vars, Scalar(1)));
      while (cache.size() <= a[i]) cache.push_back(cache.back() * gens[i]);
      p *= cache[a[i]];
    }
    out.push_back(std::move(p));
  }
  return out;
}

SparseRow coordinates(const Polynomial& p, const std::map<Monomial, std::uint32_t>& index) {
  SparseRow row;
  for (const auto& t : p.terms()) row.emplace_back(index.at(t.monomial), t.coefficient);
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

}  // namespace

InvariantSystem compute_invariants(const CoxeterDatum& datum, const ReflectionGroup& group,
                                   const Arrangement& arrangement) {
  const std::size_t n = datum.rank;
  std::vector<Polynomial> chosen;
  std::vector<unsigned> chosen_degrees;

  std::size_t pos = 0;
  while (pos < datum.degrees.size()) {
    const unsigned d = datum.degrees[pos];
    std::size_t needed = 0;
    while (pos + needed < datum.degrees.size() && datum.degrees[pos + needed] == d) ++needed;

    const auto monos = monomials_of_degree(n, d);
    std::map<Monomial, std::uint32_t> index;
    for (std::uint32_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    RowEchelon span(monos.size());
    for (const auto& p : products(chosen, chosen_degrees, d, n)) span.add_equation(coordinates(p, index));

    std::size_t found = 0;
    for (const auto& m : monos) {
      if (found == needed) break;
      Polynomial avg = reynolds(group, Polynomial::monomial(n, m));
      if (avg.is_zero()) continue;
      const std::size_t before = span.rank();
      span.add_equation(coordinates(avg, index));
      if (span.rank() == before) continue;
      avg /= avg.leading_term().coefficient;
      chosen.push_back(std::move(avg));
      chosen_degrees.push_back(d);
      ++found;
    }
    if (found != needed) {
      throw JacobianDegenerate("could not find " + std::to_string(needed) + " independent invariants of degree " +
                               std::to_string(d) + " for " + datum.label);
    }
    pos += needed;
  }
  return make_invariant_system(datum, group, arrangement, std::move(chosen));
}

InvariantSystem make_invariant_system(const CoxeterDatum& datum, const ReflectionGroup& group,
                                      const Arrangement& arrangement, std::vector<Polynomial> generators) {
  const std::size_t n = datum.rank;
  if (generators.size() != n) throw std::invalid_argument("need exactly rank-many generators");
  InvariantSystem sys;
  for (const auto& g : generators) {
    if (g.num_vars() != n || g.is_zero() || !g.is_homogeneous()) {
      throw std::invalid_argument("generators must be nonzero homogeneous polynomials in the group's coordinates");
    }
    if (!is_invariant(group, g)) throw std::invalid_argument("generator " + g.to_string() + " is not W-invariant");
    sys.degrees.push_back(static_cast<unsigned>(g.degree()));
  }
  if (!std::is_sorted(sys.degrees.begin(), sys.degrees.end())) {
    throw std::invalid_argument("generators must be listed by nondecreasing degree");
  }
  if (sys.degrees != datum.degrees) {
    throw JacobianDegenerate("generator degrees do not match the classical degrees of " + datum.label);
  }
  sys.generators = std::move(generators);
  sys.coxeter_number = sys.degrees.back();
  for (unsigned d : sys.degrees) sys.exponents.push_back(d - 1);
  if (n >= 2 && !(sys.degrees[n - 2] < sys.coxeter_number)) {
    throw std::logic_error("second largest degree is not below the Coxeter number");
  }

  sys.jacobian_matrix = PolyMatrix(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys.jacobian_matrix(i, j) = sys.generators[j].derivative(i);
  sys.jacobian = determinant(sys.jacobian_matrix);
  if (sys.jacobian.is_zero()) throw JacobianDegenerate("Jacobian vanishes identically for " + datum.label);

  auto [quotient, remainder] = divide(sys.jacobian, arrangement.defining_polynomial);
  if (!remainder.is_zero() || !quotient.is_constant() || quotient.is_zero()) {
    throw JacobianDegenerate("Jacobian is not a nonzero multiple of Q for " + datum.label);
  }
  sys.jacobian_scalar = quotient.leading_term().coefficient;
  sys.cofactors = cofactor_matrix(sys.jacobian_matrix);
  sys.gradients = gradient_basis(sys, datum);
  return sys;
}

std::vector<Derivation> gradient_basis(const InvariantSystem& system, const CoxeterDatum& datum) {
  const std::size_t n = system.num_vars();
  std::vector<Derivation> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> coeffs(n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!datum.form_gram(i, k).is_zero()) coeffs[i] += system.jacobian_matrix(k, j) * datum.form_gram(i, k);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Polynomial RationalField::apply(const Polynomial& f) const {
  auto [quotient, remainder] = divide(numerator.apply(f), denominator);
  if (!remainder.is_zero()) throw NotPolynomial("rational vector field applied to " + f.to_string() + " has poles");
  return quotient;
}

RationalField partial_P_field(const InvariantSystem& system, std::size_t index) {
  const std::size_t n = system.num_vars();
  if (index >= n) throw std::out_of_range("invariant index out of range");
  std::vector<Polynomial> coeffs;
  for (std::size_t j = 0; j < n; ++j) coeffs.push_back(system.cofactors(j, index));
  return RationalField{Derivation(std::move(coeffs)), system.jacobian};
}

std::vector<Polynomial> invariant_polynomial_basis(const InvariantSystem& system, unsigned degree) {
  return products(system.generators, system.degrees, degree, system.num_vars());
}

std::vector<Derivation> invariant_field_basis(const InvariantSystem& system, unsigned degree) {
  std::vector<Derivation> out;
  for (std::size_t j = 0; j < system.num_vars(); ++j) {
    const unsigned m = system.exponents[j];
    if (degree < m) continue;
    for (const auto& p : invariant_polynomial_basis(system, degree - m)) out.push_back(p * system.gradients[j]);
  }
  return out;
}

}  // namespace coxfree

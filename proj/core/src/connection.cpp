#include "coxfree/connection.hpp"

#include <stdexcept>

#include "coxfree/errors.hpp"
#include "keyed_system.hpp"

namespace coxfree {

using detail::KeyedSystem;

Derivation nabla(const Derivation& d1, const Derivation& d2) {
  if (d1.num_vars() != d2.num_vars()) throw std::invalid_argument("derivations disagree on variable count");
  std::vector<Polynomial> out;
  out.reserve(d2.num_vars());
  for (const auto& f : d2.coefficients()) out.push_back(d1.apply(f));
  return Derivation(std::move(out));
}

Derivation euler(std::size_t num_vars) {
  if (num_vars == 0) throw std::invalid_argument("Euler field needs at least one variable");
  std::vector<Polynomial> coeffs;
  for (std::size_t i = 0; i < num_vars; ++i) coeffs.push_back(Polynomial::variable(num_vars, i));
  return Derivation(std::move(coeffs));
}

Polynomial primitive_numerator(const Polynomial& f, const InvariantSystem& system) {
  const std::size_t n = system.num_vars();
  const std::size_t last = n - 1;
  Polynomial out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = system.cofactors(i, last);
    if (c.is_zero()) continue;
    Polynomial df = f.derivative(i);
    if (!df.is_zero()) out += c * df;
  }
  return out;
}

Polynomial apply_primitive(const Polynomial& f, const InvariantSystem& system) {
  auto [quotient, remainder] = divide(primitive_numerator(f, system), system.jacobian);
  if (!remainder.is_zero()) throw NotPolynomial("D(" + f.to_string() + ") is not a polynomial");
  return quotient;
}

Derivation nabla_D(const Derivation& delta, const InvariantSystem& system) {
  std::vector<Polynomial> out;
  out.reserve(delta.num_vars());
  for (const auto& f : delta.coefficients()) out.push_back(apply_primitive(f, system));
  return Derivation(std::move(out));
}

namespace {

Derivation combine(const std::vector<Derivation>& basis, const std::vector<Scalar>& coeffs, std::size_t n) {
  Derivation out(n);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!coeffs[a].is_zero()) out += coeffs[a] * basis[a];
  }
  return out;
}

// Solves for x in span(basis) with J * nabla_D(x) == J * delta; extra rows
// come from `constrain`.
template <typename Constrain>
Derivation solve_preimage(const std::vector<Derivation>& basis, const Derivation& delta,
                          const InvariantSystem& system, Constrain&& constrain) {
  const std::size_t n = system.num_vars();
  KeyedSystem ks(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      if (basis[a][i].is_zero()) continue;
      ks.add_polynomial(0, static_cast<std::uint32_t>(i), a, primitive_numerator(basis[a][i], system));
    }
    constrain(ks, a);
  }
  for (std::size_t i = 0; i < n; ++i) ks.add_rhs(0, static_cast<std::uint32_t>(i), system.jacobian * delta[i]);

  const auto ech = ks.eliminate();
  if (!ech.consistent()) throw NoSolution("field is not in the image of nabla_D on invariant fields");
  const auto sol = ech.solve();
  if (!sol.kernel.empty()) throw NonUnique(sol.kernel.size());
  return combine(basis, sol.particular, n);
}

}  // namespace

Derivation nabla_D_inverse(const Derivation& delta, const InvariantSystem& system, const ReflectionGroup& group,
                           InverseMethod method) {
  const std::size_t n = system.num_vars();
  if (delta.num_vars() != n) throw std::invalid_argument("field lives in the wrong number of variables");
  if (delta.is_zero()) return Derivation(n);
  if (!delta.is_homogeneous()) throw std::invalid_argument("nabla_D_inverse needs a homogeneous field");
  if (!is_invariant(group, delta)) throw NoSolution("field is not W-invariant");

  const unsigned target = static_cast<unsigned>(delta.degree()) + system.coxeter_number;
  Derivation result(n);
  if (method == InverseMethod::InvariantBasis) {
    const auto basis = invariant_field_basis(system, target);
    result = solve_preimage(basis, delta, system, [](KeyedSystem&, std::size_t) {});
  } else {
    std::vector<Derivation> basis;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& m : monomials_of_degree(n, target)) {
        std::vector<Polynomial> coeffs(n, Polynomial(n));
        coeffs[i] = Polynomial::monomial(n, m);
        basis.emplace_back(std::move(coeffs));
      }
    }
    const auto& simple = group.simple_reflections();
    result = solve_preimage(basis, delta, system, [&](KeyedSystem& ks, std::size_t a) {
      for (std::size_t s = 0; s < simple.size(); ++s) {
        const Derivation moved = act(group, simple[s], basis[a]) - basis[a];
        for (std::size_t i = 0; i < n; ++i) {
          ks.add_polynomial(static_cast<std::uint32_t>(1 + s), static_cast<std::uint32_t>(i), a, moved[i]);
        }
      }
    });
  }
  if (!(nabla_D(result, system) == delta)) {
    throw std::logic_error("nabla_D does not reproduce the input from its computed preimage");
  }
  return result;
}

}  // namespace coxfree

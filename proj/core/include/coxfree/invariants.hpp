#pragma once

#include <vector>

#include "coxfree/coxeter_datum.hpp"
#include "coxfree/derivation.hpp"
#include "coxfree/poly_matrix.hpp"
#include "coxfree/reflection_group.hpp"

namespace coxfree {

/// Basic invariants P_1..P_l with the data derived from them.
struct InvariantSystem {
  std::vector<Polynomial> generators;
  std::vector<unsigned> degrees;    // d_1 <= ... <= d_l
  std::vector<unsigned> exponents;  // d_i - 1
  unsigned coxeter_number = 0;      // h = d_l
  PolyMatrix jacobian_matrix;       // (i, j) = dP_j / dx_i
  PolyMatrix cofactors;             // cofactor matrix of jacobian_matrix
  Polynomial jacobian;              // det(jacobian_matrix)
  Scalar jacobian_scalar;           // J = c * Q
  std::vector<Derivation> gradients;

  std::size_t num_vars() const noexcept { return generators.size(); }
};

/// Reynolds-averages monomials of each classical degree and keeps the first
/// averages (in monomial order) that are independent of the products of the
/// generators already chosen. Each choice is scaled to leading coefficient 1.
InvariantSystem compute_invariants(const CoxeterDatum& datum, const ReflectionGroup& group,
                                   const Arrangement& arrangement);

/// Validates a given generator set (invariance, degrees, J = c Q with c != 0)
/// and derives the rest of the system. Throws JacobianDegenerate when the
/// Jacobian is not a nonzero multiple of Q.
InvariantSystem make_invariant_system(const CoxeterDatum& datum, const ReflectionGroup& group,
                                      const Arrangement& arrangement, std::vector<Polynomial> generators);

/// grad P_j = form_gram * (dP_j/dx); lies in D^1 and has degree d_j - 1.
std::vector<Derivation> gradient_basis(const InvariantSystem& system, const CoxeterDatum& datum);

/// Rational vector field numerator / denominator.
struct RationalField {
  Derivation numerator;
  Polynomial denominator;

  /// numerator(f), i.e. denominator * field(f).
  Polynomial cleared_apply(const Polynomial& f) const { return numerator.apply(f); }
  /// field(f); throws NotPolynomial if the quotient has poles.
  Polynomial apply(const Polynomial& f) const;
};

/// d/dP_i (zero based) as a rational field with denominator J.
RationalField partial_P_field(const InvariantSystem& system, std::size_t index);

/// Products P^a with sum a_i d_i == degree, in a fixed order.
std::vector<Polynomial> invariant_polynomial_basis(const InvariantSystem& system, unsigned degree);

/// Basis of the W-invariant derivations of the given degree: P^a grad P_j.
std::vector<Derivation> invariant_field_basis(const InvariantSystem& system, unsigned degree);

}  // namespace coxfree

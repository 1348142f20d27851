#pragma once

#include "coxfree/derivation.hpp"
#include "coxfree/invariants.hpp"
#include "coxfree/reflection_group.hpp"

namespace coxfree {

/// Flat connection: nabla_{d1} d2 = sum_i d1(f_i) d/dx_i, where d2 = sum f_i d/dx_i.
Derivation nabla(const Derivation& d1, const Derivation& d2);

/// Euler field sum x_i d/dx_i.
Derivation euler(std::size_t num_vars);

/// det[dP_1/dx .. dP_{l-1}/dx | df/dx], evaluated by expansion along the last
/// column. Equals J * D(f) for the primitive field D = d/dP_l.
Polynomial primitive_numerator(const Polynomial& f, const InvariantSystem& system);

/// D(f) = primitive_numerator(f) / J. Throws NotPolynomial.
Polynomial apply_primitive(const Polynomial& f, const InvariantSystem& system);

/// Coefficientwise D; the degree drops by h. Throws NotPolynomial when some
/// coefficient picks up a pole.
Derivation nabla_D(const Derivation& delta, const InvariantSystem& system);

enum class InverseMethod {
  /// Unknowns are coefficients on the R^W-basis P^a grad P_j of invariant
  /// fields of the target degree.
  InvariantBasis,
  /// Unknowns are coefficients on all monomial fields of the target degree,
  /// constrained by invariance under each simple reflection.
  MonomialAnsatz,
};

/// The unique W-invariant field of degree deg(delta) + h whose nabla_D is
/// delta. delta must be homogeneous. Throws NoSolution when delta is not
/// W-invariant or not in the image, NonUnique if the solution space is
/// positive dimensional.
Derivation nabla_D_inverse(const Derivation& delta, const InvariantSystem& system, const ReflectionGroup& group,
                           InverseMethod method = InverseMethod::InvariantBasis);

}  // namespace coxfree

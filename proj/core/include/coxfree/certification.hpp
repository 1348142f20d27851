#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxfree/derivation.hpp"
#include "coxfree/invariants.hpp"
#include "coxfree/reflection_group.hpp"

namespace coxfree {

enum class Verdict { FreeWithBasis, NotMember, DegreeMismatch, Dependent };

std::string to_string(Verdict v);

/// Outcome of checking l homogeneous fields against D(A^(m)): membership
/// (contact orders), the degree count, and the Saito determinant
/// det = c * prod alpha_H^m(H) with c != 0.
struct Certificate {
  std::vector<std::vector<Order>> contact_orders;  // [member][hyperplane]
  std::vector<int> member_degrees;
  long degree_sum = 0;
  unsigned multiplicity_total = 0;
  Polynomial determinant;
  std::optional<Scalar> scalar;  // c, when det = c * prod alpha^m

  bool membership_ok = false;
  bool degree_ok = false;
  bool determinant_ok = false;
  Verdict verdict = Verdict::Dependent;
  /// (member, hyperplane) of the first failed contact condition.
  std::optional<std::pair<std::size_t, std::size_t>> violation;

  bool free() const noexcept { return verdict == Verdict::FreeWithBasis; }
};

/// Largest k with alpha_H^k dividing delta(alpha_H).
Order contact_order(const Derivation& delta, const Arrangement& arrangement, std::size_t hyperplane);

/// Never throws on mathematical failure; failures become verdicts. Members
/// must be homogeneous and there must be exactly `rank` of them.
Certificate ziegler_certify(const std::vector<Derivation>& members, const Multiplicity& m,
                            const Arrangement& arrangement);

/// Basis of {delta homogeneous of degree d : alpha_H^m(H) | delta(alpha_H)},
/// from the kernel of the divisibility conditions written as linear
/// equations on the coefficients.
std::vector<Derivation> graded_kernel(const Multiplicity& m, unsigned degree, const Arrangement& arrangement);
std::size_t graded_dimension(const Multiplicity& m, unsigned degree, const Arrangement& arrangement);

/// Same, restricted to W-invariant fields by adding invariance equations for
/// the simple reflections.
std::vector<Derivation> invariant_graded_kernel(const Multiplicity& m, unsigned degree,
                                                const Arrangement& arrangement, const ReflectionGroup& group);

/// Hilbert function of a free module with generators in the given degrees:
/// sum_i #monomials of degree (d - deg_i).
std::size_t free_hilbert_prediction(const std::vector<int>& generator_degrees, std::size_t num_vars, int degree);

/// Coefficientwise application of d/dP_i; throws NotPolynomial on poles.
Derivation nabla_partial_P(const Derivation& delta, std::size_t index, const InvariantSystem& system);

struct HodgeRow {
  unsigned degree = 0;
  std::size_t image_dimension = 0;   // nabla_D^{-k} of invariant fields
  std::size_t kernel_dimension = 0;  // invariant fields of contact order >= 2k+1
};

struct HodgeReport {
  unsigned k = 0;
  std::vector<HodgeRow> rows;
  bool agree() const;
};

/// Compares, for each degree in [0, max_degree], the span of
/// nabla_D^{-k}(D^1(A)^W) with the invariant part of D^{2k+1}(A).
HodgeReport hodge_equality_check(unsigned k, unsigned max_degree, const InvariantSystem& system,
                                 const ReflectionGroup& group, const Arrangement& arrangement);

}  // namespace coxfree

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxfree/certification.hpp"
#include "coxfree/coxeter_system.hpp"
#include "coxfree/derivation.hpp"

namespace coxfree {

enum class BaseSource { Coordinate, Gradient, UserSupplied, OracleSearch };

std::string to_string(BaseSource s);

struct BasisRequest {
  Multiplicity multiplicity;  // base multiplicity, values in {0, 1}
  unsigned k = 0;
  BaseSource source = BaseSource::Coordinate;
  std::vector<Derivation> user_basis;
};

/// Picks the natural source for a multiplicity: coordinate fields for m = 0,
/// gradients for m = 1, oracle search otherwise.
BaseSource default_source(const Multiplicity& m);

struct BaseBasisOutcome {
  bool ok = false;
  std::vector<Derivation> basis;
  std::optional<Certificate> certificate;
  std::string failure;
};

/// The base basis of D(A^(m)), certified. Failure is an outcome, not an
/// exception: A^(m) need not be free.
BaseBasisOutcome base_basis(const BasisRequest& request, const CoxeterSystem& system);

/// Greedy minimal generators of D(A^(m)) by a degree sweep up to max_degree.
/// Returns nullopt when more than l generators appear.
std::optional<std::vector<Derivation>> oracle_generators(const Multiplicity& m, const Arrangement& arrangement,
                                                         unsigned max_degree);

/// k-fold nabla_D^{-1} of the Euler field.
Derivation universal_field(unsigned k, const InvariantSystem& system, const ReflectionGroup& group);

enum class BasisStatus { Certified, BaseNotABasis, CertificateFailed };

std::string to_string(BasisStatus s);

struct BasisResult {
  BasisStatus status = BasisStatus::BaseNotABasis;
  BaseBasisOutcome base;
  Multiplicity target;  // m + 2k
  Derivation universal;
  std::vector<Derivation> members;
  std::vector<int> degrees;
  long degree_sum = 0;
  std::optional<Certificate> certificate;

  bool certified() const noexcept { return status == BasisStatus::Certified; }
};

/// nabla_{delta_i} nabla_D^{-k} E for the base basis delta_i, certified
/// against m + 2k.
BasisResult build_basis(const BasisRequest& request, const CoxeterSystem& system);

}  // namespace coxfree

#include "coxfree/basis_builder.hpp"

#include <map>
#include <stdexcept>

#include "coxfree/connection.hpp"

namespace coxfree {

std::string to_string(BaseSource s) {
  switch (s) {
    case BaseSource::Coordinate: return "coordinate";
    case BaseSource::Gradient: return "gradient";
    case BaseSource::UserSupplied: return "user";
    case BaseSource::OracleSearch: return "oracle";
  }
  return "?";
}

std::string to_string(BasisStatus s) {
  switch (s) {
    case BasisStatus::Certified: return "Certified";
    case BasisStatus::BaseNotABasis: return "NotABasis";
    case BasisStatus::CertificateFailed: return "CertificateFailed";
  }
  return "?";
}

BaseSource default_source(const Multiplicity& m) {
  bool zeros = true;
  bool ones = true;
  for (unsigned v : m.values()) {
    zeros = zeros && v == 0;
    ones = ones && v == 1;
  }
  if (zeros) return BaseSource::Coordinate;
  if (ones) return BaseSource::Gradient;
  return BaseSource::OracleSearch;
}

namespace {

void check_base_multiplicity(const Multiplicity& m, const Arrangement& arrangement) {
  if (m.size() != arrangement.size()) throw std::invalid_argument("multiplicity does not match the arrangement");
  for (unsigned v : m.values()) {
    if (v > 1) throw std::invalid_argument("base multiplicity values must be 0 or 1");
  }
}

class DegreeSpace {
 public:
  DegreeSpace(std::size_t n, unsigned degree) : n_(n), monos_(monomials_of_degree(n, degree)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
  }

  SparseRow row(const Derivation& d) const {
    SparseRow out;
    for (std::size_t c = 0; c < n_; ++c)
      for (const auto& t : d[c].terms())
        out.emplace_back(static_cast<std::uint32_t>(c * monos_.size() + index_.at(t.monomial)), t.coefficient);
    return out;
  }

  std::size_t size() const noexcept { return n_ * monos_.size(); }

 private:
  std::size_t n_;
  std::vector<Monomial> monos_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace

std::optional<std::vector<Derivation>> oracle_generators(const Multiplicity& m, const Arrangement& arrangement,
                                                         unsigned max_degree) {
  const std::size_t n = arrangement.rank;
  std::vector<Derivation> gens;
  for (unsigned d = 0; d <= max_degree; ++d) {
    const DegreeSpace space(n, d);
    RowEchelon span(space.size());
    for (const auto& g : gens) {
      for (const auto& mono : monomials_of_degree(n, d - static_cast<unsigned>(g.degree()))) {
        span.add_equation(space.row(Polynomial::monomial(n, mono) * g));
      }
    }
    for (auto& candidate : graded_kernel(m, d, arrangement)) {
      const std::size_t before = span.rank();
      span.add_equation(space.row(candidate));
      if (span.rank() > before) gens.push_back(std::move(candidate));
    }
    if (gens.size() > n) return std::nullopt;
  }
  return gens;
}

BaseBasisOutcome base_basis(const BasisRequest& request, const CoxeterSystem& system) {
  const auto& arr = system.arrangement;
  const std::size_t n = system.rank();
  check_base_multiplicity(request.multiplicity, arr);

  BaseBasisOutcome out;
  switch (request.source) {
    case BaseSource::Coordinate:
      for (std::size_t i = 0; i < n; ++i) out.basis.push_back(Derivation::coordinate(n, i));
      break;
    case BaseSource::Gradient:
      out.basis = gradient_basis(system.invariants, system.datum);
      break;
    case BaseSource::UserSupplied:
      out.basis = request.user_basis;
      break;
    case BaseSource::OracleSearch: {
      auto gens = oracle_generators(request.multiplicity, arr, request.multiplicity.total() + 1);
      if (!gens) {
        out.failure = "more than " + std::to_string(n) + " generators up to degree " +
                      std::to_string(request.multiplicity.total() + 1);
        return out;
      }
      if (gens->size() != n) {
        out.failure = "found " + std::to_string(gens->size()) + " generators, need " + std::to_string(n);
        return out;
      }
      out.basis = std::move(*gens);
      break;
    }
  }

  if (out.basis.size() != n) {
    out.failure = "need " + std::to_string(n) + " fields, got " + std::to_string(out.basis.size());
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.basis[i].num_vars() != n || !out.basis[i].is_homogeneous() || out.basis[i].is_zero()) {
      out.failure = "field " + std::to_string(i) + " is zero, inhomogeneous or of the wrong rank";
      return out;
    }
  }
  out.certificate = ziegler_certify(out.basis, request.multiplicity, arr);
  out.ok = out.certificate->free();
  if (!out.ok) {
    out.failure = to_string(out.certificate->verdict);
    if (out.certificate->violation) {
      out.failure += " (member " + std::to_string(out.certificate->violation->first) + ", hyperplane " +
                     std::to_string(out.certificate->violation->second) + ")";
    }
  }
  return out;
}

Derivation universal_field(unsigned k, const InvariantSystem& system, const ReflectionGroup& group) {
  Derivation u = euler(system.num_vars());
  for (unsigned i = 0; i < k; ++i) u = nabla_D_inverse(u, system, group);
  return u;
}

BasisResult build_basis(const BasisRequest& request, const CoxeterSystem& system) {
  BasisResult result;
  result.base = base_basis(request, system);
  result.target = request.multiplicity.shifted(2 * request.k);
  if (!result.base.ok) {
    result.status = BasisStatus::BaseNotABasis;
    return result;
  }
  result.universal = universal_field(request.k, system.invariants, system.group);
  for (const auto& delta : result.base.basis) {
    result.members.push_back(nabla(delta, result.universal));
    result.degrees.push_back(result.members.back().degree());
    result.degree_sum += result.degrees.back();
  }
  result.certificate = ziegler_certify(result.members, result.target, system.arrangement);
  result.status = result.certificate->free() ? BasisStatus::Certified : BasisStatus::CertificateFailed;
  return result;
}

}  // namespace coxfree

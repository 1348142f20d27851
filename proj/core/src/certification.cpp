#include "coxfree/certification.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coxfree/connection.hpp"
#include "coxfree/errors.hpp"
#include "coxfree/poly_matrix.hpp"
#include "keyed_system.hpp"

namespace coxfree {

using detail::EquationKey;
using detail::KeyedSystem;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FreeWithBasis: return "Free-with-basis";
    case Verdict::NotMember: return "NotMember";
    case Verdict::DegreeMismatch: return "DegreeMismatch";
    case Verdict::Dependent: return "Dependent";
  }
  return "?";
}

Order contact_order(const Derivation& delta, const Arrangement& arrangement, std::size_t hyperplane) {
  const auto& alpha = arrangement.alpha(hyperplane);
  return linear_form_order(delta.apply(alpha), alpha);
}

Certificate ziegler_certify(const std::vector<Derivation>& members, const Multiplicity& m,
                            const Arrangement& arrangement) {
  const std::size_t n = arrangement.rank;
  if (members.size() != n) {
    throw std::invalid_argument("need exactly " + std::to_string(n) + " members, got " + std::to_string(members.size()));
  }
  if (m.size() != arrangement.size()) throw std::invalid_argument("multiplicity does not match the arrangement");

  Certificate cert;
  cert.multiplicity_total = m.total();
  cert.membership_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = members[i];
    if (d.num_vars() != n) throw std::invalid_argument("member lives in the wrong number of variables");
    if (!d.is_homogeneous()) throw std::invalid_argument("member " + std::to_string(i) + " is not homogeneous");
    const int deg = d.is_zero() ? 0 : d.degree();
    cert.member_degrees.push_back(deg);
    cert.degree_sum += deg;
    std::vector<Order> row;
    for (std::size_t h = 0; h < arrangement.size(); ++h) {
      row.push_back(contact_order(d, arrangement, h));
      if (!row.back().at_least(m[h]) && cert.membership_ok) {
        cert.membership_ok = false;
        cert.violation = std::make_pair(i, h);
      }
    }
    cert.contact_orders.push_back(std::move(row));
  }
  cert.degree_ok = cert.degree_sum == static_cast<long>(m.total());

  PolyMatrix coeffs(n, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) coeffs(r, c) = members[c][r];
  cert.determinant = determinant(coeffs);

  Polynomial target = Polynomial::constant(n, Scalar(1));
  for (std::size_t h = 0; h < arrangement.size(); ++h) {
    if (m[h] != 0) target *= arrangement.alpha(h).pow(m[h]);
  }
  if (!cert.determinant.is_zero()) {
    auto [quotient, remainder] = divide(cert.determinant, target);
    if (remainder.is_zero() && quotient.is_constant() && !quotient.is_zero()) {
      cert.scalar = quotient.leading_term().coefficient;
      cert.determinant_ok = true;
    }
  }

  if (!cert.membership_ok) {
    cert.verdict = Verdict::NotMember;
  } else if (!cert.degree_ok) {
    cert.verdict = Verdict::DegreeMismatch;
  } else if (!cert.determinant_ok) {
    cert.verdict = Verdict::Dependent;
  } else {
    cert.verdict = Verdict::FreeWithBasis;
  }
  return cert;
}

namespace {

// Unknown index = component * #monomials + monomial index.
std::vector<Derivation> kernel_fields(const KeyedSystem& ks, const std::vector<Monomial>& monos, std::size_t n) {
  const auto ech = ks.eliminate();
  std::vector<Derivation> out;
  for (const auto& v : ech.kernel()) {
    std::vector<Term> terms;
    std::vector<Polynomial> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Term> comp;
      for (std::size_t k = 0; k < monos.size(); ++k) {
        const auto& c = v[i * monos.size() + k];
        if (!c.is_zero()) comp.push_back(Term{monos[k], c});
      }
      coeffs.push_back(Polynomial::from_terms(n, std::move(comp)));
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

// Writes alpha_H^m | delta(alpha_H) as linear equations: in coordinates where
// alpha_H is the pivot variable y_p, every term with y_p-exponent below m must
// vanish.
void add_divisibility(KeyedSystem& ks, const Multiplicity& m, const std::vector<Monomial>& monos,
                      const Arrangement& arrangement) {
  const std::size_t n = arrangement.rank;
  for (std::size_t h = 0; h < arrangement.size(); ++h) {
    if (m[h] == 0) continue;
    const auto& form = arrangement.hyperplanes[h].form;
    std::size_t p = 0;
    while (form[p].is_zero()) ++p;
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != p) {
        images.push_back(Polynomial::variable(n, j));
        continue;
      }
      Polynomial xp = Polynomial::variable(n, p);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != p && !form[k].is_zero()) xp -= Polynomial::variable(n, k) * form[k];
      }
      images.push_back(xp / form[p]);
    }
    std::vector<Polynomial> moved;
    for (const auto& mono : monos) moved.push_back(Polynomial::monomial(n, mono).substitute(images));
    for (std::size_t i = 0; i < n; ++i) {
      if (form[i].is_zero()) continue;
      for (std::size_t k = 0; k < monos.size(); ++k) {
        for (const auto& t : moved[k].terms()) {
          if (t.monomial[p] >= m[h]) continue;
          ks.add(EquationKey{0, static_cast<std::uint32_t>(h), t.monomial}, i * monos.size() + k,
                 t.coefficient * form[i]);
        }
      }
    }
  }
}

}  // namespace

std::vector<Derivation> graded_kernel(const Multiplicity& m, unsigned degree, const Arrangement& arrangement) {
  const std::size_t n = arrangement.rank;
  if (m.size() != arrangement.size()) throw std::invalid_argument("multiplicity does not match the arrangement");
  const auto monos = monomials_of_degree(n, degree);
  KeyedSystem ks(n * monos.size());
  add_divisibility(ks, m, monos, arrangement);
  return kernel_fields(ks, monos, n);
}

std::size_t graded_dimension(const Multiplicity& m, unsigned degree, const Arrangement& arrangement) {
  return graded_kernel(m, degree, arrangement).size();
}

std::vector<Derivation> invariant_graded_kernel(const Multiplicity& m, unsigned degree,
                                                const Arrangement& arrangement, const ReflectionGroup& group) {
  const std::size_t n = arrangement.rank;
  const auto monos = monomials_of_degree(n, degree);
  KeyedSystem ks(n * monos.size());
  add_divisibility(ks, m, monos, arrangement);
  const auto& simple = group.simple_reflections();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < monos.size(); ++k) {
      std::vector<Polynomial> coeffs(n, Polynomial(n));
      coeffs[i] = Polynomial::monomial(n, monos[k]);
      const Derivation field(std::move(coeffs));
      for (std::size_t s = 0; s < simple.size(); ++s) {
        const Derivation moved = act(group, simple[s], field) - field;
        for (std::size_t c = 0; c < n; ++c) {
          ks.add_polynomial(static_cast<std::uint32_t>(1 + s), static_cast<std::uint32_t>(c), i * monos.size() + k,
                            moved[c]);
        }
      }
    }
  }
  return kernel_fields(ks, monos, n);
}

std::size_t free_hilbert_prediction(const std::vector<int>& generator_degrees, std::size_t num_vars, int degree) {
  std::size_t total = 0;
  for (int g : generator_degrees) total += count_monomials(num_vars, degree - g);
  return total;
}

Derivation nabla_partial_P(const Derivation& delta, std::size_t index, const InvariantSystem& system) {
  const RationalField field = partial_P_field(system, index);
  std::vector<Polynomial> out;
  for (const auto& f : delta.coefficients()) out.push_back(field.apply(f));
  return Derivation(std::move(out));
}

bool HodgeReport::agree() const {
  for (const auto& r : rows)
    if (r.image_dimension != r.kernel_dimension) return false;
  return true;
}

namespace {

std::size_t span_dimension(const std::vector<Derivation>& fields) {
  if (fields.empty()) return 0;
  std::map<std::pair<std::size_t, Monomial>, std::uint32_t> index;
  for (const auto& f : fields)
    for (std::size_t i = 0; i < f.num_vars(); ++i)
      for (const auto& t : f[i].terms()) index.try_emplace({i, t.monomial}, 0);
  std::uint32_t next = 0;
  for (auto& [key, idx] : index) idx = next++;
  RowEchelon ech(index.size());
  for (const auto& f : fields) {
    SparseRow row;
    for (std::size_t i = 0; i < f.num_vars(); ++i)
      for (const auto& t : f[i].terms()) row.emplace_back(index.at({i, t.monomial}), t.coefficient);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.add_equation(std::move(row));
  }
  return ech.rank();
}

}  // namespace

HodgeReport hodge_equality_check(unsigned k, unsigned max_degree, const InvariantSystem& system,
                                 const ReflectionGroup& group, const Arrangement& arrangement) {
  HodgeReport report;
  report.k = k;
  const unsigned shift = k * system.coxeter_number;
  const Multiplicity contact = Multiplicity::constant(arrangement, 2 * k + 1);
  for (unsigned d = 0; d <= max_degree; ++d) {
    HodgeRow row;
    row.degree = d;
    if (d >= shift) {
      std::vector<Derivation> images;
      for (auto field : invariant_field_basis(system, d - shift)) {
        for (unsigned j = 0; j < k; ++j) field = nabla_D_inverse(field, system, group);
        images.push_back(std::move(field));
      }
      row.image_dimension = span_dimension(images);
    }
    row.kernel_dimension = invariant_graded_kernel(contact, d, arrangement, group).size();
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace coxfree

#include "coxfree/property_suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "coxfree/basis_builder.hpp"
#include "coxfree/certification.hpp"
#include "coxfree/connection.hpp"
#include "coxfree/errors.hpp"

namespace coxfree {

void SuiteReport::record(bool pass, const std::string& what) {
  ++total;
  if (pass) {
    ++passed;
  } else {
    failures.push_back(what);
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"shift", "euler", "jacobian", "hodge", "relation", "oracle"};
  return names;
}

long SampleRng::between(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Derivation random_homogeneous_field(SampleRng& rng, std::size_t num_vars, unsigned degree, std::size_t max_terms) {
  const auto monos = monomials_of_degree(num_vars, degree);
  while (true) {
    std::vector<Polynomial> coeffs(num_vars, Polynomial(num_vars));
    const auto count = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_terms)));
    for (std::size_t t = 0; t < count; ++t) {
      const auto c = static_cast<std::size_t>(rng.between(0, static_cast<long>(num_vars) - 1));
      const auto& mono = monos[static_cast<std::size_t>(rng.between(0, static_cast<long>(monos.size()) - 1))];
      coeffs[c] += Polynomial::monomial(num_vars, mono, Scalar(rng.between(-4, 4)));
    }
    Derivation d(std::move(coeffs));
    if (!d.is_zero()) return d;
  }
}

Derivation random_invariant_field(SampleRng& rng, const InvariantSystem& system, unsigned max_degree) {
  while (true) {
    const auto degree = static_cast<unsigned>(rng.between(1, max_degree));
    const auto basis = invariant_field_basis(system, degree);
    if (basis.empty()) continue;
    Derivation d(system.num_vars());
    for (const auto& b : basis) d += Scalar(rng.between(-3, 3)) * b;
    if (!d.is_zero()) return d;
  }
}

namespace {

std::string describe(const std::string& what, const Derivation& d) {
  std::ostringstream os;
  os << what << ": " << d.to_string();
  return os.str();
}

void shift_suite(SuiteReport& r, const CoxeterSystem& sys, const SuiteOptions& opt) {
  SampleRng rng(opt.seed);
  const auto& inv = sys.invariants;
  const auto& arr = sys.arrangement;
  const unsigned h = inv.coxeter_number;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Derivation delta = random_invariant_field(rng, inv, h);
    // Every other sample starts inside the image of the inverse, with
    // contact orders already >= 3.
    if (s % 2 == 1) delta = nabla_D_inverse(delta, inv, sys.group);
    const Derivation lifted = nabla_D_inverse(delta, inv, sys.group);
    bool ok = nabla_D(lifted, inv) == delta;
    ok = ok && lifted.degree() == delta.degree() + static_cast<int>(h);
    for (std::size_t H = 0; H < arr.size() && ok; ++H) {
      const Order before = contact_order(delta, arr, H);
      const Order after = contact_order(lifted, arr, H);
      ok = !before.is_infinite() && !after.is_infinite() && after.value() == before.value() + 2;
    }
    r.record(ok, describe("sample " + std::to_string(s), delta));
  }
}

void euler_suite(SuiteReport& r, const CoxeterSystem& sys, const SuiteOptions& opt) {
  SampleRng rng(opt.seed);
  const std::size_t n = sys.rank();
  const Derivation e = euler(n);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const auto degree = static_cast<unsigned>(rng.between(0, 5));
    const Derivation delta = random_homogeneous_field(rng, n, degree);
    const bool ok = nabla(delta, e) == delta && nabla(e, delta) == Scalar(static_cast<long>(degree)) * delta;
    r.record(ok, describe("sample " + std::to_string(s), delta));
  }
}

void jacobian_suite(SuiteReport& r, const CoxeterSystem& sys, const SuiteOptions&) {
  const auto& inv = sys.invariants;
  const auto& arr = sys.arrangement;
  const std::size_t n = sys.rank();
  const Polynomial& q = arr.defining_polynomial;
  r.record(!inv.jacobian_scalar.is_zero() && inv.jacobian == q * inv.jacobian_scalar,
           "J = c Q with c = " + inv.jacobian_scalar.to_string());
  r.notes.push_back("c = " + inv.jacobian_scalar.to_string());
  bool all_invariant = true;
  for (const auto& p : inv.generators) all_invariant = all_invariant && is_invariant(sys.group, p);
  r.record(all_invariant, "basic invariants are W-invariant");
  r.record(n < 2 || inv.degrees[n - 2] < inv.coxeter_number, "d_{l-1} < h");
  r.record(2 * arr.size() == inv.coxeter_number * n, "|A| = h l / 2");
  unsigned exponent_sum = 0;
  for (unsigned e : inv.exponents) exponent_sum += e;
  r.record(exponent_sum == arr.size(), "sum of exponents = |A|");
  bool anti = true;
  for (std::size_t s : sys.group.simple_reflections()) anti = anti && act(sys.group, s, q) == -q;
  r.record(anti, "simple reflections send Q to -Q");
  r.record(sys.group.num_reflections() == arr.size(), "one reflection per hyperplane");
}

void hodge_suite(SuiteReport& r, const CoxeterSystem& sys, const SuiteOptions& opt) {
  const auto& inv = sys.invariants;
  unsigned window = opt.hodge_max_degree;
  if (window == 0) window = std::max(5u, inv.coxeter_number + inv.exponents.back());
  for (unsigned k = 0; k <= 1; ++k) {
    const auto report = hodge_equality_check(k, window, inv, sys.group, sys.arrangement);
    for (const auto& row : report.rows) {
      r.record(row.image_dimension == row.kernel_dimension,
               "k=" + std::to_string(k) + " degree " + std::to_string(row.degree) + ": image " +
                   std::to_string(row.image_dimension) + " vs kernel " + std::to_string(row.kernel_dimension));
    }
  }
}

bool in_contact(const Derivation& d, const Arrangement& arr, unsigned order) {
  for (std::size_t H = 0; H < arr.size(); ++H)
    if (!contact_order(d, arr, H).at_least(order)) return false;
  return true;
}

void relation_suite(SuiteReport& r, const CoxeterSystem& sys, const SuiteOptions& opt) {
  const auto& inv = sys.invariants;
  const auto& arr = sys.arrangement;
  const std::size_t n = sys.rank();
  const auto grads = gradient_basis(inv, sys.datum);

  struct Candidate {
    Derivation field;
    unsigned k;
    std::string label;
  };
  std::vector<Candidate> candidates;
  Derivation u = euler(n);
  for (unsigned k = 1; k <= 2; ++k) {
    u = nabla_D_inverse(u, inv, sys.group);
    candidates.push_back({u, k, "U" + std::to_string(k)});
    for (std::size_t j = 0; j < n; ++j)
      candidates.push_back({nabla(grads[j], u), k, "nabla_{grad P" + std::to_string(j + 1) + "} U" + std::to_string(k)});
  }
  SampleRng rng(opt.seed);
  const std::size_t base = candidates.size();
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const auto& a = candidates[static_cast<std::size_t>(rng.between(0, static_cast<long>(base) - 1))];
    const auto& b = candidates[static_cast<std::size_t>(rng.between(0, static_cast<long>(base) - 1))];
    const unsigned k = std::min(a.k, b.k);
    const auto g = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
    Derivation mix = Scalar(rng.between(1, 3)) * a.field + inv.generators[g] * b.field;
    candidates.push_back({std::move(mix), k, "mix " + std::to_string(s) + " (" + a.label + ", P" +
                                                  std::to_string(g + 1) + " " + b.label + ")"});
  }

  for (const auto& c : candidates) {
    const bool invariant = is_invariant(sys.group, c.field) && in_contact(c.field, arr, 2 * c.k + 1);
    r.record(invariant, c.label + " lies in D^" + std::to_string(2 * c.k + 1) + "(A)^W");
    for (std::size_t i = 0; i < n; ++i) {
      bool ok = false;
      try {
        const Derivation out = nabla_partial_P(c.field, i, inv);
        ok = is_invariant(sys.group, out) && in_contact(out, arr, 2 * c.k - 1);
      } catch (const NotPolynomial&) {
        ok = false;
      }
      r.record(ok, "nabla_{d/dP" + std::to_string(i + 1) + "} " + c.label + " in D^" + std::to_string(2 * c.k - 1) +
                       "(A)^W");
    }
  }
  r.record(nabla_partial_P(candidates.front().field, n - 1, inv) == euler(n), "nabla_{d/dP_l} U1 = E");
}

void check_hilbert(SuiteReport& r, const BasisResult& res, const Arrangement& arr, const std::string& label) {
  if (!res.certified()) {
    r.record(false, label + ": not certified");
    return;
  }
  const int top = *std::max_element(res.degrees.begin(), res.degrees.end()) + 2;
  for (int d = 0; d <= top; ++d) {
    const std::size_t oracle = graded_dimension(res.target, static_cast<unsigned>(d), arr);
    const std::size_t predicted = free_hilbert_prediction(res.degrees, arr.rank, d);
    r.record(oracle == predicted, label + " degree " + std::to_string(d) + ": oracle " + std::to_string(oracle) +
                                      " vs free prediction " + std::to_string(predicted));
  }
}

void oracle_suite(SuiteReport& r, const CoxeterSystem& sys, const SuiteOptions&) {
  const auto& arr = sys.arrangement;
  for (unsigned base = 0; base <= 1; ++base) {
    for (unsigned k = 1; k <= 2; ++k) {
      BasisRequest req;
      req.multiplicity = Multiplicity::constant(arr, base);
      req.k = k;
      req.source = default_source(req.multiplicity);
      check_hilbert(r, build_basis(req, sys), arr, "m=" + std::to_string(base) + " k=" + std::to_string(k));
    }
  }
  if (arr.orbits.size() > 1) {
    for (std::size_t o = 0; o < arr.orbits.size(); ++o) {
      std::vector<unsigned> values(arr.orbits.size(), 0);
      values[o] = 1;
      BasisRequest req;
      req.multiplicity = Multiplicity::per_orbit(arr, values);
      req.k = 1;
      req.source = BaseSource::OracleSearch;
      check_hilbert(r, build_basis(req, sys), arr, "orbit " + std::to_string(o) + " m=1 k=1");
    }
  }
}

}  // namespace

SuiteReport run_suite(const std::string& name, const CoxeterSystem& system, const SuiteOptions& options) {
  SuiteReport r;
  r.name = name;
  r.group = system.datum.label;
  if (name == "shift") {
    shift_suite(r, system, options);
  } else if (name == "euler") {
    euler_suite(r, system, options);
  } else if (name == "jacobian") {
    jacobian_suite(r, system, options);
  } else if (name == "hodge") {
    hodge_suite(r, system, options);
  } else if (name == "relation") {
    relation_suite(r, system, options);
  } else if (name == "oracle") {
    oracle_suite(r, system, options);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace coxfree

#include "coxfree/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace coxfree {

using nlohmann::json;

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("exact scalars must be JSON strings, got " + j.dump());
  return Scalar::parse(j.get<std::string>());
}

json polynomial_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (std::size_t i = 0; i < p.num_vars(); ++i) exps.push_back(t.monomial[i]);
    out.push_back(json{{"exp", std::move(exps)}, {"coeff", scalar_to_json(t.coefficient)}});
  }
  return out;
}

Polynomial polynomial_from_json(const json& j, std::size_t num_vars) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    const auto& exps = t.at("exp");
    if (!exps.is_array() || exps.size() != num_vars) {
      throw std::invalid_argument("term exponent vector must have " + std::to_string(num_vars) + " entries");
    }
    Monomial m;
    for (std::size_t i = 0; i < num_vars; ++i) {
      const long e = exps[i].get<long>();
      if (e < 0) throw std::invalid_argument("negative exponent");
      m.set(i, static_cast<unsigned>(e));
    }
    terms.push_back(Term{m, scalar_from_json(t.at("coeff"))});
  }
  return Polynomial::from_terms(num_vars, std::move(terms));
}

json derivation_to_json(const Derivation& d) {
  json out = json::array();
  for (const auto& c : d.coefficients()) out.push_back(polynomial_to_json(c));
  return out;
}

Derivation derivation_from_json(const json& j, std::size_t num_vars) {
  if (!j.is_array() || j.size() != num_vars) {
    throw std::invalid_argument("derivation must list " + std::to_string(num_vars) + " coefficient polynomials");
  }
  std::vector<Polynomial> coeffs;
  for (const auto& c : j) coeffs.push_back(polynomial_from_json(c, num_vars));
  return Derivation(std::move(coeffs));
}

json matrix_to_json(const ScalarMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json describe_group(const CoxeterDatum& datum, const ReflectionGroup& group, const Arrangement& arrangement) {
  json roots = json::array();
  for (const auto& r : datum.simple_roots) {
    json v = json::array();
    for (const auto& c : r) v.push_back(scalar_to_json(c));
    roots.push_back(std::move(v));
  }
  json forms = json::array();
  for (const auto& h : arrangement.hyperplanes) {
    json v = json::array();
    for (const auto& c : h.form) v.push_back(scalar_to_json(c));
    forms.push_back(std::move(v));
  }
  return json{{"type", datum.label},
              {"rank", datum.rank},
              {"field", datum.field_name()},
              {"gram", matrix_to_json(datum.gram)},
              {"form_gram", matrix_to_json(datum.form_gram)},
              {"simple_roots", std::move(roots)},
              {"order", group.order()},
              {"hyperplanes", std::move(forms)},
              {"orbits", arrangement.orbits}};
}

std::string fingerprint(const InvariantSystem& system) {
  json gens = json::array();
  for (const auto& g : system.generators) gens.push_back(polynomial_to_json(g));
  const std::string text = gens.dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace coxfree

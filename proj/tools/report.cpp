#include "report.hpp"

#include <stdexcept>

#include "coxfree/json_io.hpp"

namespace coxfree::cli {

using nlohmann::json;

json order_to_json(const Order& o) {
  if (o.is_infinite()) return "inf";
  return o.value();
}

json certificate_to_json(const Certificate& c) {
  json orders = json::array();
  for (const auto& row : c.contact_orders) {
    json r = json::array();
    for (const auto& o : row) r.push_back(order_to_json(o));
    orders.push_back(std::move(r));
  }
  json violation = nullptr;
  if (c.violation) violation = json{{"member", c.violation->first}, {"hyperplane", c.violation->second}};
  return json{{"verdict", to_string(c.verdict)},
              {"membership_ok", c.membership_ok},
              {"degree_ok", c.degree_ok},
              {"determinant_ok", c.determinant_ok},
              {"contact_orders", std::move(orders)},
              {"member_degrees", c.member_degrees},
              {"degree_sum", c.degree_sum},
              {"multiplicity_total", c.multiplicity_total},
              {"determinant", polynomial_to_json(c.determinant)},
              {"scalar", c.scalar ? scalar_to_json(*c.scalar) : json(nullptr)},
              {"violation", std::move(violation)}};
}

json invariants_to_json(const InvariantSystem& system) {
  json gens = json::array();
  for (const auto& g : system.generators) gens.push_back(polynomial_to_json(g));
  return json{{"generators", std::move(gens)},
              {"degrees", system.degrees},
              {"exponents", system.exponents},
              {"coxeter_number", system.coxeter_number},
              {"jacobian_scalar", scalar_to_json(system.jacobian_scalar)},
              {"fingerprint", fingerprint(system)}};
}

namespace {

json fields_to_json(const std::vector<Derivation>& fields) {
  json out = json::array();
  for (const auto& f : fields) out.push_back(json{{"field", derivation_to_json(f)}, {"degree", f.degree()}});
  return out;
}

}  // namespace

json basis_report(const CoxeterSystem& system, const BasisRequest& request, const BasisResult& result) {
  const auto& arr = system.arrangement;
  json inputs{{"type", system.datum.label},
              {"rank", system.datum.rank},
              {"field", system.datum.field_name()},
              {"k", request.k},
              {"base_multiplicity", request.multiplicity.values()},
              {"target_multiplicity", result.target.values()},
              {"base_source", to_string(request.source)}};
  json base{{"ok", result.base.ok},
            {"fields", fields_to_json(result.base.basis)},
            {"failure", result.base.failure},
            {"certificate", result.base.certificate ? certificate_to_json(*result.base.certificate) : json(nullptr)}};
  const long expected = 2L * request.k * static_cast<long>(arr.size()) + request.multiplicity.total();
  json report{{"command", "basis"},
              {"inputs", std::move(inputs)},
              {"group", describe_group(system.datum, system.group, arr)},
              {"invariants", invariants_to_json(system.invariants)},
              {"status", to_string(result.status)},
              {"base_basis", std::move(base)},
              {"expected_degree_sum", expected}};
  if (result.base.ok) {
    report["universal_field"] = json{{"field", derivation_to_json(result.universal)},
                                     {"degree", result.universal.degree()}};
    report["members"] = fields_to_json(result.members);
    report["degrees"] = result.degrees;
    report["degree_sum"] = result.degree_sum;
    report["certificate"] = certificate_to_json(*result.certificate);
  }
  return report;
}

json suite_to_json(const SuiteReport& report) {
  return json{{"suite", report.name},     {"group", report.group},       {"passed", report.passed},
              {"total", report.total},    {"ok", report.ok()},           {"failures", report.failures},
              {"notes", report.notes}};
}

std::vector<Derivation> fields_from_json(const json& j, std::size_t num_vars) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("members")) throw std::invalid_argument("expected a report with a \"members\" entry");
    list = &j.at("members");
  }
  if (!list->is_array()) throw std::invalid_argument("expected an array of fields");
  std::vector<Derivation> out;
  for (const auto& item : *list) {
    const json& field = item.is_object() ? item.at("field") : item;
    out.push_back(derivation_from_json(field, num_vars));
  }
  return out;
}

}  // namespace coxfree::cli

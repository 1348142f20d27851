#pragma once

#include <nlohmann/json.hpp>

#include "coxfree/basis_builder.hpp"
#include "coxfree/property_suites.hpp"

namespace coxfree::cli {

nlohmann::json order_to_json(const Order& o);
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json invariants_to_json(const InvariantSystem& system);
nlohmann::json basis_report(const CoxeterSystem& system, const BasisRequest& request, const BasisResult& result);
nlohmann::json suite_to_json(const SuiteReport& report);

/// Fields from a report ({"members": [{"field": ..}, ..]}) or from a bare
/// array of derivations.
std::vector<Derivation> fields_from_json(const nlohmann::json& j, std::size_t num_vars);

}  // namespace coxfree::cli

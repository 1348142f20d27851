#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "coxfree/coxeter_datum.hpp"
#include "coxfree/derivation.hpp"
#include "coxfree/invariants.hpp"
#include "coxfree/reflection_group.hpp"

namespace coxfree {

// Exact values are always written as strings ("-4/3", "1/2+3/4*sqrt(5)").

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

/// [{"exp": [..], "coeff": ".."}, ...] in decreasing graded lex order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t num_vars);

/// One polynomial per coordinate field.
nlohmann::json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j, std::size_t num_vars);

nlohmann::json matrix_to_json(const ScalarMatrix& m);

/// Type, rank, field, Gram matrices, simple roots, hyperplane forms, orbits.
nlohmann::json describe_group(const CoxeterDatum& datum, const ReflectionGroup& group,
                              const Arrangement& arrangement);

/// Stable 64-bit FNV-1a digest of the serialized generators, as hex.
std::string fingerprint(const InvariantSystem& system);

}  // namespace coxfree

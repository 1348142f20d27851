#pragma once

#include <string_view>

#include "coxfree/coxeter_datum.hpp"
#include "coxfree/invariant_cache.hpp"
#include "coxfree/invariants.hpp"
#include "coxfree/reflection_group.hpp"

namespace coxfree {

/// Everything the constructions need about one Coxeter group, built once and
/// then only read.
struct CoxeterSystem {
  CoxeterDatum datum;
  ReflectionGroup group;
  Arrangement arrangement;
  InvariantSystem invariants;

  std::size_t rank() const noexcept { return datum.rank; }
  unsigned coxeter_number() const noexcept { return invariants.coxeter_number; }
};

/// Builds the group and the invariants. With a cache, generators are read
/// from it when present (and re-validated) and written after computing.
CoxeterSystem make_coxeter_system(const CoxeterDatum& datum, const InvariantCache* cache = nullptr,
                                  std::size_t order_bound = kDefaultOrderBound);
CoxeterSystem make_coxeter_system(std::string_view label, const InvariantCache* cache = nullptr,
                                  std::size_t order_bound = kDefaultOrderBound);

}  // namespace coxfree

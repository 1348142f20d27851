#include "coxfree/coxeter_system.hpp"

#include <stdexcept>

namespace coxfree {

CoxeterSystem make_coxeter_system(const CoxeterDatum& datum, const InvariantCache* cache, std::size_t order_bound) {
  CoxeterSystem sys;
  sys.datum = datum;
  auto built = build_group(datum, order_bound);
  sys.group = std::move(built.group);
  sys.arrangement = std::move(built.arrangement);
  if (cache != nullptr) {
    if (auto gens = cache->load(datum)) {
      try {
        sys.invariants = make_invariant_system(datum, sys.group, sys.arrangement, std::move(*gens));
        return sys;
      } catch (const std::exception&) {
        // stale or corrupted entry: recompute and overwrite
      }
    }
  }
  sys.invariants = compute_invariants(datum, sys.group, sys.arrangement);
  if (cache != nullptr) cache->store(datum, sys.invariants.generators);
  return sys;
}

CoxeterSystem make_coxeter_system(std::string_view label, const InvariantCache* cache, std::size_t order_bound) {
  return make_coxeter_system(make_datum(label), cache, order_bound);
}

}  // namespace coxfree

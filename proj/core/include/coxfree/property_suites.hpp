#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coxfree/coxeter_system.hpp"

namespace coxfree {

struct SuiteOptions {
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  unsigned hodge_max_degree = 0;  // 0: max(5, h + largest exponent)
};

struct SuiteReport {
  std::string name;
  std::string group;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const noexcept { return passed == total && failures.empty(); }
  void record(bool pass, const std::string& what);
};

/// "shift", "euler", "jacobian", "hodge", "relation", "oracle".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const CoxeterSystem& system, const SuiteOptions& options);

/// Deterministic draws from the raw generator output, so samples do not
/// depend on the standard library's distribution implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long between(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

Derivation random_homogeneous_field(SampleRng& rng, std::size_t num_vars, unsigned degree, std::size_t max_terms = 4);
/// Nonzero integer combination of the invariant field basis in a random
/// degree in [1, max_degree] where that basis is nonempty.
Derivation random_invariant_field(SampleRng& rng, const InvariantSystem& system, unsigned max_degree);

}  // namespace coxfree

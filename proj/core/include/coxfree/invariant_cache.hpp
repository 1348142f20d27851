#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "coxfree/coxeter_datum.hpp"
#include "coxfree/polynomial.hpp"

namespace coxfree {

/// On-disk store of basic invariants keyed by (type, rank, field). Files are
/// JSON with exact coefficient strings and are replaced by write-then-rename,
/// so a concurrent reader sees either the old or the new document.
class InvariantCache {
 public:
  explicit InvariantCache(std::filesystem::path directory);

  /// Honors COXFREE_CACHE_DIR, else `fallback`.
  static InvariantCache from_environment(const std::filesystem::path& fallback);

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path file_for(const CoxeterDatum& datum) const;

  /// Nothing when the entry is missing or unreadable.
  std::optional<std::vector<Polynomial>> load(const CoxeterDatum& datum) const;
  void store(const CoxeterDatum& datum, const std::vector<Polynomial>& generators) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace coxfree

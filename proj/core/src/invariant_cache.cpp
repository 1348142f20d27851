#include "coxfree/invariant_cache.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "coxfree/json_io.hpp"

namespace coxfree {

using nlohmann::json;

InvariantCache::InvariantCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

InvariantCache InvariantCache::from_environment(const std::filesystem::path& fallback) {
  if (const char* env = std::getenv("COXFREE_CACHE_DIR"); env != nullptr && *env != '\0') {
    return InvariantCache(env);
  }
  return InvariantCache(fallback);
}

std::filesystem::path InvariantCache::file_for(const CoxeterDatum& datum) const {
  std::string name;
  for (char c : datum.label) {
    if (std::isalnum(static_cast<unsigned char>(c))) name += c;
  }
  name += datum.radicand == 1 ? "_Q" : "_Qsqrt" + std::to_string(datum.radicand);
  return dir_ / (name + ".json");
}

std::optional<std::vector<Polynomial>> InvariantCache::load(const CoxeterDatum& datum) const {
  const auto path = file_for(datum);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    if (doc.at("type").get<std::string>() != datum.label || doc.at("rank").get<unsigned>() != datum.rank ||
        doc.at("field").get<std::string>() != datum.field_name()) {
      return std::nullopt;
    }
    std::vector<Polynomial> gens;
    for (const auto& g : doc.at("generators")) gens.push_back(polynomial_from_json(g, datum.rank));
    return gens;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void InvariantCache::store(const CoxeterDatum& datum, const std::vector<Polynomial>& generators) const {
  std::filesystem::create_directories(dir_);
  json gens = json::array();
  for (const auto& g : generators) gens.push_back(polynomial_to_json(g));
  const json doc{{"type", datum.label}, {"rank", datum.rank}, {"field", datum.field_name()}, {"generators", gens}};

  static std::atomic<unsigned> counter{0};
  const auto final_path = file_for(datum);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
    if (!out.flush()) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace coxfree

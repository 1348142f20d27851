#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace coxfree::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kNotABasis = 2,
  kCertificateFailed = 3,
  kUnsupported = 4,
};

struct RunConfig {
  std::string type;
  unsigned rank = 0;
  int m = -1;  // constant multiplicity; -1 when not given
  std::vector<unsigned> orbit_m;
  std::string mfile;
  unsigned k = 1;
  std::string base;
  bool oracle = false;
  std::string members;
  std::string format = "text";
  std::string out;
  std::string cache_dir;
  std::size_t order_bound = 0;
  double time_budget = 0;  // seconds, 0 for none
  std::string suite = "all";
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  unsigned hodge_max_degree = 0;
};

/// "B2" from ("B2", 0) or ("B", 2).
std::string group_label(const RunConfig& config);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_info(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_basis(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace coxfree::cli

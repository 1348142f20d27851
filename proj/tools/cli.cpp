#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "coxfree/basis_builder.hpp"
#include "coxfree/coxeter_system.hpp"
#include "coxfree/errors.hpp"
#include "coxfree/invariant_cache.hpp"
#include "coxfree/json_io.hpp"
#include "coxfree/property_suites.hpp"
#include "report.hpp"

namespace coxfree::cli {

using nlohmann::json;

namespace {

class Deadline {
 public:
  explicit Deadline(double seconds) : budget_(seconds), start_(std::chrono::steady_clock::now()) {}
  void check(const std::string& phase) const {
    if (budget_ <= 0) return;
    const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start_;
    if (used.count() > budget_) {
      throw BudgetExceeded("time budget of " + std::to_string(budget_) + " s exceeded after " + phase);
    }
  }

 private:
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

std::optional<InvariantCache> open_cache(const RunConfig& config) {
  if (!config.cache_dir.empty()) return InvariantCache(config.cache_dir);
  if (const char* env = std::getenv("COXFREE_CACHE_DIR"); env != nullptr && *env != '\0') {
    return InvariantCache(env);
  }
  return std::nullopt;
}

CoxeterSystem load_system(const RunConfig& config) {
  const auto cache = open_cache(config);
  const std::size_t bound = config.order_bound ? config.order_bound : kDefaultOrderBound;
  return make_coxeter_system(group_label(config), cache ? &*cache : nullptr, bound);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return json::parse(in);
}

std::vector<unsigned> expand_orbit_entry(const json& entry, std::size_t orbit_size) {
  if (entry.is_number_unsigned()) return std::vector<unsigned>(orbit_size, entry.get<unsigned>());
  if (entry.is_array()) {
    auto values = entry.get<std::vector<unsigned>>();
    if (values.size() != orbit_size) throw std::invalid_argument("orbit entry has the wrong number of values");
    return values;
  }
  throw std::invalid_argument("orbit entries must be nonnegative integers or arrays of them");
}

Multiplicity multiplicity_from(const RunConfig& config, const Arrangement& arr) {
  const int given = (config.m >= 0) + !config.orbit_m.empty() + !config.mfile.empty();
  if (given > 1) throw std::invalid_argument("give at most one of --m, --orbit-m, --mfile");
  if (!config.orbit_m.empty()) {
    if (config.orbit_m.size() != arr.orbits.size()) {
      throw std::invalid_argument("--orbit-m needs " + std::to_string(arr.orbits.size()) + " values");
    }
    return Multiplicity::per_orbit(arr, config.orbit_m);
  }
  if (!config.mfile.empty()) {
    const json j = read_json_file(config.mfile);
    if (!j.is_object() || !j.contains("orbits") || !j.at("orbits").is_array()) {
      throw std::invalid_argument("multiplicity file needs an \"orbits\" array");
    }
    const auto& entries = j.at("orbits");
    if (entries.size() != arr.orbits.size()) {
      throw std::invalid_argument("multiplicity file needs " + std::to_string(arr.orbits.size()) + " orbit entries");
    }
    std::vector<std::vector<unsigned>> values;
    for (std::size_t o = 0; o < arr.orbits.size(); ++o) values.push_back(expand_orbit_entry(entries[o], arr.orbits[o].size()));
    return Multiplicity::per_hyperplane(arr, values);
  }
  return Multiplicity::constant(arr, config.m >= 0 ? static_cast<unsigned>(config.m) : 0u);
}

std::string join(const std::vector<unsigned>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void emit(const RunConfig& config, const json& report, const std::string& text, std::ostream& out) {
  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) throw std::runtime_error("cannot write " + config.out);
    file << report.dump(2) << "\n";
  }
  if (config.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << text;
  }
}

void print_certificate(std::ostream& os, const Certificate& c) {
  os << "verdict " << to_string(c.verdict) << "\n";
  os << "  membership " << (c.membership_ok ? "ok" : "FAILED");
  if (c.violation) os << " (member " << c.violation->first + 1 << ", hyperplane " << c.violation->second << ")";
  os << "\n  degree sum " << c.degree_sum << " vs |m| " << c.multiplicity_total << (c.degree_ok ? " ok" : " MISMATCH")
     << "\n  determinant ";
  if (c.scalar) {
    os << "= c * prod alpha^m, c = " << c.scalar->to_string() << "\n";
  } else {
    os << "not a nonzero multiple of prod alpha^m\n";
  }
}

}  // namespace

std::string group_label(const RunConfig& config) {
  if (config.type.empty()) throw std::invalid_argument("missing group type");
  const bool has_rank = config.type.find_first_of("0123456789") != std::string::npos;
  if (has_rank) {
    if (config.rank != 0) throw std::invalid_argument("rank given twice");
    return config.type;
  }
  if (config.rank == 0) throw std::invalid_argument("missing rank for type " + config.type);
  return config.type + std::to_string(config.rank);
}

int cmd_info(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto sys = load_system(config);
  const auto& arr = sys.arrangement;
  const auto& inv = sys.invariants;
  const std::size_t n = sys.rank();

  unsigned exponent_sum = 0;
  for (unsigned e : inv.exponents) exponent_sum += e;
  const bool order_ok = sys.group.order() == sys.datum.classical_order;
  const bool count_ok = 2 * arr.size() == inv.coxeter_number * n;
  const bool exponents_ok = exponent_sum == arr.size();
  const bool gap_ok = n < 2 || inv.degrees[n - 2] < inv.coxeter_number;
  const bool all_ok = order_ok && count_ok && exponents_ok && gap_ok;

  std::vector<unsigned> orbit_sizes;
  for (const auto& o : arr.orbits) orbit_sizes.push_back(static_cast<unsigned>(o.size()));

  json report{{"command", "info"},
              {"group", describe_group(sys.datum, sys.group, arr)},
              {"invariants", invariants_to_json(inv)},
              {"num_hyperplanes", arr.size()},
              {"orbit_sizes", orbit_sizes},
              {"checks",
               {{"order_matches_classical", order_ok},
                {"hyperplanes_eq_h_rank_half", count_ok},
                {"exponent_sum_eq_hyperplanes", exponents_ok},
                {"second_degree_below_h", gap_ok},
                {"jacobian_is_cQ", true}}}};

  std::ostringstream text;
  text << sys.datum.label << " over " << sys.datum.field_name() << "\n"
       << "|W| = " << sys.group.order() << "\n"
       << "|A| = " << arr.size() << "\n"
       << "h = " << inv.coxeter_number << "\n"
       << "degrees " << join(inv.degrees) << "\n"
       << "exponents " << join(inv.exponents) << "\n"
       << "orbits: " << join(orbit_sizes, "x") << "\n";
  for (std::size_t j = 0; j < inv.generators.size(); ++j) {
    text << "P" << j + 1 << " = " << inv.generators[j].to_string() << "\n";
  }
  text << "J = " << inv.jacobian_scalar.to_string() << " * Q\n";
  text << "checks " << (all_ok ? "ok" : "FAILED") << "\n";
  emit(config, report, text.str(), out);
  return all_ok ? kOk : kCertificateFailed;
}

int cmd_basis(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Deadline deadline(config.time_budget);
  const auto sys = load_system(config);
  deadline.check("building the group");

  BasisRequest req;
  req.multiplicity = multiplicity_from(config, sys.arrangement);
  req.k = config.k;
  if (!config.base.empty()) {
    if (config.oracle) throw std::invalid_argument("--base and --oracle are exclusive");
    req.source = BaseSource::UserSupplied;
    req.user_basis = fields_from_json(read_json_file(config.base), sys.rank());
  } else if (config.oracle) {
    req.source = BaseSource::OracleSearch;
  } else {
    req.source = default_source(req.multiplicity);
  }

  const BasisResult result = build_basis(req, sys);
  deadline.check("building the basis");
  const json report = basis_report(sys, req, result);

  std::ostringstream text;
  text << sys.datum.label << "  m = [" << join(req.multiplicity.values()) << "]  k = " << req.k << "\n";
  text << "base basis (" << to_string(req.source) << "): " << (result.base.ok ? "ok" : "FAILED " + result.base.failure)
       << "\n";
  if (result.base.ok) {
    text << "universal field, degree " << result.universal.degree() << ": " << result.universal.to_string() << "\n";
    for (std::size_t i = 0; i < result.members.size(); ++i) {
      text << "member " << i + 1 << ", degree " << result.degrees[i] << ": " << result.members[i].to_string() << "\n";
    }
    text << "degree sum " << result.degree_sum << ", expected " << report.at("expected_degree_sum").get<long>()
         << "\n";
    print_certificate(text, *result.certificate);
  } else if (result.base.certificate) {
    print_certificate(text, *result.base.certificate);
  }
  emit(config, report, text.str(), out);

  switch (result.status) {
    case BasisStatus::Certified: return kOk;
    case BasisStatus::BaseNotABasis: return kNotABasis;
    case BasisStatus::CertificateFailed: return kCertificateFailed;
  }
  return kError;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Deadline deadline(config.time_budget);
  const auto sys = load_system(config);
  SuiteOptions opt;
  opt.samples = config.samples;
  opt.seed = config.seed;
  opt.hodge_max_degree = config.hodge_max_degree;

  std::vector<std::string> names;
  if (config.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(config.suite);
  }
  json suites = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, sys, opt);
    deadline.check("suite " + name);
    ok = ok && r.ok();
    suites.push_back(suite_to_json(r));
    text << sys.datum.label << " " << name << ": " << r.passed << "/" << r.total << (r.ok() ? " pass" : " FAIL") << "\n";
    for (const auto& note : r.notes) text << "  " << note << "\n";
    for (const auto& f : r.failures) text << "  failed: " << f << "\n";
  }
  const json report{{"command", "verify"},
                    {"type", sys.datum.label},
                    {"seed", config.seed},
                    {"samples", config.samples},
                    {"fingerprint", fingerprint(sys.invariants)},
                    {"suites", std::move(suites)},
                    {"ok", ok}};
  emit(config, report, text.str(), out);
  return ok ? kOk : kCertificateFailed;
}

int cmd_certify(const RunConfig& config, std::ostream& out, std::ostream&) {
  const auto sys = load_system(config);
  if (config.members.empty()) throw std::invalid_argument("--members is required");
  const auto members = fields_from_json(read_json_file(config.members), sys.rank());
  const Multiplicity m = multiplicity_from(config, sys.arrangement);
  const Certificate cert = ziegler_certify(members, m, sys.arrangement);
  const json report{{"command", "certify"},
                    {"type", sys.datum.label},
                    {"multiplicity", m.values()},
                    {"fingerprint", fingerprint(sys.invariants)},
                    {"certificate", certificate_to_json(cert)}};
  std::ostringstream text;
  text << sys.datum.label << "  m = [" << join(m.values()) << "]\n";
  print_certificate(text, cert);
  emit(config, report, text.str(), out);
  return cert.free() ? kOk : kNotABasis;
}

namespace {

void add_group_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--type,type", c.type, "group type, e.g. B2, H3, I2(5), or a family letter with a rank")->required();
  cmd->add_option("--rank,rank", c.rank, "rank when --type is a family letter");
  cmd->add_option("--cache-dir", c.cache_dir, "directory for cached invariants (else $COXFREE_CACHE_DIR)");
  cmd->add_option("--order-bound", c.order_bound, "largest group order to enumerate")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "also write the JSON report here");
  cmd->add_option("--time-budget", c.time_budget, "seconds; exceeding it exits with status 4")
      ->check(CLI::PositiveNumber);
}

void add_multiplicity_options(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--m", c.m, "constant multiplicity")->check(CLI::NonNegativeNumber);
  cmd->add_option("--orbit-m", c.orbit_m, "one multiplicity per orbit")->delimiter(',');
  cmd->add_option("--mfile", c.mfile, "JSON file {\"orbits\": [value or [values], ...]}");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free bases for Coxeter multiarrangements"};
  app.require_subcommand(1);
  RunConfig c;

  auto* info = app.add_subcommand("info", "group structure and basic invariants");
  add_group_options(info, c);

  auto* basis = app.add_subcommand("basis", "build and certify the basis of D(A^(m+2k))");
  add_group_options(basis, c);
  add_multiplicity_options(basis, c);
  basis->add_option("--k", c.k, "shift");
  basis->add_option("--base", c.base, "base basis: report or JSON array of fields");
  basis->add_flag("--oracle", c.oracle, "find the base basis by a graded search");

  auto* verify = app.add_subcommand("verify", "run property suites");
  add_group_options(verify, c);
  verify->add_option("--suite", c.suite, "suite name or 'all'");
  verify->add_option("--samples", c.samples, "samples per sampled suite")->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_option("--hodge-max-degree", c.hodge_max_degree, "last degree of the Hodge window");

  auto* certify = app.add_subcommand("certify", "certify a list of fields against a multiplicity");
  add_group_options(certify, c);
  add_multiplicity_options(certify, c);
  certify->add_option("--members", c.members, "report or JSON array of fields")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*info) return cmd_info(c, out, err);
    if (*basis) {
      for (unsigned v : c.orbit_m)
        if (v > 1) throw std::invalid_argument("base multiplicity values must be 0 or 1");
      if (c.m > 1) throw std::invalid_argument("base multiplicity values must be 0 or 1");
      return cmd_basis(c, out, err);
    }
    if (*verify) return cmd_verify(c, out, err);
    if (*certify) return cmd_certify(c, out, err);
  } catch (const UnsupportedType& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"coxfree"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coxfree::cli

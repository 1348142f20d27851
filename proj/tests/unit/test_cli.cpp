#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using coxfree::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("coxfree_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }
  fs::path dir_;
};

}  // namespace

TEST(CliInfo, A2) {
  const auto r = call({"info", "A", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("|W| = 6"), std::string::npos);
  EXPECT_NE(r.out.find("|A| = 3"), std::string::npos);
  EXPECT_NE(r.out.find("h = 3"), std::string::npos);
  EXPECT_NE(r.out.find("exponents 1 2"), std::string::npos);
}

TEST(CliInfo, OrbitsAndRankOne) {
  EXPECT_NE(call({"info", "B", "2"}).out.find("orbits: 2x2"), std::string::npos);
  const auto a1 = call({"info", "--type", "A1"});
  EXPECT_EQ(a1.code, 0);
  EXPECT_NE(a1.out.find("|A| = 1"), std::string::npos);
  EXPECT_NE(a1.out.find("h = 2"), std::string::npos);
  const auto j = json::parse(call({"info", "H3", "--format", "json"}).out);
  EXPECT_EQ(j.at("group").at("order"), 120);
  EXPECT_EQ(j.at("group").at("field"), "Q(sqrt5)");
}

TEST(CliInfo, Unsupported) {
  EXPECT_EQ(call({"info", "E8"}).code, coxfree::cli::kUnsupported);
  EXPECT_EQ(call({"info", "A", "12"}).code, coxfree::cli::kUnsupported);
  EXPECT_EQ(call({"info"}).code, coxfree::cli::kError);
  EXPECT_EQ(call({"bogus"}).code, coxfree::cli::kError);
}

TEST(CliBasis, B2) {
  const auto r = call({"basis", "--type", "B2", "--m", "1", "--k", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("certificate").at("verdict"), "Free-with-basis");
  EXPECT_EQ(j.at("degrees"), json({5, 7}));
  EXPECT_EQ(j.at("degree_sum"), 12);
  EXPECT_EQ(j.at("expected_degree_sum"), 12);
  EXPECT_EQ(j.at("inputs").at("target_multiplicity"), json({3, 3, 3, 3}));
  EXPECT_EQ(j.at("invariants").at("fingerprint").get<std::string>().size(), 16u);
  EXPECT_EQ(j.at("certificate").at("contact_orders").size(), 2u);
}

TEST(CliBasis, RankOneShiftTwo) {
  const auto r = call({"basis", "--type", "A1", "--m", "0", "--k", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("degrees"), json({4}));
  EXPECT_EQ(j.at("certificate").at("contact_orders"), json({{4}}));
  EXPECT_EQ(j.at("members")[0].at("field"), json::parse(R"([[{"coeff":"4/3","exp":[4]}]])"));
}

TEST(CliBasis, ReportsAreByteDeterministic) {
  const std::vector<std::string> args{"basis", "--type", "G2", "--m", "1", "--k", "1", "--format", "json"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(CliBasis, InvalidBaseMultiplicity) {
  EXPECT_EQ(call({"basis", "--type", "B2", "--m", "2"}).code, coxfree::cli::kError);
  EXPECT_EQ(call({"basis", "--type", "B2", "--orbit-m", "1,2"}).code, coxfree::cli::kError);
  EXPECT_EQ(call({"basis", "--type", "B2", "--orbit-m", "1,0,1"}).code, coxfree::cli::kError);
  EXPECT_EQ(call({"basis", "--type", "B2", "--m", "1", "--orbit-m", "1,0"}).code, coxfree::cli::kError);
}

TEST(CliBasis, Budget) {
  EXPECT_EQ(call({"basis", "--type", "B3", "--m", "1", "--k", "2", "--time-budget", "0.000001"}).code,
            coxfree::cli::kUnsupported);
  EXPECT_EQ(call({"basis", "--type", "B3", "--order-bound", "10"}).code, coxfree::cli::kUnsupported);
}

TEST_F(CliFiles, OrbitFile) {
  write("orbits.json", R"({"orbits": [1, 0]})");
  const auto r = call({"basis", "--type", "B2", "--mfile", path("orbits.json"), "--k", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("inputs").at("base_source"), "oracle");
  EXPECT_EQ(j.at("inputs").at("base_multiplicity"), json({1, 0, 1, 0}));
  EXPECT_EQ(j.at("degree_sum"), 10);

  write("per_member.json", R"({"orbits": [[1, 0], 0]})");
  const auto p = call({"basis", "--type", "B2", "--mfile", path("per_member.json"), "--k", "1", "--format", "json"});
  EXPECT_TRUE(p.code == 0 || p.code == 2) << p.err;
  EXPECT_EQ(json::parse(p.out).at("inputs").at("base_multiplicity"), json({1, 0, 0, 0}));

  write("bad.json", R"({"orbits": [1]})");
  EXPECT_EQ(call({"basis", "--type", "B2", "--mfile", path("bad.json")}).code, coxfree::cli::kError);
}

TEST_F(CliFiles, ReportRoundTrip) {
  ASSERT_EQ(call({"basis", "--type", "B2", "--m", "1", "--k", "1", "--out", path("r.json")}).code, 0);
  const auto again = call({"certify", "--type", "B2", "--members", path("r.json"), "--m", "3", "--format", "json"});
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(json::parse(again.out).at("certificate").at("verdict"), "Free-with-basis");
  EXPECT_EQ(call({"certify", "--type", "B2", "--members", path("r.json"), "--m", "4"}).code,
            coxfree::cli::kNotABasis);

  ASSERT_EQ(call({"basis", "--type", "B2", "--m", "1", "--k", "0", "--out", path("k0.json")}).code, 0);
  const auto rebuilt = call({"basis", "--type", "B2", "--m", "1", "--k", "1", "--base", path("k0.json"), "--format", "json"});
  ASSERT_EQ(rebuilt.code, 0) << rebuilt.err;
  const auto direct = json::parse(call({"basis", "--type", "B2", "--m", "1", "--k", "1", "--format", "json"}).out);
  EXPECT_EQ(json::parse(rebuilt.out).at("members"), direct.at("members"));
}

TEST_F(CliFiles, BadBaseExitsTwo) {
  write("coords.json", R"([[[{"exp":[0,0],"coeff":"1"}], []], [[], [{"exp":[0,0],"coeff":"1"}]]])");
  const auto r = call({"basis", "--type", "B2", "--m", "1", "--k", "1", "--base", path("coords.json")});
  EXPECT_EQ(r.code, coxfree::cli::kNotABasis);
  EXPECT_NE(r.out.find("NotMember"), std::string::npos);
  EXPECT_EQ(call({"basis", "--type", "B2", "--m", "0", "--k", "1", "--base", path("coords.json")}).code, 0);
}

TEST_F(CliFiles, CacheDirectory) {
  const auto r = call({"info", "B3", "--cache-dir", path("cache")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "cache" / "B3_Q.json"));
  EXPECT_EQ(call({"info", "B3", "--cache-dir", path("cache")}).out, r.out);
}

TEST(CliVerify, Examples) {
  const auto shift = call({"verify", "--type", "A2", "--suite", "shift", "--samples", "20"});
  EXPECT_EQ(shift.code, 0) << shift.out;
  EXPECT_NE(shift.out.find("20/20 pass"), std::string::npos);
  EXPECT_EQ(call({"verify", "--type", "A1", "--suite", "euler"}).code, 0);
  const auto jac = call({"verify", "--type", "G2", "--suite", "jacobian"});
  EXPECT_EQ(jac.code, 0);
  EXPECT_NE(jac.out.find("c = "), std::string::npos);
  const auto j = json::parse(call({"verify", "--type", "B2", "--suite", "euler", "--format", "json"}).out);
  EXPECT_TRUE(j.at("ok").get<bool>());
  EXPECT_EQ(call({"verify", "--type", "B2", "--suite", "nope"}).code, coxfree::cli::kError);
}

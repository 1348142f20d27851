#include <gtest/gtest.h>

#include "coxfree/property_suites.hpp"

using namespace coxfree;

TEST(SampleRng, Deterministic) {
  SampleRng a(12);
  SampleRng b(12);
  SampleRng c(13);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const long va = a.between(-5, 5);
    EXPECT_EQ(va, b.between(-5, 5));
    EXPECT_GE(va, -5);
    EXPECT_LE(va, 5);
    differs = differs || va != c.between(-5, 5);
  }
  EXPECT_TRUE(differs);
}

class Suites : public ::testing::TestWithParam<std::tuple<const char*, const char*>> {};

TEST_P(Suites, Pass) {
  const auto [label, suite] = GetParam();
  const auto sys = make_coxeter_system(label);
  SuiteOptions opt;
  opt.samples = 20;
  const auto r = run_suite(suite, sys, opt);
  EXPECT_TRUE(r.ok()) << label << " " << suite << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.total, 0u);
}

INSTANTIATE_TEST_SUITE_P(Small, Suites,
                         ::testing::Combine(::testing::Values("A1", "A2", "B2", "G2"),
                                            ::testing::Values("shift", "euler", "jacobian", "hodge", "relation",
                                                              "oracle")),
                         [](const auto& info) {
                           return std::string(std::get<0>(info.param)) + "_" + std::get<1>(info.param);
                         });

TEST(Suites, SameSeedSameReport) {
  const auto sys = make_coxeter_system("A2");
  SuiteOptions opt;
  opt.samples = 8;
  opt.seed = 77;
  const auto a = run_suite("shift", sys, opt);
  const auto b = run_suite("shift", sys, opt);
  EXPECT_EQ(a.total, b.total);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.failures, b.failures);
}

TEST(Suites, UnknownName) {
  const auto sys = make_coxeter_system("A1");
  EXPECT_THROW(run_suite("nope", sys, {}), std::invalid_argument);
}

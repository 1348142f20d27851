#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "coxfree/certification.hpp"
#include "coxfree/coxeter_system.hpp"
#include "coxfree/errors.hpp"
#include "coxfree/invariant_cache.hpp"
#include "coxfree/invariants.hpp"
#include "coxfree/json_io.hpp"
#include "support.hpp"

using namespace coxfree;
using coxfree::testing::var;

namespace fs = std::filesystem;

class Invariants : public ::testing::TestWithParam<const char*> {};

TEST_P(Invariants, GeneratorsAreInvariantUnderEveryElement) {
  const auto sys = make_coxeter_system(GetParam());
  for (const auto& p : sys.invariants.generators) {
    for (std::size_t w = 0; w < sys.group.order(); ++w) EXPECT_EQ(act(sys.group, w, p), p);
  }
}

TEST_P(Invariants, DegreesAndJacobian) {
  const auto sys = make_coxeter_system(GetParam());
  const auto& inv = sys.invariants;
  ASSERT_EQ(inv.degrees, sys.datum.degrees);
  for (std::size_t j = 0; j < inv.generators.size(); ++j) {
    EXPECT_TRUE(inv.generators[j].is_homogeneous());
    EXPECT_EQ(inv.generators[j].degree(), static_cast<int>(inv.degrees[j]));
  }
  EXPECT_FALSE(inv.jacobian_scalar.is_zero());
  EXPECT_EQ(inv.jacobian, sys.arrangement.defining_polynomial * inv.jacobian_scalar);
  const std::size_t n = sys.rank();
  if (n >= 2) EXPECT_LT(inv.degrees[n - 2], inv.coxeter_number);
}

TEST_P(Invariants, GradientsLieInD1WithExponentDegrees) {
  const auto sys = make_coxeter_system(GetParam());
  const auto grads = gradient_basis(sys.invariants, sys.datum);
  for (std::size_t j = 0; j < grads.size(); ++j) {
    EXPECT_EQ(grads[j].degree(), static_cast<int>(sys.invariants.exponents[j]));
    EXPECT_TRUE(is_invariant(sys.group, grads[j]));
    for (std::size_t h = 0; h < sys.arrangement.size(); ++h) {
      EXPECT_TRUE(contact_order(grads[j], sys.arrangement, h).at_least(1));
    }
  }
}

TEST_P(Invariants, PartialPIsDual) {
  const auto sys = make_coxeter_system(GetParam());
  const auto& inv = sys.invariants;
  const std::size_t n = sys.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const auto field = partial_P_field(inv, i);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(field.apply(inv.generators[j]), Polynomial::constant(n, Scalar(i == j ? 1 : 0)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, Invariants,
                         ::testing::Values("A1", "A2", "A3", "B2", "B3", "G2", "D4", "H3", "I2(5)", "I2(8)"),
                         coxfree::testing::LabelName{});

TEST(Invariants, B2CanonicalGenerators) {
  const auto sys = make_coxeter_system("B2");
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  EXPECT_EQ(sys.invariants.generators[0], x * x + y * y);
  EXPECT_EQ(sys.invariants.generators[1], x.pow(4) + y.pow(4));
  EXPECT_EQ(sys.invariants.jacobian_scalar, Scalar(-8));
}

TEST(Invariants, AlternativeGeneratorsAreAccepted) {
  const auto base = make_coxeter_system("B2");
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  const auto alt = make_invariant_system(base.datum, base.group, base.arrangement, {x * x + y * y, x * x * y * y});
  EXPECT_FALSE(alt.jacobian_scalar.is_zero());
  EXPECT_NE(alt.jacobian_scalar, base.invariants.jacobian_scalar);
  EXPECT_THROW(
      make_invariant_system(base.datum, base.group, base.arrangement, {x * x + y * y, (x * x + y * y).pow(2)}),
      JacobianDegenerate);
  EXPECT_ANY_THROW(make_invariant_system(base.datum, base.group, base.arrangement, {x * x + y * y, x.pow(4)}));
}

TEST(Invariants, FieldBasisMatchesInvariantKernel) {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto sys = make_coxeter_system(label);
    const auto zero = Multiplicity::constant(sys.arrangement, 0);
    for (unsigned d = 0; d <= 7; ++d) {
      const auto basis = invariant_field_basis(sys.invariants, d);
      EXPECT_EQ(basis.size(), invariant_graded_kernel(zero, d, sys.arrangement, sys.group).size())
          << label << " degree " << d;
      for (const auto& b : basis) EXPECT_TRUE(is_invariant(sys.group, b));
    }
  }
}

TEST(Invariants, A1Values) {
  const auto sys = make_coxeter_system("A1");
  const auto x = var(1, 0);
  EXPECT_EQ(sys.invariants.generators[0], x * x);
  EXPECT_EQ(sys.invariants.jacobian, Scalar(2) * x);
  EXPECT_EQ(sys.invariants.coxeter_number, 2u);
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("coxfree_cache_test_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CacheTest, RoundTrip) {
  const InvariantCache cache(dir_);
  const auto fresh = make_coxeter_system("B3", &cache);
  ASSERT_TRUE(fs::exists(cache.file_for(fresh.datum)));
  EXPECT_EQ(cache.file_for(fresh.datum).filename(), "B3_Q.json");
  const auto loaded = cache.load(fresh.datum);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(*loaded, fresh.invariants.generators);
  const auto again = make_coxeter_system("B3", &cache);
  EXPECT_EQ(fingerprint(again.invariants), fingerprint(fresh.invariants));
}

TEST_F(CacheTest, QuadraticFieldEntries) {
  const InvariantCache cache(dir_);
  const auto sys = make_coxeter_system("I2(5)", &cache);
  EXPECT_EQ(cache.load(sys.datum), sys.invariants.generators);
}

TEST_F(CacheTest, CorruptEntryIsIgnored) {
  const InvariantCache cache(dir_);
  const auto datum = make_datum("A2");
  fs::create_directories(dir_);
  std::ofstream(cache.file_for(datum)) << "{not json";
  EXPECT_FALSE(cache.load(datum).has_value());
  const auto sys = make_coxeter_system(datum, &cache);
  EXPECT_EQ(sys.invariants.generators.size(), 2u);
  EXPECT_TRUE(cache.load(datum).has_value());
}

TEST_F(CacheTest, WrongGeneratorsAreRecomputed) {
  const InvariantCache cache(dir_);
  const auto datum = make_datum("B2");
  const auto x = var(2, 0);
  cache.store(datum, {x * x, x.pow(4)});
  const auto sys = make_coxeter_system(datum, &cache);
  EXPECT_EQ(fingerprint(sys.invariants), fingerprint(make_coxeter_system("B2").invariants));
}

TEST_F(CacheTest, EnvironmentOverride) {
  ::setenv("COXFREE_CACHE_DIR", dir_.c_str(), 1);
  EXPECT_EQ(InvariantCache::from_environment("/nonexistent").directory(), dir_);
  ::unsetenv("COXFREE_CACHE_DIR");
  EXPECT_EQ(InvariantCache::from_environment("/fallback").directory(), fs::path("/fallback"));
}

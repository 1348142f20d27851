#include <gtest/gtest.h>

#include "coxfree/certification.hpp"
#include "coxfree/connection.hpp"
#include "coxfree/coxeter_system.hpp"
#include "coxfree/errors.hpp"
#include "coxfree/property_suites.hpp"
#include "support.hpp"

using namespace coxfree;
using coxfree::testing::random_polynomial;
using coxfree::testing::var;

namespace {

Derivation random_field(std::mt19937_64& rng, std::size_t n) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_polynomial(rng, n, 3, 3));
  return Derivation(std::move(c));
}

}  // namespace

TEST(Connection, CharacterizedOnLinearForms) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d1 = random_field(rng, 3);
    const auto d2 = random_field(rng, 3);
    const std::vector<Scalar> coeffs{Scalar(static_cast<long>(rng() % 5) - 2), Scalar(1),
                                     Scalar(static_cast<long>(rng() % 5) - 2)};
    const auto alpha = Polynomial::linear_form(coeffs);
    EXPECT_EQ(nabla(d1, d2).apply(alpha), d1.apply(d2.apply(alpha)));
  }
}

TEST(Connection, LinearInTheFirstSlot) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d1 = random_field(rng, 2);
    const auto d2 = random_field(rng, 2);
    const auto f = random_polynomial(rng, 2, 3, 3);
    EXPECT_EQ(nabla(f * d1, d2), f * nabla(d1, d2));
  }
}

TEST(Connection, EulerIdentities) {
  const auto e = euler(2);
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  const Derivation d({x * y * y, Scalar(3) * x.pow(3)});
  EXPECT_EQ(nabla(d, e), d);
  EXPECT_EQ(nabla(e, d), Scalar(3) * d);
}

TEST(PrimitiveDerivation, RankOne) {
  const auto sys = make_coxeter_system("A1");
  const auto x = var(1, 0);
  const Derivation lifted({Scalar(2, 3) * x.pow(3)});
  EXPECT_EQ(nabla_D(lifted, sys.invariants), euler(1));
  EXPECT_EQ(nabla_D_inverse(euler(1), sys.invariants, sys.group), lifted);
  EXPECT_EQ(apply_primitive(x * x, sys.invariants), Polynomial::constant(1, Scalar(1)));
}

TEST(PrimitiveDerivation, KillsConstantFields) {
  const auto sys = make_coxeter_system("B2");
  EXPECT_TRUE(nabla_D(Derivation::coordinate(2, 0), sys.invariants).is_zero());
  EXPECT_TRUE(nabla_D(Scalar(3) * Derivation::coordinate(2, 1), sys.invariants).is_zero());
}

TEST(PrimitiveDerivation, DualToTopInvariant) {
  for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
    const auto sys = make_coxeter_system(label);
    const auto& inv = sys.invariants;
    const std::size_t n = sys.rank();
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(apply_primitive(inv.generators[j], inv), Polynomial::constant(n, Scalar(j + 1 == n ? 1 : 0)))
          << label;
    }
  }
}

TEST(PrimitiveDerivation, EulerHasAPole) {
  const auto sys = make_coxeter_system("B2");
  EXPECT_THROW(nabla_D(euler(2), sys.invariants), NotPolynomial);
}

TEST(InverseD, ZeroAndBadInput) {
  const auto sys = make_coxeter_system("A2");
  EXPECT_TRUE(nabla_D_inverse(Derivation(2), sys.invariants, sys.group).is_zero());
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  EXPECT_THROW(nabla_D_inverse(Derivation({x, y * y}), sys.invariants, sys.group), std::invalid_argument);
  EXPECT_THROW(nabla_D_inverse(Derivation({x, Polynomial(2)}), sys.invariants, sys.group), NoSolution);
}

class InverseRoutes : public ::testing::TestWithParam<const char*> {};

TEST_P(InverseRoutes, MethodsAgreeAndRoundTrip) {
  const auto sys = make_coxeter_system(GetParam());
  const auto& inv = sys.invariants;
  SampleRng rng(99);
  for (int s = 0; s < 6; ++s) {
    const auto delta = random_invariant_field(rng, inv, inv.coxeter_number);
    const auto a = nabla_D_inverse(delta, inv, sys.group, InverseMethod::InvariantBasis);
    const auto b = nabla_D_inverse(delta, inv, sys.group, InverseMethod::MonomialAnsatz);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.degree(), delta.degree() + static_cast<int>(inv.coxeter_number));
    EXPECT_TRUE(is_invariant(sys.group, a));
    EXPECT_EQ(nabla_D(a, inv), delta);
    EXPECT_EQ(nabla_D_inverse(nabla_D(a, inv), inv, sys.group), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, InverseRoutes, ::testing::Values("A1", "A2", "B2", "G2"),
                         coxfree::testing::LabelName{});

TEST(PrimitiveDerivation, LinearOverLowerInvariants) {
  const auto sys = make_coxeter_system("B2");
  const auto& inv = sys.invariants;
  const auto u = nabla_D_inverse(euler(2), inv, sys.group);
  const auto& p1 = inv.generators[0];
  for (const auto& g : {p1, p1 * p1, p1.pow(3) * Scalar(-2)}) {
    EXPECT_EQ(nabla_D(g * u, inv), g * nabla_D(u, inv));
  }
}

TEST(PrimitiveDerivation, ShiftsContactOrderByTwo) {
  const auto sys = make_coxeter_system("A2");
  const auto& inv = sys.invariants;
  SampleRng rng(5);
  for (int s = 0; s < 10; ++s) {
    const auto delta = random_invariant_field(rng, inv, 6);
    const auto lifted = nabla_D_inverse(delta, inv, sys.group);
    for (std::size_t h = 0; h < sys.arrangement.size(); ++h) {
      const auto before = contact_order(delta, sys.arrangement, h);
      const auto after = contact_order(lifted, sys.arrangement, h);
      ASSERT_FALSE(before.is_infinite());
      EXPECT_EQ(after.value(), before.value() + 2);
    }
  }
}

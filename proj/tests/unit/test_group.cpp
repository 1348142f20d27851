#include <gtest/gtest.h>

#include "coxfree/coxeter_datum.hpp"
#include "coxfree/errors.hpp"
#include "coxfree/reflection_group.hpp"
#include "support.hpp"

using namespace coxfree;
using coxfree::testing::var;

namespace {

std::size_t degree_product(const CoxeterDatum& d) {
  std::size_t p = 1;
  for (unsigned e : d.degrees) p *= e;
  return p;
}

}  // namespace

TEST(Datum, ParsesLabels) {
  EXPECT_EQ(make_datum("B3").rank, 3u);
  EXPECT_EQ(make_datum("B", 3).label, "B3");
  EXPECT_EQ(make_datum("I2(5)").dihedral_order, 5u);
  EXPECT_EQ(make_datum("I2(5)").field_name(), "Q(sqrt5)");
  EXPECT_EQ(make_datum("H3").field_name(), "Q(sqrt5)");
  EXPECT_EQ(make_datum("G2").field_name(), "Q");
  for (const char* bad : {"A9", "B1", "D3", "G3", "H4", "I2(7)", "X2", "", "B2(3)"}) {
    EXPECT_THROW(make_datum(bad), UnsupportedType) << bad;
  }
}

class GroupOrder : public ::testing::TestWithParam<const char*> {};

TEST_P(GroupOrder, OrderIsProductOfDegrees) {
  const auto datum = make_datum(GetParam());
  const auto built = build_group(datum);
  EXPECT_EQ(built.group.order(), degree_product(datum));
  EXPECT_EQ(built.group.order(), datum.classical_order);
  std::size_t exponents = 0;
  for (unsigned d : datum.degrees) exponents += d - 1;
  EXPECT_EQ(built.arrangement.size(), exponents);
  EXPECT_EQ(built.group.num_reflections(), built.arrangement.size());
  EXPECT_EQ(2 * built.arrangement.size(), datum.coxeter_number() * datum.rank);
}

TEST_P(GroupOrder, ElementsPreserveTheInnerProduct) {
  const auto datum = make_datum(GetParam());
  const auto built = build_group(datum);
  for (const auto& w : built.group.elements()) EXPECT_EQ(w.transpose() * datum.gram * w, datum.gram);
}

TEST_P(GroupOrder, HyperplanesAreNormalizedAndFixed) {
  const auto datum = make_datum(GetParam());
  const auto built = build_group(datum);
  const auto& arr = built.arrangement;
  Polynomial q = Polynomial::constant(datum.rank, Scalar(1));
  for (const auto& h : arr.hyperplanes) {
    std::size_t first = 0;
    while (h.form[first].is_zero()) ++first;
    EXPECT_EQ(h.form[first], Scalar(1));
    const auto& s = built.group.element(h.reflection);
    EXPECT_EQ(act(built.group, h.reflection, h.alpha), -h.alpha);
    EXPECT_EQ(s * s, ScalarMatrix::identity(datum.rank));
    q *= h.alpha;
  }
  EXPECT_EQ(q, arr.defining_polynomial);
  for (std::size_t s : built.group.simple_reflections()) {
    EXPECT_EQ(act(built.group, s, arr.defining_polynomial), -arr.defining_polynomial);
  }
}

INSTANTIATE_TEST_SUITE_P(Types, GroupOrder,
                         ::testing::Values("A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "H3", "I2(3)",
                                           "I2(4)", "I2(5)", "I2(6)", "I2(8)"),
                         coxfree::testing::LabelName{});

TEST(Group, SmallOrders) {
  EXPECT_EQ(build_group(make_datum("A1")).group.order(), 2u);
  EXPECT_EQ(build_group(make_datum("A2")).group.order(), 6u);
  EXPECT_EQ(build_group(make_datum("B2")).group.order(), 8u);
}

TEST(Group, OrderBound) { EXPECT_THROW(build_group(make_datum("B3"), 20), BudgetExceeded); }

TEST(Group, ReynoldsOfSquareOnB2) {
  const auto built = build_group(make_datum("B2"));
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  EXPECT_EQ(reynolds(built.group, x * x), (x * x + y * y) * Scalar(1, 2));
  EXPECT_TRUE(reynolds(built.group, x * y).is_zero());
}

TEST(Group, OrbitStructure) {
  auto sizes = [](const char* label) {
    std::vector<std::size_t> out;
    for (const auto& o : build_group(make_datum(label)).arrangement.orbits) out.push_back(o.size());
    return out;
  };
  EXPECT_EQ(sizes("A2"), (std::vector<std::size_t>{3}));
  EXPECT_EQ(sizes("B2"), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(sizes("G2"), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(sizes("H3"), (std::vector<std::size_t>{15}));
  EXPECT_EQ(sizes("I2(5)"), (std::vector<std::size_t>{5}));
  auto b3 = sizes("B3");
  std::sort(b3.begin(), b3.end());
  EXPECT_EQ(b3, (std::vector<std::size_t>{3, 6}));
}

TEST(Group, B2HyperplanesAndOrbits) {
  const auto arr = build_group(make_datum("B2")).arrangement;
  const auto x = var(2, 0);
  const auto y = var(2, 1);
  ASSERT_EQ(arr.size(), 4u);
  EXPECT_EQ(arr.alpha(0), y);
  EXPECT_EQ(arr.alpha(1), x - y);
  EXPECT_EQ(arr.alpha(2), x);
  EXPECT_EQ(arr.alpha(3), x + y);
  EXPECT_EQ(arr.orbits, (std::vector<std::vector<std::size_t>>{{0, 2}, {1, 3}}));
}

TEST(Multiplicity, Constructors) {
  const auto arr = build_group(make_datum("B2")).arrangement;
  EXPECT_EQ(Multiplicity::constant(arr, 3).total(), 12u);
  const auto m = Multiplicity::per_orbit(arr, {1, 0});
  EXPECT_EQ(m.values(), (std::vector<unsigned>{1, 0, 1, 0}));
  EXPECT_FALSE(m.is_constant());
  EXPECT_EQ(m.shifted(2).values(), (std::vector<unsigned>{3, 2, 3, 2}));
  const auto p = Multiplicity::per_hyperplane(arr, {{1, 0}, {0, 2}});
  EXPECT_EQ(p.values(), (std::vector<unsigned>{1, 0, 0, 2}));
  EXPECT_EQ(p.total(), 3u);
  EXPECT_THROW(Multiplicity::per_orbit(arr, {1}), std::invalid_argument);
}

TEST(Arrangement, RescaledKeepsQConsistent) {
  const auto arr = build_group(make_datum("A2")).arrangement;
  const auto r = arr.rescaled(1, Scalar(3));
  EXPECT_EQ(r.alpha(1), arr.alpha(1) * Scalar(3));
  EXPECT_EQ(r.defining_polynomial, arr.defining_polynomial * Scalar(3));
}

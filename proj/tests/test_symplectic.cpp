#include <gtest/gtest.h>

#include <random>

#include "steenrodlab/error.hpp"
#include "steenrodlab/expression.hpp"
#include "steenrodlab/properties.hpp"
#include "steenrodlab/steenrod.hpp"
#include "steenrodlab/suite.hpp"
#include "steenrodlab/symplectic.hpp"

using namespace steenrodlab;

TEST(Symplectic, FormAndMembership) {
  const auto omega = symplectic_form(3, 1);
  EXPECT_EQ(omega, FpMatrix(3, {{0, 1}, {-1, 0}}));
  EXPECT_EQ(det(omega).value(), 1u);
  EXPECT_TRUE(is_symplectic(omega));
  EXPECT_FALSE(is_symplectic(FpMatrix(3, {{1, 0}, {0, 2}})));
  EXPECT_THROW(SymplecticMatrix(FpMatrix(3, {{1, 1}, {0, 2}})), Error);
  for (const auto& g : symplectic_generators(5, 2)) EXPECT_TRUE(is_symplectic(g.matrix()));
}

TEST(Symplectic, IdentityActsTrivially) {
  const auto params = AlgebraParams::make(3, 2);
  const SymplecticMatrix id(FpMatrix::identity(4, 3));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto x = random_element(params, 6, 5, rng);
    EXPECT_EQ(act(id, x), x);
  }
}

TEST(Symplectic, RotationOnGenerators) {
  const auto params = AlgebraParams::make(3, 1);
  const SymplecticMatrix g(FpMatrix(3, {{0, 1}, {-1, 0}}));
  EXPECT_EQ(act(g, GradedElement::a(params, 1)), -GradedElement::b(params, 1));
  EXPECT_EQ(act(g, GradedElement::b(params, 1)), GradedElement::a(params, 1));
  EXPECT_EQ(act(g, GradedElement::xi(params, 1)), -GradedElement::eta(params, 1));
  EXPECT_EQ(act(g, GradedElement::eta(params, 1)), GradedElement::xi(params, 1));
}

TEST(Symplectic, SymplecticClassIsFixed) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}, {5, 3}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto s = symplectic_class(params);
    std::mt19937_64 rng(p + r);
    for (int t = 0; t < 20; ++t) EXPECT_EQ(act(random_symplectic(p, r, 6, rng), s), s);
  }
}

TEST(Symplectic, GeneratorsReachFullGroup) {
  EXPECT_EQ(symplectic_group_order(3, 1), 24u);
  EXPECT_EQ(symplectic_group_order(5, 1), 120u);
  EXPECT_EQ(symplectic_group_order(3, 2), 51840u);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto cert = certify_generators(p, r);
    EXPECT_TRUE(cert.ok());
    EXPECT_EQ(cert.reached_order, symplectic_group_order(p, r));
  }
  EXPECT_THROW(certify_generators(3, 2, 1000), Error);
}

TEST(Invariants, ExteriorDegreeTwo) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto inv = invariant_subspace(params, 2, symplectic_generators(p, r), InvariantSpace::Exterior);
    EXPECT_TRUE(spans_exactly(inv, symplectic_class(params)));
  }
}

TEST(Invariants, ExteriorDegreeTwoByExhaustion) {
  // All 3^6 elements of Λ² for (p, r) = (3, 2), tested against each generator.
  const auto params = AlgebraParams::make(3, 2);
  const auto basis = exterior_basis_of_degree(params, 2);
  const auto gens = symplectic_generators(3, 2);
  std::vector<GradedElement> fixed;
  FpVector coords(basis.size(), 0);
  for (std::uint32_t code = 0; code < 729; ++code) {
    std::uint32_t rest = code;
    for (auto& c : coords) {
      c = rest % 3;
      rest /= 3;
    }
    const auto x = from_coordinates(params, basis, coords);
    if (std::all_of(gens.begin(), gens.end(), [&](const SymplecticMatrix& g) { return act(g, x) == x; })) {
      fixed.push_back(x);
    }
  }
  ASSERT_EQ(fixed.size(), 3u);
  const auto s = symplectic_class(params);
  for (const auto& x : fixed) EXPECT_TRUE(x.is_zero() || x == s || x == s.scaled(2));
}

TEST(Invariants, FullGroupSweepAgrees) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto gens = symplectic_generators(p, r);
    const auto group = enumerate_group(gens);
    ASSERT_EQ(group.size(), symplectic_group_order(p, r));
    EXPECT_EQ(invariant_subspace(params, 2, group, InvariantSpace::Exterior),
              invariant_subspace(params, 2, gens, InvariantSpace::Exterior));
  }
}

TEST(Invariants, DegreeOneHasNone) {
  const auto params = AlgebraParams::make(3, 1);
  EXPECT_TRUE(invariant_subspace(params, 1, symplectic_generators(3, 1), InvariantSpace::Full).empty());
}

TEST(Invariants, IntegralDegreeThree) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto inv = invariant_subspace(params, 3, symplectic_generators(p, r), InvariantSpace::Integral3);
    EXPECT_TRUE(spans_exactly(inv, bockstein(symplectic_class(params))));
  }
  const auto params = AlgebraParams::make(3, 1);
  const auto inv = invariant_subspace(params, 3, symplectic_generators(3, 1), InvariantSpace::Integral3);
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_TRUE(inv[0] == parse_expression("x1*b1 - a1*y1", params) ||
              inv[0] == parse_expression("a1*y1 - x1*b1", params));
  try {
    invariant_subspace(params, 4, symplectic_generators(3, 1), InvariantSpace::Integral3);
    FAIL() << "expected a degree error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degree);
  }
}

TEST(Invariants, FullDegreeTwoContainsSymplecticClass) {
  const auto params = AlgebraParams::make(3, 1);
  const auto inv = invariant_subspace(params, 2, symplectic_generators(3, 1), InvariantSpace::Full);
  EXPECT_TRUE(spans_exactly(inv, symplectic_class(params)));
}

TEST(Action, AutomorphismEquivarianceComposition) {
  std::mt19937_64 rng(77);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    for (int t = 0; t < 70; ++t) {
      const auto g = random_symplectic(p, r, 5, rng), h = random_symplectic(p, r, 5, rng);
      const auto x = random_element(params, 5, 3, rng), y = random_element(params, 5, 3, rng);
      EXPECT_EQ(act(g, x * y), act(g, x) * act(g, y));
      EXPECT_EQ(act(g, bockstein(x)), bockstein(act(g, x)));
      EXPECT_EQ(act(g * h, x), act(g, act(h, x)));
      const auto d = x.degree();
      if (d && !act(g, x).is_zero()) EXPECT_EQ(act(g, x).degree(), d);
    }
  }
}

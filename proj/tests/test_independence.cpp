#include <gtest/gtest.h>

#include <random>

#include "steenrodlab/error.hpp"
#include "steenrodlab/expression.hpp"
#include "steenrodlab/independence.hpp"
#include "steenrodlab/relations.hpp"

using namespace steenrodlab;

namespace {

std::vector<GradedElement> parse_all(std::initializer_list<const char*> texts, AlgebraParams params) {
  std::vector<GradedElement> out;
  for (const char* t : texts) out.push_back(parse_expression(t, params));
  return out;
}

std::vector<GradedElement> y_family(AlgebraParams params, std::uint32_t k_max) {
  std::vector<GradedElement> ys;
  for (std::uint32_t k = 0; k <= k_max; ++k) ys.push_back(y_image(params, k).element);
  return ys;
}

}  // namespace

TEST(Jacobian, IdentityMatrix) {
  const auto params = AlgebraParams::make(3, 1);
  const auto polys = parse_all({"x1", "y1"}, params);
  const auto vars = all_variables(params);
  const auto rep = jacobian(polys, vars);
  EXPECT_EQ(rep.rank, 2u);
  EXPECT_EQ(rep.certified_by, Certification::Symbolic);
  EXPECT_EQ(render(rep.matrix[0][0]), "1");
  EXPECT_TRUE(rep.matrix[0][1].is_zero());
  ASSERT_TRUE(rep.determinant.has_value());
  EXPECT_EQ(render(*rep.determinant), "1");
}

TEST(Jacobian, PthPowerHasZeroDerivative) {
  const auto params = AlgebraParams::make(5, 1);
  const auto polys = parse_all({"x1^5"}, params);
  const std::vector<std::size_t> vars{0};
  const auto rep = jacobian(polys, vars);
  EXPECT_EQ(rep.rank, 0u);
  EXPECT_TRUE(rep.matrix[0][0].is_zero());
}

TEST(Jacobian, ExteriorInputIsDomainError) {
  const auto params = AlgebraParams::make(3, 1);
  const auto polys = parse_all({"a1*b1"}, params);
  const auto vars = all_variables(params);
  try {
    jacobian(polys, vars);
    FAIL() << "expected a domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Domain);
  }
}

TEST(Jacobian, YFamilyDeterminantIsNegatedMooreDeterminant) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto params = AlgebraParams::make(p, 1);
    const auto ys = y_family(params, 1);
    const auto vars = all_variables(params);
    const auto rep = jacobian(ys, vars);
    ASSERT_TRUE(rep.determinant.has_value());
    const auto moore = polynomial_determinant(moore_matrix(params));
    EXPECT_EQ(*rep.determinant, -moore);
    EXPECT_EQ(rep.rank, 2u);
  }
}

TEST(Jacobian, EntriesMatchClosedForm) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    EXPECT_TRUE(y_jacobian_matches_closed_form(AlgebraParams::make(p, r), 2 * r - 1));
  }
}

TEST(Jacobian, PolynomialDeterminantMatchesPermutationExpansion) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    EXPECT_EQ(polynomial_determinant(moore_matrix(params)), dickson_monomial_check(params).determinant);
  }
}

TEST(Jacobian, SymbolicAndEvaluationAgree) {
  std::mt19937_64 rng(8);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto vars = all_variables(params);
    for (std::uint32_t k_max = 0; k_max < 2 * r; ++k_max) {
      const auto ys = y_family(params, k_max);
      JacobianOptions sym, ev;
      sym.method = RankMethod::Symbolic;
      ev.method = RankMethod::RandomEvaluation;
      ev.seed = rng();
      const auto a = jacobian(ys, vars, sym);
      const auto b = jacobian(ys, vars, ev);
      EXPECT_EQ(a.rank, b.rank) << "p=" << p << " r=" << r << " k_max=" << k_max;
      EXPECT_EQ(b.certified_by, Certification::RandomEvaluation);
      EXPECT_EQ(b.point_ranks.size(), 8u);
      EXPECT_EQ(b.evaluation_points.size(), 8u);
      EXPECT_GT(b.extension_degree, 1u);
    }
  }
  // Rank-deficient inputs give equal ranks too.
  const auto params = AlgebraParams::make(3, 2);
  const auto polys = parse_all({"x1*y1", "x1^2*y1^2", "x2 + y2"}, params);
  const auto vars = all_variables(params);
  JacobianOptions sym, ev;
  sym.method = RankMethod::Symbolic;
  ev.method = RankMethod::RandomEvaluation;
  EXPECT_EQ(jacobian(polys, vars, sym).rank, 2u);
  EXPECT_EQ(jacobian(polys, vars, ev).rank, 2u);
}

TEST(Jacobian, EvaluationIsReproducible) {
  const auto params = AlgebraParams::make(5, 2);
  const auto ys = y_family(params, 3);
  const auto vars = all_variables(params);
  JacobianOptions opts;
  opts.method = RankMethod::RandomEvaluation;
  opts.seed = 1234;
  const auto a = jacobian(ys, vars, opts);
  const auto b = jacobian(ys, vars, opts);
  EXPECT_EQ(a.evaluation_points, b.evaluation_points);
  EXPECT_EQ(a.point_ranks, b.point_ranks);
  EXPECT_EQ(a.rank, 4u);
}

TEST(Independence, Verdicts) {
  const auto params = AlgebraParams::make(3, 1);
  const auto vars = all_variables(params);
  const auto dep = certify_independence(parse_all({"x1", "x1^2"}, params), vars);
  EXPECT_FALSE(dep.independent());
  EXPECT_EQ(dep.verdict, Verdict::Inconclusive);
  EXPECT_EQ(dep.rank, 1u);

  const auto frob = certify_independence(parse_all({"x1^3"}, params), vars);
  EXPECT_EQ(frob.verdict, Verdict::Inconclusive);
  EXPECT_EQ(frob.rank, 0u);

  const auto many = certify_independence(parse_all({"x1", "y1", "x1*y1"}, params), vars);
  EXPECT_EQ(many.verdict, Verdict::Dependent);
  EXPECT_FALSE(many.report.has_value());
}

TEST(Independence, YFamily) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    EXPECT_TRUE(independence_check_y(AlgebraParams::make(p, r), 2 * r - 1).independent());
  }
  EXPECT_EQ(independence_check_y(AlgebraParams::make(3, 1), 2).verdict, Verdict::Dependent);
}

TEST(Dickson, DistinguishedMonomialHasUnitCoefficient) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}}) {
    const auto params = AlgebraParams::make(p, r);
    const auto rep = dickson_monomial_check(params);
    EXPECT_TRUE(rep.ok);
    EXPECT_TRUE(rep.coefficient == 1 || rep.coefficient == p - 1);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= 2 * r; ++k) fact *= k;
    EXPECT_EQ(rep.expansion_terms, fact);
  }
  const auto params = AlgebraParams::make(3, 1);
  const auto rep = dickson_monomial_check(params);
  EXPECT_EQ(render(rep.distinguished, params), "x1^3*y1^9");
  EXPECT_EQ(render(rep.determinant), "x1^9*y1^3 + 2*x1^3*y1^9");
}

TEST(Dickson, SizeGuard) {
  try {
    dickson_monomial_check(AlgebraParams::make(3, 2), 10);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Budget);
  }
}

TEST(Jacobian, VariableNames) {
  const auto params = AlgebraParams::make(3, 2);
  EXPECT_EQ(variable_name(params, 0), "x1");
  EXPECT_EQ(variable_name(params, 1), "x2");
  EXPECT_EQ(variable_name(params, 2), "y1");
  EXPECT_EQ(variable_name(params, 3), "y2");
}

#include <gtest/gtest.h>

#include "steenrodlab/error.hpp"
#include "steenrodlab/expression.hpp"
#include "steenrodlab/relations.hpp"
#include "steenrodlab/symplectic.hpp"

using namespace steenrodlab;

namespace {

using Dense = std::vector<std::int64_t>;  // coefficients of 1, t, t^2, ... mod p

Dense dense_mul(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

Dense dense_pow(const Dense& a, std::uint64_t n, std::int64_t p) {
  Dense out{1};
  for (std::uint64_t k = 0; k < n; ++k) out = dense_mul(out, a, p);
  return out;
}

// Y_k(ξ, 1) = t^{p^{k+1}} - t for r = 1; a homogeneous relation holds iff it
// holds after setting η = 1.
Dense dense_y(std::uint32_t k, std::int64_t p) {
  std::uint64_t q = 1;
  for (std::uint32_t j = 0; j <= k; ++j) q *= p;
  Dense y(q + 1, 0);
  y[q] = 1;
  y[1] = p - 1;
  return y;
}

// Every coefficient vector in F_p^n that kills Σ c_j pattern_j.
std::vector<std::vector<std::int64_t>> brute_kernel(const std::vector<Pattern>& patterns, std::int64_t p) {
  std::vector<Dense> cols;
  std::size_t len = 0;
  for (const auto& pat : patterns) {
    Dense d{1};
    for (std::size_t k = 0; k < pat.size(); ++k) d = dense_mul(d, dense_pow(dense_y(k, p), pat[k], p), p);
    len = std::max(len, d.size());
    cols.push_back(d);
  }
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(patterns.size(), 0);
  for (;;) {
    Dense sum(len, 0);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) sum[i] = (sum[i] + c[j] * cols[j][i]) % p;
    if (std::all_of(sum.begin(), sum.end(), [](std::int64_t v) { return v == 0; })) out.push_back(c);
    std::size_t k = 0;
    while (k < c.size() && c[k] == p - 1) c[k++] = 0;
    if (k == c.size()) break;
    ++c[k];
  }
  return out;
}

std::vector<GradedElement> y_family(AlgebraParams params, std::uint32_t count) {
  std::vector<GradedElement> ys;
  for (std::uint32_t k = 0; k < count; ++k) ys.push_back(y_image(params, k).element);
  return ys;
}

std::vector<Pattern> headline_patterns(std::uint64_t p) { return {{p * p + 1}, {0, p + 1}, {p, 0, 1}}; }

}  // namespace

TEST(YImage, ClosedForms) {
  const auto p31 = AlgebraParams::make(3, 1);
  EXPECT_EQ(y_image(p31, 0).element, parse_expression("x1^3*y1 - x1*y1^3", p31));
  const auto p32 = AlgebraParams::make(3, 2);
  EXPECT_EQ(y_image(p32, 0).element, parse_expression("x1^3*y1 - x1*y1^3 + x2^3*y2 - x2*y2^3", p32));
  const auto p51 = AlgebraParams::make(5, 1);
  const auto y = y_image(p51, 1);
  EXPECT_EQ(y.element, parse_expression("x1^25*y1 - x1*y1^25", p51));
  EXPECT_EQ(y.degree, 52u);
  EXPECT_EQ(y.chow_degree, 26u);
  EXPECT_EQ(y.element.degree(), y.degree);
}

TEST(YImage, AntisymmetricUnderSwap) {
  for (std::uint32_t r : {1u, 2u}) {
    const auto params = AlgebraParams::make(5, r);
    for (std::uint32_t k = 0; k < 3; ++k) {
      const auto y = y_image(params, k).element;
      GradedElement swapped(params);
      for (const auto& [m, c] : y.terms()) {
        Monomial s = m;
        for (std::uint32_t i = 0; i < r; ++i) std::swap(s.powers[i], s.powers[r + i]);
        swapped.add_term(s, c);
      }
      EXPECT_EQ(swapped, -y);
      EXPECT_TRUE(y.in_polynomial_subring());
    }
  }
}

TEST(YImage, ExponentBudget) {
  try {
    y_image(AlgebraParams::make(101, 1), 3);
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Budget);
  }
}

TEST(YImage, SymplecticInvariance) {
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    const auto params = AlgebraParams::make(p, r);
    for (std::uint32_t k = 0; k < 2; ++k) {
      const auto y = y_image(params, k).element;
      for (const auto& g : symplectic_generators(p, r)) EXPECT_EQ(act(g, y), y);
    }
  }
}

TEST(VerifyChain, HoldsAcrossParameters) {
  for (std::uint32_t p : {3u, 5u})
    for (std::uint32_t r : {1u, 2u})
      for (std::uint32_t k : {0u, 1u}) {
        const auto rep = verify_chain(AlgebraParams::make(p, r), k);
        EXPECT_TRUE(rep.ok) << "p=" << p << " r=" << r << " k=" << k;
        ASSERT_TRUE(rep.unit_factor.has_value());
        EXPECT_EQ(*rep.unit_factor, 1u);
      }
  EXPECT_TRUE(verify_chain(AlgebraParams::make(3, 1), 2).ok);
}

TEST(Patterns, ParseAndRender) {
  const auto pats = parse_patterns("Y0^10, Y1^4 ,Y0^3*Y2");
  ASSERT_EQ(pats.size(), 3u);
  EXPECT_EQ(pats[0], (Pattern{10}));
  EXPECT_EQ(pats[1], (Pattern{0, 4}));
  EXPECT_EQ(pats[2], (Pattern{3, 0, 1}));
  EXPECT_EQ(render_pattern(pats[2]), "Y0^3*Y2");
  EXPECT_EQ(parse_patterns("Y0*Y0")[0], (Pattern{2}));
  EXPECT_THROW(parse_patterns("Y0^"), ParseError);
  EXPECT_THROW(parse_patterns("Z1"), ParseError);
  EXPECT_THROW(parse_patterns("Y0,,Y1"), ParseError);
  EXPECT_THROW(parse_patterns(""), ParseError);
}

TEST(RelationSearch, HeadlineRelationForRankOne) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto params = AlgebraParams::make(p, 1);
    const auto ys = y_family(params, 3);
    const auto patterns = headline_patterns(p);
    const auto res = relation_search(ys, patterns);
    ASSERT_EQ(res.kernel_dim, 1u);
    const auto& v = res.kernel_vectors[0];
    EXPECT_EQ(v, (FpVector{1, p - 1, 1}));
    for (auto c : v) EXPECT_TRUE(c == 1 || c == p - 1);
    EXPECT_TRUE(substitute(ys, patterns, v).is_zero());
    EXPECT_FALSE(res.paper_vector_in_kernel);
    EXPECT_EQ(res.degree, 2 * (p + 1) * (p * p + 1));

    // Dense oracle: the kernel is {0} ∪ multiples of v.
    const auto brute = brute_kernel(patterns, p);
    EXPECT_EQ(brute.size(), p);
    for (const auto& c : brute) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(static_cast<std::uint64_t>(c[j]), c[0] * v[j] % p);
    }
  }
}

TEST(RelationSearch, TrivialAndEmptyKernels) {
  const auto params = AlgebraParams::make(3, 1);
  const auto ys = y_family(params, 2);
  const std::vector<Pattern> same{{1}, {1}};
  const auto res = relation_search(ys, same);
  ASSERT_EQ(res.kernel_dim, 1u);
  EXPECT_EQ(res.kernel_vectors[0], (FpVector{1, 2}));

  const std::vector<Pattern> low{{4}, {0, 2}};  // Chow degree 16 vs 20: not homogeneous
  EXPECT_THROW(relation_search(ys, low), Error);

  const std::vector<Pattern> below{{5}, {0, 2}};  // both Chow degree 20
  EXPECT_EQ(relation_search(ys, below).kernel_dim, 0u);
  EXPECT_TRUE(brute_kernel(below, 3).size() == 1);
}

TEST(RelationSearch, InhomogeneousIsDegreeError) {
  const auto params = AlgebraParams::make(3, 1);
  const auto ys = y_family(params, 2);
  const std::vector<Pattern> pats{{4}, {0, 1}};
  try {
    relation_search(ys, pats);
    FAIL() << "expected a degree error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degree);
  }
}

TEST(RelationSearch, MatchesDenseOracleAcrossDegrees) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto params = AlgebraParams::make(p, 1);
    const auto ys = y_family(params, 3);
    const std::vector<std::uint64_t> weights{p + 1, p * p + 1, p * p * p + 1};
    const std::uint64_t top = p == 3 ? 60 : 160;
    for (std::uint64_t d = 1; d <= top; ++d) {
      const auto pats = patterns_of_weight(weights, d);
      if (pats.empty() || pats.size() > 4) continue;
      const auto res = relation_search(ys, pats);
      std::uint64_t size = 1;
      for (std::size_t k = 0; k < res.kernel_dim; ++k) size *= p;
      EXPECT_EQ(brute_kernel(pats, p).size(), size) << "p=" << p << " d=" << d;
      for (const auto& v : res.kernel_vectors) EXPECT_TRUE(substitute(ys, pats, v).is_zero());
    }
  }
}

TEST(RelationSearch, NoRelationBelowHeadlineDegree) {
  const auto params = AlgebraParams::make(3, 1);
  const auto ys = y_family(params, 2);
  const std::vector<std::uint64_t> weights{4, 10};
  for (std::uint64_t d = 1; d <= 40; ++d) {
    const auto pats = patterns_of_weight(weights, d);
    if (pats.empty()) continue;
    EXPECT_EQ(relation_search(ys, pats).kernel_dim, 0u) << "Chow degree " << d;
  }
}

TEST(RelationSearch, StableUnderUnitRescaling) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto params = AlgebraParams::make(p, 1);
    const auto patterns = headline_patterns(p);
    const auto base = relation_search(y_family(params, 3), patterns);
    for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
      auto ys = y_family(params, 3);
      for (auto& y : ys) y = y.scaled(lambda);
      const auto res = relation_search(ys, patterns);
      EXPECT_EQ(res.kernel_dim, base.kernel_dim);
      EXPECT_EQ(res.kernel_vectors, base.kernel_vectors);
    }
  }
}

TEST(Patterns, OfWeight) {
  const std::vector<std::uint64_t> w{4, 10};
  const auto pats = patterns_of_weight(w, 40);
  ASSERT_EQ(pats.size(), 3u);
  EXPECT_EQ(pats[0], (Pattern{10, 0}));
  EXPECT_EQ(pats[1], (Pattern{5, 2}));
  EXPECT_EQ(pats[2], (Pattern{0, 4}));
  EXPECT_TRUE(patterns_of_weight(w, 3).empty());
}

TEST(Patterns, ExpandChecksRangeAndBudget) {
  const auto params = AlgebraParams::make(3, 1);
  const auto ys = y_family(params, 1);
  EXPECT_THROW(expand_pattern(ys, Pattern{0, 0, 1}), Error);
  try {
    expand_pattern(ys, Pattern{1u << 19});
    FAIL() << "expected a budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Budget);
  }
}

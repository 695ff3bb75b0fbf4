#include <gtest/gtest.h>

#include <random>

#include "steenrodlab/error.hpp"
#include "steenrodlab/expression.hpp"
#include "steenrodlab/properties.hpp"
#include "steenrodlab/steenrod.hpp"
#include "steenrodlab/suite.hpp"

using namespace steenrodlab;

namespace {

GradedElement parse(const std::string& s, AlgebraParams params) { return parse_expression(s, params); }

// C(n, k) mod p from Pascal's triangle.
std::uint32_t pascal_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  std::vector<std::uint32_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = std::min(i, k); j >= 1; --j) row[j] = (row[j] + row[j - 1]) % p;
  return row[k];
}

// P^i(e_S · Π v_k^{n_k}) = e_S · Σ_{i_1+..+i_m = i} Π C(n_k, i_k) v_k^{n_k + i_k(p-1)},
// summed over every distribution of i among the variables.
GradedElement oracle_power(std::uint64_t i, const GradedElement& x) {
  const auto& params = x.params();
  const std::uint32_t p = params.p;
  GradedElement out(params);
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < params.num_vars(); ++k)
      if (m.powers[k] != 0) vars.push_back(k);
    std::vector<std::uint64_t> split(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t rest) -> void {
      if (idx == vars.size()) {
        if (rest != 0) return;
        Monomial res = m;
        std::uint32_t coeff = c;
        for (std::size_t t = 0; t < vars.size(); ++t) {
          const auto n = m.powers[vars[t]];
          coeff = static_cast<std::uint32_t>(static_cast<std::uint64_t>(coeff) * pascal_binomial(n, split[t], p) % p);
          res.powers[vars[t]] = static_cast<std::uint32_t>(n + split[t] * (p - 1));
        }
        if (coeff) out.add_term(res, coeff);
        return;
      }
      for (std::uint64_t e = 0; e <= rest; ++e) {
        split[idx] = e;
        self(self, idx + 1, rest - e);
      }
    };
    rec(rec, 0, i);
  }
  return out;
}

}  // namespace

TEST(Binomial, LucasMatchesPascal) {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint64_t n = 0; n < 60; ++n)
      for (std::uint64_t k = 0; k <= n + 1; ++k) EXPECT_EQ(binomial_mod_p(n, k, p), pascal_binomial(n, k, p));
}

TEST(Bockstein, Generators) {
  const auto params = AlgebraParams::make(3, 2);
  EXPECT_EQ(bockstein(GradedElement::a(params, 1)), GradedElement::xi(params, 1));
  EXPECT_EQ(bockstein(GradedElement::b(params, 2)), GradedElement::eta(params, 2));
  EXPECT_TRUE(bockstein(GradedElement::xi(params, 1).pow(5)).is_zero());
}

TEST(Bockstein, OnSymplecticClass) {
  for (std::uint32_t r : {1u, 2u, 3u}) {
    const auto params = AlgebraParams::make(5, r);
    GradedElement expected(params);
    for (std::uint32_t i = 1; i <= r; ++i) {
      expected += GradedElement::xi(params, i) * GradedElement::b(params, i) -
                  GradedElement::a(params, i) * GradedElement::eta(params, i);
    }
    EXPECT_EQ(bockstein(symplectic_class(params)), expected);
  }
}

TEST(PowerOp, DimensionAxiomOnGenerators) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto params = AlgebraParams::make(p, 1);
    const auto xi = GradedElement::xi(params, 1);
    EXPECT_EQ(power_op(1, xi), xi.pow(p));
    EXPECT_TRUE(power_op(2, xi).is_zero());
    EXPECT_EQ(power_op(0, xi), xi);
    EXPECT_TRUE(power_op(1, GradedElement::a(params, 1)).is_zero());
    std::uint64_t pk = 1;
    for (int k = 0; k < 3; ++k, pk *= p) EXPECT_EQ(power_op(pk, xi.pow(pk)), xi.pow(pk * p));
  }
}

TEST(PowerOp, CartanExampleDegreeFour) {
  const auto params = AlgebraParams::make(3, 1);
  const auto xi = GradedElement::xi(params, 1);
  EXPECT_EQ(power_op(2, xi.pow(2)), xi.pow(6));
  EXPECT_EQ(power_op(2, xi.pow(2)), oracle_power(2, xi.pow(2)));
}

TEST(PowerOp, AgreesWithDistributionOracle) {
  std::mt19937_64 rng(31);
  for (const auto& [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 2}, {7, 1}}) {
    const auto params = AlgebraParams::make(p, r);
    for (int t = 0; t < 100; ++t) {
      const auto x = random_element(params, 12, 5, rng);
      const std::uint64_t i = draw(rng, 8);
      EXPECT_EQ(power_op(i, x), oracle_power(i, x)) << "P^" << i << " of " << render(x);
    }
  }
}

TEST(PowerOp, ActsOnPolynomialFactorOnly) {
  const auto params = AlgebraParams::make(3, 1);
  EXPECT_EQ(power_op(1, parse("a1*x1", params)), parse("a1*x1^3", params));
  EXPECT_EQ(power_op(1, parse("a1*b1*x1*y1", params)), parse("a1*b1*(x1^3*y1 + x1*y1^3)", params));
}

TEST(SteenrodWord, ParseAndRender) {
  const auto w = SteenrodWord::parse("b P9 P3 P1");
  ASSERT_EQ(w.letters().size(), 4u);
  EXPECT_EQ(w.letters()[0], SteenrodLetter::beta());
  EXPECT_EQ(w.letters()[1], SteenrodLetter::power(9));
  EXPECT_EQ(w.render(), "b P9 P3 P1");
  EXPECT_EQ(SteenrodWord::parse("P0 b P0").letters().size(), 1u);
  EXPECT_THROW(SteenrodWord::parse("b Q1"), ParseError);
  EXPECT_EQ(SteenrodWord::y_chain(3, 2).render(), "b P9 P3 P1 b");
  EXPECT_EQ(SteenrodWord::y_chain(3, 0).render(), "b P1 b");
}

TEST(ApplyWord, Examples) {
  const auto params = AlgebraParams::make(3, 1);
  const auto a1 = GradedElement::a(params, 1);
  EXPECT_TRUE(apply_word(SteenrodWord::parse("b P1"), a1).is_zero());
  const auto s = symplectic_class(params);
  EXPECT_EQ(apply_word(SteenrodWord::parse("b"), s), parse("x1*b1 - a1*y1", params));
  EXPECT_EQ(apply_word(SteenrodWord::parse("b P3 P1 b"), s), parse("x1^9*y1 - x1*y1^9", params));
}

TEST(ApplyWord, DegreeShift) {
  const auto params = AlgebraParams::make(5, 2);
  const auto w = SteenrodWord::y_chain(5, 1);
  const auto y = apply_word(w, symplectic_class(params));
  EXPECT_EQ(w.degree_shift(5), 1 + 2 * 5 * 4 + 2 * 1 * 4 + 1u);
  EXPECT_EQ(y.degree(), 2 + w.degree_shift(5));
}

TEST(ApplyWord, IntermediateChainStages) {
  // P^{p^j} sends Σ(ξ^{p^j} b − a η^{p^j}) to Σ(ξ^{p^{j+1}} b − a η^{p^{j+1}}).
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t r : {1u, 2u}) {
      const auto params = AlgebraParams::make(p, r);
      auto stage = [&](std::uint64_t q) {
        GradedElement s(params);
        for (std::uint32_t i = 1; i <= r; ++i) {
          s += GradedElement::xi(params, i).pow(q) * GradedElement::b(params, i) -
               GradedElement::a(params, i) * GradedElement::eta(params, i).pow(q);
        }
        return s;
      };
      GradedElement cur = bockstein(symplectic_class(params));
      std::uint64_t q = 1;
      for (int j = 0; j <= 2; ++j, q *= p) {
        ASSERT_EQ(cur, stage(q));
        cur = power_op(q, cur);
      }
    }
  }
}

TEST(TotalPower, IsMultiplicativeOnPolynomials) {
  std::mt19937_64 rng(41);
  const auto params = AlgebraParams::make(3, 2);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_polynomial(params, 2 * (1 + draw(rng, 3)), 3, rng);
    const auto g = random_polynomial(params, 2 * (1 + draw(rng, 3)), 3, rng);
    EXPECT_EQ(total_power(f * g), total_power(f) * total_power(g));
  }
}

TEST(Bockstein, SquareZeroAndLeibniz) {
  std::mt19937_64 rng(43);
  const auto params = AlgebraParams::make(5, 2);
  for (int t = 0; t < 200; ++t) {
    const auto dx = draw(rng, 6);
    const auto x = random_homogeneous(params, dx, 4, rng);
    const auto y = random_element(params, 6, 4, rng);
    EXPECT_TRUE(bockstein(bockstein(y)).is_zero());
    const auto second = x * bockstein(y);
    EXPECT_EQ(bockstein(x * y), bockstein(x) * y + (dx % 2 ? -second : second));
  }
}

TEST(PowerOp, CacheClearDoesNotChangeResults) {
  const auto params = AlgebraParams::make(5, 1);
  const auto x = parse("x1^7*y1^3 + 2*a1*x1*y1^2", params);
  const auto before = power_op(3, x);
  clear_power_cache();
  EXPECT_EQ(power_op(3, x), before);
}

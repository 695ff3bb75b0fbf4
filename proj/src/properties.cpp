#include "steenrodlab/properties.hpp"

#include <functional>

#include "steenrodlab/parallel.hpp"
#include "steenrodlab/steenrod.hpp"

namespace steenrodlab {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

namespace {

GradedElement pick_terms(AlgebraParams params, const std::vector<Monomial>& basis, std::size_t max_terms,
                         std::mt19937_64& rng) {
  GradedElement x(params);
  if (basis.empty()) return x;
  const std::size_t n = 1 + draw(rng, max_terms);
  for (std::size_t t = 0; t < n; ++t) {
    const auto& m = basis[draw(rng, basis.size())];
    x.add_term(m, static_cast<std::uint32_t>(1 + draw(rng, params.p - 1)));
  }
  return x;
}

struct Case {
  AlgebraParams params;
  std::mt19937_64 rng;
};

constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 3> kCaseParams{{{3, 1}, {3, 2}, {5, 1}}};

// Each case gets its own generator derived from (seed, property, index), so
// the battery can run cases in parallel and stay reproducible.
Case make_case(std::uint64_t seed, std::size_t property, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(property), static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  const auto [p, r] = kCaseParams[index % kCaseParams.size()];
  return Case{AlgebraParams::make(p, r), rng};
}

int koszul_sign(std::uint64_t dx, std::uint64_t dy) { return (dx * dy) % 2 ? -1 : 1; }

using Check = std::function<bool(Case&)>;

struct Property {
  const char* name;
  Check check;
};

std::vector<Property> battery() {
  return {
      {"koszul_commutativity",
       [](Case& c) {
         const auto dx = draw(c.rng, 6), dy = draw(c.rng, 6);
         const auto x = random_homogeneous(c.params, dx, 4, c.rng);
         const auto y = random_homogeneous(c.params, dy, 4, c.rng);
         const auto yx = y * x;
         return x * y == (koszul_sign(dx, dy) < 0 ? -yx : yx);
       }},
      {"associativity",
       [](Case& c) {
         const auto x = random_element(c.params, 5, 4, c.rng);
         const auto y = random_element(c.params, 5, 4, c.rng);
         const auto z = random_element(c.params, 5, 4, c.rng);
         return (x * y) * z == x * (y * z);
       }},
      {"bockstein_squared_zero",
       [](Case& c) {
         const auto x = random_element(c.params, 8, 6, c.rng);
         return bockstein(bockstein(x)).is_zero();
       }},
      {"bockstein_leibniz",
       [](Case& c) {
         const auto dx = draw(c.rng, 6);
         const auto x = random_homogeneous(c.params, dx, 4, c.rng);
         const auto y = random_element(c.params, 5, 4, c.rng);
         const auto second = x * bockstein(y);
         return bockstein(x * y) == bockstein(x) * y + (dx % 2 ? -second : second);
       }},
      {"cartan_total_power",
       [](Case& c) {
         const auto f = random_polynomial(c.params, 2 * (1 + draw(c.rng, 3)), 3, c.rng);
         const auto g = random_polynomial(c.params, 2 * (1 + draw(c.rng, 3)), 3, c.rng);
         return total_power(f * g) == total_power(f) * total_power(g);
       }},
      {"unstable_axioms",
       [](Case& c) {
         const std::uint64_t n = 1 + draw(c.rng, 3);
         const auto x = random_polynomial(c.params, 2 * n, 3, c.rng);
         return power_op(n, x) == x.pow(c.params.p) && power_op(n + 1 + draw(c.rng, 2), x).is_zero();
       }},
      {"action_is_automorphism",
       [](Case& c) {
         const auto g = random_symplectic(c.params.p, c.params.r, 4, c.rng);
         const auto x = random_element(c.params, 5, 3, c.rng);
         const auto y = random_element(c.params, 5, 3, c.rng);
         return act(g, x * y) == act(g, x) * act(g, y) && act(g, x + y) == act(g, x) + act(g, y);
       }},
      {"action_composition",
       [](Case& c) {
         const auto g = random_symplectic(c.params.p, c.params.r, 3, c.rng);
         const auto h = random_symplectic(c.params.p, c.params.r, 3, c.rng);
         const auto x = random_element(c.params, 5, 3, c.rng);
         return act(g * h, x) == act(g, act(h, x));
       }},
      {"bockstein_equivariance",
       [](Case& c) {
         const auto g = random_symplectic(c.params.p, c.params.r, 4, c.rng);
         const auto x = random_element(c.params, 6, 4, c.rng);
         return act(g, bockstein(x)) == bockstein(act(g, x));
       }},
  };
}

}  // namespace

GradedElement random_homogeneous(AlgebraParams params, std::uint64_t d, std::size_t max_terms,
                                 std::mt19937_64& rng) {
  return pick_terms(params, basis_of_degree(params, d), max_terms, rng);
}

GradedElement random_polynomial(AlgebraParams params, std::uint64_t d, std::size_t max_terms,
                                std::mt19937_64& rng) {
  std::vector<Monomial> basis;
  for (const auto& m : basis_of_degree(params, d))
    if (m.is_polynomial()) basis.push_back(m);
  return pick_terms(params, basis, max_terms, rng);
}

GradedElement random_element(AlgebraParams params, std::uint64_t max_degree, std::size_t max_terms,
                             std::mt19937_64& rng) {
  GradedElement x(params);
  const std::size_t n = 1 + draw(rng, max_terms);
  for (std::size_t t = 0; t < n; ++t) {
    const auto basis = basis_of_degree(params, draw(rng, max_degree + 1));
    x += pick_terms(params, basis, 1, rng);
  }
  return x;
}

SymplecticMatrix random_symplectic(std::uint32_t p, std::uint32_t r, std::size_t length, std::mt19937_64& rng) {
  const auto gens = symplectic_generators(p, r);
  SymplecticMatrix g(FpMatrix::identity(2 * r, p));
  for (std::size_t k = 0; k < length; ++k) g = g * gens[draw(rng, gens.size())];
  return g;
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases) {
  const auto props = battery();
  std::vector<PropertyResult> out;
  for (std::size_t pi = 0; pi < props.size(); ++pi) {
    std::vector<char> passed(cases, 0);
    std::vector<std::string> reasons(cases);
    parallel_for(cases, [&](std::size_t i) {
      Case c = make_case(seed, pi, i);
      try {
        passed[i] = props[pi].check(c) ? 1 : 0;
        if (!passed[i]) reasons[i] = "identity failed";
      } catch (const std::exception& e) {
        reasons[i] = e.what();
      }
      if (!passed[i]) {
        reasons[i] = "case " + std::to_string(i) + " (p=" + std::to_string(c.params.p) +
                     ", r=" + std::to_string(c.params.r) + "): " + reasons[i];
      }
    });
    PropertyResult res{.name = props[pi].name, .cases = cases, .failures = 0, .first_failure = {}};
    for (std::size_t i = 0; i < cases; ++i) {
      if (passed[i]) continue;
      if (res.failures++ == 0) res.first_failure = reasons[i];
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace steenrodlab

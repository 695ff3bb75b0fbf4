#pragma once

// Seeded random generators and the algebraic property battery.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "steenrodlab/graded.hpp"
#include "steenrodlab/symplectic.hpp"

namespace steenrodlab {

// Uniform draw from [0, n) as rng() % n, so results do not depend on the
// standard library's distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n);

// A homogeneous element of degree d with at most max_terms terms.
GradedElement random_homogeneous(AlgebraParams params, std::uint64_t d, std::size_t max_terms,
                                 std::mt19937_64& rng);
// A polynomial-subring element of topological degree d (d even).
GradedElement random_polynomial(AlgebraParams params, std::uint64_t d, std::size_t max_terms,
                                std::mt19937_64& rng);
// An arbitrary (possibly inhomogeneous) element with terms of degree ≤ max_degree.
GradedElement random_element(AlgebraParams params, std::uint64_t max_degree, std::size_t max_terms,
                             std::mt19937_64& rng);
// A product of `length` random transvection generators.
SymplecticMatrix random_symplectic(std::uint32_t p, std::uint32_t r, std::size_t length,
                                   std::mt19937_64& rng);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when none failed

  bool ok() const noexcept { return failures == 0 && cases > 0; }
};

// Runs every property on `cases` seeded random inputs, cycling through
// (p, r) ∈ {(3,1), (3,2), (5,1)}.
std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases = 200);

}  // namespace steenrodlab

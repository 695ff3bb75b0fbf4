#pragma once

// The classes Y_k = Σ_i (ξ_i^{p^{k+1}} η_i − ξ_i η_i^{p^{k+1}}) and the search for
// polynomial relations among them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steenrodlab/graded.hpp"
#include "steenrodlab/independence.hpp"
#include "steenrodlab/steenrod.hpp"

namespace steenrodlab {

inline constexpr std::uint64_t kRelationExponentLimit = 1ull << 20;

struct YClass {
  AlgebraParams params;
  std::uint32_t k = 0;
  GradedElement element;
  std::uint64_t degree = 0;       // 2p^{k+1} + 2
  std::uint64_t chow_degree = 0;  // p^{k+1} + 1
};

// Throws Error(Budget) when p^{k+1} exceeds max_exponent.
YClass y_image(AlgebraParams params, std::uint32_t k,
               std::uint64_t max_exponent = kRelationExponentLimit);

struct ChainReport {
  bool ok = false;
  SteenrodWord word;
  GradedElement computed;
  GradedElement expected;
  // u with computed = u·expected, when such a unit exists.
  std::optional<std::uint32_t> unit_factor;
};

// Applies β P^{p^k} ... P^1 β to Σ a_i b_i and compares with y_image.
ChainReport verify_chain(AlgebraParams params, std::uint32_t k);

// Exponents (e_0, e_1, ...) of Y_0^{e_0} Y_1^{e_1} ...
using Pattern = std::vector<std::uint64_t>;

// "Y0^10,Y1^4,Y0^3*Y2". Throws ParseError on malformed input.
std::vector<Pattern> parse_patterns(std::string_view text);
std::string render_pattern(const Pattern& pattern);

// Π images[k]^{pattern[k]}. Throws Error(Parameter) if the pattern refers past
// the end of images and Error(Budget) if an exponent would exceed the limit.
GradedElement expand_pattern(std::span<const GradedElement> images, const Pattern& pattern,
                             std::uint64_t max_exponent = kRelationExponentLimit);

// Highest k referenced by any pattern, or nullopt when all are empty.
std::optional<std::size_t> max_class_index(std::span<const Pattern> patterns);

struct RelationSearchResult {
  std::vector<Pattern> patterns;
  std::uint64_t degree = 0;
  std::size_t monomial_count = 0;  // rows of the coefficient matrix
  std::size_t kernel_dim = 0;
  // Normalized so that the first nonzero coordinate is 1.
  std::vector<FpVector> kernel_vectors;
  bool paper_vector_in_kernel = false;  // the all-ones vector
};

// Kernel of the map c ↦ Σ_j c_j · pattern_j. Throws Error(Degree) if the
// expanded patterns are not homogeneous of one common degree.
RelationSearchResult relation_search(std::span<const GradedElement> images,
                                     std::span<const Pattern> patterns);

// Σ_j c_j · pattern_j, expanded from scratch.
GradedElement substitute(std::span<const GradedElement> images, std::span<const Pattern> patterns,
                         std::span<const std::uint32_t> coefficients);

// All exponent vectors e with Σ e_k·weights[k] = total, in lexicographically
// descending order.
std::vector<Pattern> patterns_of_weight(std::span<const std::uint64_t> weights, std::uint64_t total);

// Jacobian certificate for {Y_0, ..., Y_{k_max}} in all 2r variables.
IndependenceResult independence_check_y(AlgebraParams params, std::uint32_t k_max,
                                        const JacobianOptions& options = {});

// Checks ∂Y_k/∂ξ_j = −η_j^{p^{k+1}} and ∂Y_k/∂η_j = ξ_j^{p^{k+1}} for k ≤ k_max.
bool y_jacobian_matches_closed_form(AlgebraParams params, std::uint32_t k_max);

}  // namespace steenrodlab

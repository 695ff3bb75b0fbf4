#pragma once

// Jacobian criterion for algebraic independence over F_p: if the Jacobian of
// φ_1..φ_m (m ≤ n) has rank m over the function field, the φ_j are
// algebraically independent. The converse fails in positive characteristic
// (ξ^p has zero derivative), so a rank deficit is never reported as dependence.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steenrodlab/graded.hpp"

namespace steenrodlab {

using PolyMatrix = std::vector<std::vector<GradedElement>>;

enum class RankMethod { Auto, Symbolic, RandomEvaluation };
enum class Certification { Symbolic, RandomEvaluation };

std::string_view to_string(Certification c);

struct JacobianOptions {
  std::uint64_t seed = 0;
  std::size_t points = 8;
  // Auto: symbolic when the matrix is square of size ≤ 4, otherwise evaluation.
  RankMethod method = RankMethod::Auto;
};

struct JacobianReport {
  AlgebraParams params;
  std::vector<std::size_t> vars;
  PolyMatrix matrix;  // matrix[j][i] = ∂φ_j / ∂vars[i]
  std::size_t rank = 0;
  Certification certified_by = Certification::Symbolic;
  std::optional<GradedElement> determinant;  // symbolic square case

  // Random-evaluation metadata. Points live in F_{p^e}; each coordinate is a
  // coefficient vector over the basis 1, t, ..., t^{e-1}.
  std::uint64_t seed = 0;
  std::uint32_t extension_degree = 0;
  std::vector<std::uint32_t> field_modulus;
  std::vector<std::vector<std::vector<std::uint32_t>>> evaluation_points;
  std::vector<std::size_t> point_ranks;
};

// Variable names for vars indices: x1..xr, y1..yr.
std::string variable_name(AlgebraParams params, std::size_t v);
std::vector<std::size_t> all_variables(AlgebraParams params);

// Determinant of a square polynomial matrix by cofactor expansion.
GradedElement polynomial_determinant(const PolyMatrix& m);

// Throws Error(Domain) if a polynomial has exterior terms.
JacobianReport jacobian(std::span<const GradedElement> polys, std::span<const std::size_t> vars,
                        const JacobianOptions& options = {});

enum class Verdict { Independent, Inconclusive, Dependent };
std::string_view to_string(Verdict v);

struct IndependenceResult {
  Verdict verdict = Verdict::Inconclusive;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t rank = 0;
  std::optional<JacobianReport> report;  // absent when m > n

  bool independent() const noexcept { return verdict == Verdict::Independent; }
};

// Independent iff the Jacobian has rank m. More polynomials than variables is
// reported as Dependent; any other rank deficit is Inconclusive.
IndependenceResult certify_independence(std::span<const GradedElement> polys,
                                        std::span<const std::size_t> vars,
                                        const JacobianOptions& options = {});

// Rows i = 1..2r: (η_1^{p^i} .. η_r^{p^i}, ξ_1^{p^i} .. ξ_r^{p^i}).
PolyMatrix moore_matrix(AlgebraParams params);

struct DicksonReport {
  bool ok = false;
  Monomial distinguished;         // Π ξ_i^{p^i} · Π η_i^{p^{r+i}}
  std::uint32_t coefficient = 0;  // as an F_p residue
  std::size_t expansion_terms = 0;
  GradedElement determinant;
};

// Expands the Moore determinant permutation by permutation and checks that
// the distinguished monomial occurs with a unit coefficient. Throws
// Error(Budget) when (2r)! exceeds the cap.
DicksonReport dickson_monomial_check(AlgebraParams params, std::uint64_t cap = 1'000'000);

}  // namespace steenrodlab

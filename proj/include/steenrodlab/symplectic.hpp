#pragma once

// Sp_{2r}(F_p) acting on H*(BV^{2r}; F_p).
//
// Ω = (0 I_r; -I_r 0) in the basis a_1..a_r, b_1..b_r. A matrix g acts on
// H^1 by columns (g·a_j = Σ_i g_{ij} x_i where x = a_1..a_r, b_1..b_r), on
// ξ, η by commuting with β, and multiplicatively on everything else.

#include <cstdint>
#include <span>
#include <vector>

#include "steenrodlab/extraspecial.hpp"
#include "steenrodlab/fp.hpp"
#include "steenrodlab/graded.hpp"

namespace steenrodlab {

FpMatrix symplectic_form(std::uint32_t p, std::uint32_t r);
bool is_symplectic(const FpMatrix& m);

class SymplecticMatrix {
 public:
  // Throws Error(Domain) unless m^T Ω m = Ω.
  explicit SymplecticMatrix(FpMatrix m);

  const FpMatrix& matrix() const noexcept { return m_; }
  std::uint32_t p() const noexcept { return m_.modulus(); }
  std::uint32_t r() const noexcept { return static_cast<std::uint32_t>(m_.rows() / 2); }

  SymplecticMatrix operator*(const SymplecticMatrix& o) const;
  bool operator==(const SymplecticMatrix&) const = default;

 private:
  FpMatrix m_;
};

GradedElement act(const SymplecticMatrix& g, const GradedElement& x);

// p^{r²} Π_{i=1}^r (p^{2i} - 1)
std::uint64_t symplectic_group_order(std::uint32_t p, std::uint32_t r);

// Transvections u ↦ u + ⟨u, v⟩v for v in {e_i, f_i} ∪ {e_i + f_j}.
std::vector<SymplecticMatrix> symplectic_generators(std::uint32_t p, std::uint32_t r);

// Closure of the generators under multiplication. Throws Error(Budget) if more
// than `cap` elements appear.
std::vector<SymplecticMatrix> enumerate_group(std::span<const SymplecticMatrix> gens,
                                              std::uint64_t cap = kDefaultEnumerationCap);

struct GenerationCertificate {
  std::uint64_t expected_order = 0;
  std::uint64_t reached_order = 0;
  bool ok() const noexcept { return expected_order == reached_order; }
};

// Enumerates the closure of symplectic_generators(p, r) and compares with the
// group order. Throws Error(Budget) when the group is larger than the cap.
GenerationCertificate certify_generators(std::uint32_t p, std::uint32_t r,
                                         std::uint64_t cap = kDefaultEnumerationCap);

enum class InvariantSpace {
  Full,       // all of H^d(BV^{2r}; F_p)
  Exterior,   // Λ^d only
  Integral3,  // H^3(BV^{2r}; Z) ≅ H^2(F_p)/span(ξ_i, η_i), reported through β
};

// Basis of {x in the chosen space of degree d : g·x = x for every g}, from the
// kernel of the stacked systems (g - id). Integral3 requires d = 3.
std::vector<GradedElement> invariant_subspace(AlgebraParams params, std::uint64_t d,
                                              std::span<const SymplecticMatrix> group_elements,
                                              InvariantSpace space = InvariantSpace::Full);

}  // namespace steenrodlab

#pragma once

// The extraspecial group p_+^{1+2r} of exponent p, generated by z, e_i, f_i with
// z central, [e_i, f_i] = z, and all other pairs of generators commuting.
// Elements are kept in the normal form z^c e_1^{α_1}..e_r^{α_r} f_1^{β_1}..f_r^{β_r}.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace steenrodlab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct ExtraspecialElement {
  std::uint32_t c = 0;
  std::vector<std::uint32_t> alpha;
  std::vector<std::uint32_t> beta;

  bool operator==(const ExtraspecialElement&) const = default;
};

class ExtraspecialGroup {
 public:
  ExtraspecialGroup(std::uint64_t p, std::uint64_t r);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t r() const noexcept { return r_; }
  // p^{1+2r}
  std::uint64_t order() const noexcept { return order_; }

  ExtraspecialElement identity() const;
  ExtraspecialElement z() const;
  ExtraspecialElement e(std::uint32_t i) const;  // 1-indexed
  ExtraspecialElement f(std::uint32_t i) const;

  ExtraspecialElement mul(const ExtraspecialElement& g, const ExtraspecialElement& h) const;
  ExtraspecialElement inverse(const ExtraspecialElement& g) const;
  ExtraspecialElement power(const ExtraspecialElement& g, std::uint64_t n) const;
  // g h g^{-1} h^{-1}
  ExtraspecialElement commutator(const ExtraspecialElement& g, const ExtraspecialElement& h) const;
  std::uint64_t element_order(const ExtraspecialElement& g) const;
  bool is_identity(const ExtraspecialElement& g) const;

  // Bijection with [0, order()): base-p digits c, α_1..α_r, β_1..β_r.
  std::uint64_t index_of(const ExtraspecialElement& g) const;
  ExtraspecialElement element_at(std::uint64_t index) const;

  // Throws Error(Budget) when order() exceeds the cap.
  std::vector<ExtraspecialElement> elements(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Words over z, e<i>, f<i> joined by '*', each optionally raised to '^n'.
  ExtraspecialElement parse(std::string_view text) const;
  std::string render(const ExtraspecialElement& g) const;

  void check(const ExtraspecialElement& g) const;

 private:
  std::uint32_t p_;
  std::uint32_t r_;
  std::uint64_t order_;
};

// Finite abelian p-group as a list of invariant factors (descending).
struct AbelianStructure {
  std::vector<std::uint64_t> invariant_factors;

  std::uint64_t order() const;
  // True when every invariant factor equals q; then the group is (Z/q)^rank.
  bool is_homogeneous(std::uint64_t q) const;
  std::size_t rank() const noexcept { return invariant_factors.size(); }
  std::string render() const;  // e.g. "(Z/3)^2" or "Z/9 + Z/3"
};

// Elements commuting with every generator, found by enumeration.
std::vector<ExtraspecialElement> center(const ExtraspecialGroup& g,
                                        std::uint64_t cap = kDefaultEnumerationCap);

// Subgroup generated by all commutators, as a membership table indexed by index_of.
std::vector<bool> commutator_subgroup(const ExtraspecialGroup& g,
                                      std::uint64_t cap = kDefaultEnumerationCap);

// G / [G, G] computed by enumerating commutators and counting, for each j, the
// elements whose p^j-th power lands in the commutator subgroup.
AbelianStructure abelianization(const ExtraspecialGroup& g,
                                std::uint64_t cap = kDefaultEnumerationCap);

// Kernel of the quotient map to V^{2r} (forgetting c), found by enumeration.
std::vector<ExtraspecialElement> quotient_kernel(const ExtraspecialGroup& g,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace steenrodlab

#pragma once

// H*(BV^{2r}; F_p) = Λ(a_1..a_r, b_1..b_r) ⊗ F_p[ξ_1..ξ_r, η_1..η_r].
//
// |a_i| = |b_i| = 1 and |ξ_i| = |η_i| = 2. Exterior generators occupy positions
// 0..2r-1 in the order a_1..a_r, b_1..b_r; polynomial variables use the same
// indexing for ξ_1..ξ_r, η_1..η_r. The integral classes ξ_i = δ(a_i),
// η_i = δ(b_i) are carried by their mod-p reductions.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steenrodlab/fp.hpp"

namespace steenrodlab {

inline constexpr std::uint32_t kMaxRank = 8;
inline constexpr std::size_t kMaxVars = 2 * kMaxRank;
// Hard ceiling on any single exponent; products exceeding it raise Error(Budget).
inline constexpr std::uint64_t kExponentLimit = 1ull << 30;

struct AlgebraParams {
  std::uint32_t p = 3;
  std::uint32_t r = 1;

  // Validates p (odd prime < 2^16) and 1 <= r <= kMaxRank.
  static AlgebraParams make(std::uint64_t p, std::uint64_t r);
  std::size_t num_vars() const noexcept { return 2 * r; }
  bool operator==(const AlgebraParams&) const = default;
};

struct Monomial {
  std::uint32_t exterior = 0;                   // bit k set <=> exterior generator k present
  std::array<std::uint32_t, kMaxVars> powers{};  // exponents of ξ_1..ξ_r, η_1..η_r

  std::uint64_t exterior_degree() const noexcept;
  std::uint64_t polynomial_degree() const noexcept;  // Σ powers
  std::uint64_t degree() const noexcept { return exterior_degree() + 2 * polynomial_degree(); }
  bool is_polynomial() const noexcept { return exterior == 0; }

  bool operator==(const Monomial&) const = default;
};

// Canonical order: exterior flags (a_1 most significant) descending, then the
// exponent vector lexicographically descending. `operator()(x, y)` is true when x
// is listed before y.
struct CanonicalOrder {
  bool operator()(const Monomial& x, const Monomial& y) const noexcept;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// x*y with the Koszul sign. Returns 0 when an exterior generator repeats,
// otherwise ±1 with the product monomial written to `out`.
int multiply(const Monomial& x, const Monomial& y, Monomial& out);

class GradedElement {
 public:
  using Terms = std::map<Monomial, std::uint32_t, CanonicalOrder>;

  explicit GradedElement(AlgebraParams params) : params_(params) {}

  static GradedElement zero(AlgebraParams params) { return GradedElement(params); }
  static GradedElement scalar(AlgebraParams params, std::int64_t c);
  static GradedElement monomial(AlgebraParams params, const Monomial& m, std::int64_t c = 1);
  // Generators, 1-indexed as in the text notation.
  static GradedElement a(AlgebraParams params, std::uint32_t i);
  static GradedElement b(AlgebraParams params, std::uint32_t i);
  static GradedElement xi(AlgebraParams params, std::uint32_t i);
  static GradedElement eta(AlgebraParams params, std::uint32_t i);

  const AlgebraParams& params() const noexcept { return params_; }
  std::uint32_t p() const noexcept { return params_.p; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::uint32_t coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, std::uint32_t c);

  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element; nullopt otherwise.
  std::optional<std::uint64_t> degree() const;
  bool in_polynomial_subring() const;

  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement operator-() const;
  GradedElement operator*(const GradedElement& o) const;
  GradedElement scaled(std::uint32_t c) const;
  GradedElement pow(std::uint64_t n) const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);

  bool operator==(const GradedElement& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const GradedElement& o) const;

  AlgebraParams params_;
  Terms terms_;
};

GradedElement mul(const GradedElement& x, const GradedElement& y);

// All monomials of total degree d, in canonical order.
std::vector<Monomial> basis_of_degree(AlgebraParams params, std::uint64_t d);
// Monomials of Λ^d only (no polynomial part).
std::vector<Monomial> exterior_basis_of_degree(AlgebraParams params, std::uint64_t d);

// ∂/∂v on the polynomial subring; v indexes ξ_1..ξ_r, η_1..η_r as 0..2r-1.
// Throws Error(Domain) if any term has an exterior factor.
GradedElement partial_derivative(const GradedElement& x, std::size_t v);

// Evaluate a polynomial-subring element at a point of F_p^{2r}.
std::uint32_t evaluate(const GradedElement& x, std::span<const std::uint32_t> point);

enum class Notation { Ascii, Unicode };

std::string render(const Monomial& m, AlgebraParams params, Notation notation = Notation::Ascii);
std::string render(const GradedElement& x, Notation notation = Notation::Ascii);

// Coordinates of x in the given monomial list. Throws Error(Domain) if x has a
// term outside the list.
FpVector coordinates(const GradedElement& x, const std::vector<Monomial>& basis);
GradedElement from_coordinates(AlgebraParams params, const std::vector<Monomial>& basis,
                               std::span<const std::uint32_t> coords);

}  // namespace steenrodlab

#pragma once

// F_{p^e} = F_p[t]/(m(t)) for a monic irreducible m of degree e. Used only to
// pick evaluation points for probabilistic rank certificates: over F_p itself
// every Frobenius-twisted determinant (Moore, Dickson) vanishes identically.

#include <cstdint>
#include <random>
#include <vector>

namespace steenrodlab::detail {

using ExtElem = std::vector<std::uint32_t>;  // coefficients of 1, t, ..., t^{e-1}

class ExtensionField {
 public:
  // Smallest degree e with p^e >= min_size, modulus the lexicographically first
  // monic irreducible polynomial of that degree.
  static ExtensionField with_min_size(std::uint32_t p, std::uint64_t min_size);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  // Low-to-high coefficients, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  ExtElem zero() const { return ExtElem(e_, 0); }
  ExtElem from_base(std::uint32_t c) const;
  ExtElem random(std::mt19937_64& rng) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem pow(const ExtElem& a, std::uint64_t n) const;
  ExtElem inv(const ExtElem& a) const;
  bool is_zero(const ExtElem& a) const;

  // Rank of a dense matrix over this field (destroys its argument).
  std::size_t rank(std::vector<std::vector<ExtElem>> m) const;

 private:
  ExtensionField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t e_;
  std::vector<std::uint32_t> modulus_;
};

// Rabin's test over F_p; f is given low-to-high and must be monic.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);

}  // namespace steenrodlab::detail

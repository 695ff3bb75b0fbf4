#pragma once

// Bockstein and reduced power operations on H*(BV^{2r}; F_p).
//
// On generators: β(a_i) = ξ_i, β(b_i) = η_i, β vanishes on ξ_i, η_i, and β is a
// graded derivation. P^0 = id, P^i(a_i) = P^i(b_i) = 0 for i > 0, P^1(ξ) = ξ^p
// and P^i(ξ) = 0 for i > 1; the Cartan formula extends P^i to products.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "steenrodlab/graded.hpp"

namespace steenrodlab {

// Binomial coefficient C(n, k) mod p via Lucas' theorem.
std::uint32_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p);

GradedElement bockstein(const GradedElement& x);

GradedElement power_op(std::uint64_t i, const GradedElement& x);

// P = Σ_i P^i; finite because P^i vanishes once 2i exceeds the degree.
GradedElement total_power(const GradedElement& x);

// Drops the calling thread's Cartan memo table.
void clear_power_cache();

struct SteenrodLetter {
  enum class Kind { Beta, Power };
  Kind kind = Kind::Beta;
  std::uint64_t index = 0;  // i of P^i; unused for Beta

  static SteenrodLetter beta() { return {Kind::Beta, 0}; }
  static SteenrodLetter power(std::uint64_t i) { return {Kind::Power, i}; }
  std::uint64_t degree_shift(std::uint32_t p) const {
    return kind == Kind::Beta ? 1 : 2 * index * (p - 1);
  }
  bool operator==(const SteenrodLetter&) const = default;
};

// A composite operation, letters stored as written (outermost first) and
// applied right to left.
class SteenrodWord {
 public:
  SteenrodWord() = default;
  // P^0 letters are dropped.
  explicit SteenrodWord(std::vector<SteenrodLetter> letters);

  // "b P9 P3 P1": whitespace separated, "b" for β and "P<i>" for P^i.
  static SteenrodWord parse(std::string_view text);

  // β P^{p^k} ... P^p P^1 β, the word producing y_{p,k} from Σ a_i b_i.
  static SteenrodWord y_chain(std::uint32_t p, std::uint32_t k);

  const std::vector<SteenrodLetter>& letters() const noexcept { return letters_; }
  std::uint64_t degree_shift(std::uint32_t p) const;
  std::string render() const;

  bool operator==(const SteenrodWord&) const = default;

 private:
  std::vector<SteenrodLetter> letters_;
};

GradedElement apply_word(const SteenrodWord& w, const GradedElement& x);

}  // namespace steenrodlab

#pragma once

// Exact matrices over Z[ω] = Z[x]/(Φ_p(x)), ω = e^{2πi/p}, and the faithful
// representation θ̄ : p_+^{1+2r} → U_{p^r}.

#include <cstdint>
#include <string>
#include <vector>

#include "steenrodlab/extraspecial.hpp"

namespace steenrodlab {

// Element of Z[x]/(Φ_p), stored with degree < p - 1.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::uint32_t p);
  static CyclotomicInt integer(std::uint32_t p, std::int64_t n);
  static CyclotomicInt root_power(std::uint32_t p, std::uint64_t k);  // ω^k

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;

  bool operator==(const CyclotomicInt&) const = default;

  std::string render() const;  // polynomial in x, e.g. "x^2 + 1"

 private:
  // Takes a vector of length p (coefficients mod x^p - 1) and reduces mod Φ_p.
  void assign_reduced(std::vector<std::int64_t> full);

  std::uint32_t p_;
  std::vector<std::int64_t> coeffs_;
};

class CyclotomicMatrix {
 public:
  CyclotomicMatrix(std::size_t dim, std::uint32_t p);
  static CyclotomicMatrix identity(std::size_t dim, std::uint32_t p);

  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t p() const noexcept { return p_; }
  const CyclotomicInt& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  CyclotomicInt& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  CyclotomicMatrix operator*(const CyclotomicMatrix& o) const;
  CyclotomicMatrix scaled(const CyclotomicInt& s) const;
  CyclotomicMatrix pow(std::uint64_t n) const;

  bool operator==(const CyclotomicMatrix&) const = default;

 private:
  std::size_t dim_;
  std::uint32_t p_;
  std::vector<CyclotomicInt> data_;
};

// Kronecker product; a occupies the more significant index.
CyclotomicMatrix kronecker(const CyclotomicMatrix& a, const CyclotomicMatrix& b);

// r = 1 images: θ̄(z) = ωI_p, θ̄(e) = diag(ω, ω², ..., ω^{p-1}, 1), θ̄(f) the
// cyclic shift with θ̄(f)_{i,j} = 1 iff i ≡ j + 1 (mod p).
CyclotomicMatrix theta_z_single(std::uint32_t p);
CyclotomicMatrix theta_e_single(std::uint32_t p);
CyclotomicMatrix theta_f_single(std::uint32_t p);

// A single-slot matrix placed in tensor slot `slot` (1-indexed, slot 1 most
// significant) of the r-fold tensor product, identity elsewhere.
CyclotomicMatrix tensor_slot(const CyclotomicMatrix& m, std::uint32_t r, std::uint32_t slot);

CyclotomicMatrix theta_bar(const ExtraspecialGroup& g, const ExtraspecialElement& x);

struct RelationCheck {
  std::string name;
  bool holds = false;
};

// Checks every defining relation of p_+^{1+2r} on the θ̄ images, the exponent-p
// relations, and that θ̄(z^{(i)}) does not depend on the slot i.
std::vector<RelationCheck> check_theta_relations(const ExtraspecialGroup& g);

}  // namespace steenrodlab

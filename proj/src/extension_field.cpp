#include "extension_field.hpp"

#include <algorithm>

#include "steenrodlab/error.hpp"
#include "steenrodlab/fp.hpp"

namespace steenrodlab::detail {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = fp::inv(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t f = fp::mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = fp::sub(a[shift + i], fp::mul(f, m[i], p), p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = fp::add(out[i + j], fp::mul(a[i], b[j], p), p);
  }
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (n > 0) {
    if (n & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    n >>= 1;
  }
  return result;
}

// x^{p^k} mod m by k successive p-th powers.
Poly frobenius_power(std::uint32_t k, const Poly& m, std::uint32_t p) {
  Poly x{0, 1};
  x = poly_mod(x, m, p);
  for (std::uint32_t i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
  return x;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly sub_x(Poly a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = fp::sub(a[1], 1, p);
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const auto n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  // x^{p^n} ≡ x (mod f) ...
  if (!sub_x(frobenius_power(n, f, p), p).empty()) return false;
  // ... and gcd(x^{p^{n/q}} - x, f) = 1 for every prime q | n.
  for (std::uint32_t q = 2; q <= n; ++q) {
    if (n % q != 0 || !is_prime(q)) continue;
    Poly g = poly_gcd(f, sub_x(frobenius_power(n / q, f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

ExtensionField::ExtensionField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), e_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {}

ExtensionField ExtensionField::with_min_size(std::uint32_t p, std::uint64_t min_size) {
  std::uint32_t e = 1;
  for (std::uint64_t size = p; size < min_size; size *= p) ++e;
  // Enumerate monic candidates t^e + c_{e-1} t^{e-1} + ... + c_0 in lexicographic
  // order of (c_0, ..., c_{e-1}); c_0 = 0 is skipped since t would divide them.
  Poly f(e + 1, 0);
  f[e] = 1;
  for (;;) {
    if (f[0] != 0 && is_irreducible(f, p)) return ExtensionField(p, f);
    std::size_t k = 0;
    while (k < e) {
      if (++f[k] < p) break;
      f[k] = 0;
      ++k;
    }
    if (k == e) throw Error(ErrorCode::Parameter, "no irreducible polynomial found");
  }
}

ExtElem ExtensionField::from_base(std::uint32_t c) const {
  ExtElem a(e_, 0);
  a[0] = c % p_;
  return a;
}

ExtElem ExtensionField::random(std::mt19937_64& rng) const {
  ExtElem a(e_, 0);
  for (auto& c : a) c = static_cast<std::uint32_t>(rng() % p_);
  return a;
}

ExtElem ExtensionField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) out[i] = fp::add(a[i], b[i], p_);
  return out;
}

ExtElem ExtensionField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) out[i] = fp::sub(a[i], b[i], p_);
  return out;
}

ExtElem ExtensionField::mul(const ExtElem& a, const ExtElem& b) const {
  Poly r = poly_mulmod(a, b, modulus_, p_);
  r.resize(e_, 0);
  return r;
}

ExtElem ExtensionField::pow(const ExtElem& a, std::uint64_t n) const {
  ExtElem result = from_base(1);
  ExtElem base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

ExtElem ExtensionField::inv(const ExtElem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_{p^e}");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e_; ++i) q *= p_;
  return pow(a, q - 2);
}

bool ExtensionField::is_zero(const ExtElem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

std::size_t ExtensionField::rank(std::vector<std::vector<ExtElem>> m) const {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = prow;
    while (sel < rows && is_zero(m[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[prow]);
    const ExtElem pinv = inv(m[prow][c]);
    for (std::size_t i = prow + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      const ExtElem f = mul(m[i][c], pinv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[prow][j]));
    }
    ++prow;
  }
  return prow;
}

}  // namespace steenrodlab::detail

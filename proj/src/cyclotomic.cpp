#include "steenrodlab/cyclotomic.hpp"

#include <sstream>

#include "steenrodlab/error.hpp"

namespace steenrodlab {

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {}

CyclotomicInt CyclotomicInt::integer(std::uint32_t p, std::int64_t n) {
  CyclotomicInt c(p);
  c.coeffs_[0] = n;
  return c;
}

CyclotomicInt CyclotomicInt::root_power(std::uint32_t p, std::uint64_t k) {
  std::vector<std::int64_t> full(p, 0);
  full[k % p] = 1;
  CyclotomicInt c(p);
  c.assign_reduced(std::move(full));
  return c;
}

void CyclotomicInt::assign_reduced(std::vector<std::int64_t> full) {
  // Φ_p = 1 + x + ... + x^{p-1} vanishes, so subtract top·Φ_p.
  const std::int64_t top = full[p_ - 1];
  for (std::uint32_t k = 0; k + 1 < p_; ++k) coeffs_[k] = full[k] - top;
}

bool CyclotomicInt::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  CyclotomicInt out = *this;
  for (std::uint32_t k = 0; k + 1 < p_; ++k) out.coeffs_[k] += o.coeffs_[k];
  return out;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  CyclotomicInt out = *this;
  for (std::uint32_t k = 0; k + 1 < p_; ++k) out.coeffs_[k] -= o.coeffs_[k];
  return out;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (o.p_ != p_) throw Error(ErrorCode::Parameter, "cyclotomic rings of different p");
  std::vector<std::int64_t> full(p_, 0);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p_; ++j) {
      if (o.coeffs_[j] == 0) continue;
      full[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
  }
  CyclotomicInt out(p_);
  out.assign_reduced(std::move(full));
  return out;
}

std::string CyclotomicInt::render() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t k = p_ - 1; k-- > 0;) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------

CyclotomicMatrix::CyclotomicMatrix(std::size_t dim, std::uint32_t p)
    : dim_(dim), p_(p), data_(dim * dim, CyclotomicInt(p)) {}

CyclotomicMatrix CyclotomicMatrix::identity(std::size_t dim, std::uint32_t p) {
  CyclotomicMatrix m(dim, p);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = CyclotomicInt::integer(p, 1);
  return m;
}

CyclotomicMatrix CyclotomicMatrix::operator*(const CyclotomicMatrix& o) const {
  if (dim_ != o.dim_ || p_ != o.p_) throw Error(ErrorCode::Shape, "cyclotomic matrix shape mismatch");
  CyclotomicMatrix out(dim_, p_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto& b = o(k, j);
        if (b.is_zero()) continue;
        out(i, j) = out(i, j) + a * b;
      }
    }
  }
  return out;
}

CyclotomicMatrix CyclotomicMatrix::scaled(const CyclotomicInt& s) const {
  CyclotomicMatrix out = *this;
  for (auto& v : out.data_) v = v * s;
  return out;
}

CyclotomicMatrix CyclotomicMatrix::pow(std::uint64_t n) const {
  CyclotomicMatrix result = identity(dim_, p_);
  CyclotomicMatrix base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

CyclotomicMatrix kronecker(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  if (a.p() != b.p()) throw Error(ErrorCode::Parameter, "kronecker product of different p");
  const std::size_t n = a.dim(), m = b.dim();
  CyclotomicMatrix out(n * m, a.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
    }
  return out;
}

CyclotomicMatrix theta_z_single(std::uint32_t p) {
  return CyclotomicMatrix::identity(p, p).scaled(CyclotomicInt::root_power(p, 1));
}

CyclotomicMatrix theta_e_single(std::uint32_t p) {
  CyclotomicMatrix m(p, p);
  for (std::uint32_t j = 0; j < p; ++j) m(j, j) = CyclotomicInt::root_power(p, j + 1);
  return m;
}

CyclotomicMatrix theta_f_single(std::uint32_t p) {
  CyclotomicMatrix m(p, p);
  for (std::uint32_t j = 0; j < p; ++j) m((j + 1) % p, j) = CyclotomicInt::integer(p, 1);
  return m;
}

CyclotomicMatrix tensor_slot(const CyclotomicMatrix& m, std::uint32_t r, std::uint32_t slot) {
  const std::uint32_t p = m.p();
  CyclotomicMatrix out = slot == 1 ? m : CyclotomicMatrix::identity(m.dim(), p);
  for (std::uint32_t s = 2; s <= r; ++s) {
    out = kronecker(out, s == slot ? m : CyclotomicMatrix::identity(m.dim(), p));
  }
  return out;
}

CyclotomicMatrix theta_bar(const ExtraspecialGroup& g, const ExtraspecialElement& x) {
  g.check(x);
  const std::uint32_t p = g.p(), r = g.r();
  std::size_t dim = 1;
  for (std::uint32_t k = 0; k < r; ++k) dim *= p;
  CyclotomicMatrix out =
      CyclotomicMatrix::identity(dim, p).scaled(CyclotomicInt::root_power(p, x.c));
  const auto e1 = theta_e_single(p);
  const auto f1 = theta_f_single(p);
  for (std::uint32_t i = 0; i < r; ++i) {
    if (x.alpha[i]) out = out * tensor_slot(e1.pow(x.alpha[i]), r, i + 1);
  }
  for (std::uint32_t i = 0; i < r; ++i) {
    if (x.beta[i]) out = out * tensor_slot(f1.pow(x.beta[i]), r, i + 1);
  }
  return out;
}

std::vector<RelationCheck> check_theta_relations(const ExtraspecialGroup& g) {
  const std::uint32_t p = g.p(), r = g.r();
  std::vector<CyclotomicMatrix> z_slots, e, f;
  for (std::uint32_t i = 1; i <= r; ++i) {
    z_slots.push_back(tensor_slot(theta_z_single(p), r, i));
    e.push_back(tensor_slot(theta_e_single(p), r, i));
    f.push_back(tensor_slot(theta_f_single(p), r, i));
  }
  const auto& z = z_slots.front();
  const auto id = CyclotomicMatrix::identity(z.dim(), p);
  // Inverses as (p-1)-th powers; valid once the p-th power relations hold.
  auto inv = [p](const CyclotomicMatrix& m) { return m.pow(p - 1); };
  auto comm = [&](const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
    return a * b * inv(a) * inv(b);
  };
  const auto z_inv = inv(z);

  std::vector<RelationCheck> out;
  auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

  add("z^p", z.pow(p) == id);
  for (std::uint32_t i = 0; i < r; ++i) {
    const auto si = std::to_string(i + 1);
    add("z^(" + si + ") = z^(1)", z_slots[i] == z);
    add("theta(z^(" + si + ")) = x*I", z_slots[i] == id.scaled(CyclotomicInt::root_power(p, 1)));
    add("e" + si + "^p", e[i].pow(p) == id);
    add("f" + si + "^p", f[i].pow(p) == id);
    add("[e" + si + ",z]", comm(e[i], z) == id);
    add("[f" + si + ",z]", comm(f[i], z) == id);
    add("[e" + si + ",f" + si + "]z^-1", comm(e[i], f[i]) * z_inv == id);
    for (std::uint32_t j = 0; j < r; ++j) {
      if (j == i) continue;
      const auto sj = std::to_string(j + 1);
      if (i < j) {
        add("[e" + si + ",e" + sj + "]", comm(e[i], e[j]) == id);
        add("[f" + si + ",f" + sj + "]", comm(f[i], f[j]) == id);
      }
      add("[e" + si + ",f" + sj + "]", comm(e[i], f[j]) == id);
    }
  }
  return out;
}

}  // namespace steenrodlab

#include "steenrodlab/fp.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "steenrodlab/error.hpp"

namespace steenrodlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::Shape: return "shape_error";
    case ErrorCode::Parameter: return "parameter_error";
    case ErrorCode::InvalidPrime: return "invalid_prime";
    case ErrorCode::Domain: return "domain_error";
    case ErrorCode::Degree: return "degree_error";
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::Budget: return "budget_exceeded";
    case ErrorCode::Certification: return "certification_failed";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p >= kMaxPrime || p == 2 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidPrime,
                "p = " + std::to_string(p) + " is not an odd prime below 65536");
  }
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  std::uint32_t base = a % p;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

}  // namespace fp

FpScalar::FpScalar(std::int64_t value, std::uint32_t p) : value_(fp::reduce(value, p)), p_(p) {}

void FpScalar::check_same(FpScalar o) const {
  if (o.p_ != p_) {
    throw Error(ErrorCode::Parameter, "mixed moduli " + std::to_string(p_) + " and " +
                                          std::to_string(o.p_));
  }
}

FpScalar FpScalar::operator+(FpScalar o) const {
  check_same(o);
  return {fp::add(value_, o.value_, p_), p_};
}
FpScalar FpScalar::operator-(FpScalar o) const {
  check_same(o);
  return {fp::sub(value_, o.value_, p_), p_};
}
FpScalar FpScalar::operator*(FpScalar o) const {
  check_same(o);
  return {fp::mul(value_, o.value_, p_), p_};
}
FpScalar FpScalar::operator/(FpScalar o) const { return *this * fp_inverse(o); }
FpScalar FpScalar::operator-() const { return {fp::neg(value_, p_), p_}; }
FpScalar FpScalar::pow(std::uint64_t e) const { return {fp::pow(value_, e, p_), p_}; }

FpScalar fp_inverse(FpScalar a) { return {fp::inv(a.value(), a.modulus()), a.modulus()}; }

// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(std::uint32_t p,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), p_(p) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::Shape, "ragged matrix literal");
    for (std::int64_t v : r) data_.push_back(fp::reduce(v, p));
  }
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::Shape, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw Error(ErrorCode::Shape, "matrix product shape mismatch");
  FpMatrix out(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        auto& c = out.data_[i * o.cols_ + j];
        c = fp::add(c, fp::mul(a, o(k, j), p_), p_);
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) {
    throw Error(ErrorCode::Shape, "matrix sum shape mismatch");
  }
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fp::add(data_[i], o.data_[i], p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) {
    throw Error(ErrorCode::Shape, "matrix difference shape mismatch");
  }
  FpMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = fp::sub(data_[i], o.data_[i], p_);
  return out;
}

FpVector FpMatrix::operator*(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::Shape, "matrix-vector shape mismatch");
  FpVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
      if (acc >= (1ull << 62)) acc %= p_;
    }
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

// ---------------------------------------------------------------------------

namespace {

// In-place Gauss-Jordan; returns pivot columns and the parity of row swaps.
std::pair<std::vector<std::size_t>, bool> eliminate(FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow) {
      std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(prow).begin());
      odd_swaps = !odd_swaps;
    }
    auto pr = m.row(prow);
    const std::uint32_t scale = fp::inv(pr[c], p);
    for (auto& v : pr) v = fp::mul(v, scale, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == prow) continue;
      auto ri = m.row(i);
      const std::uint32_t f = ri[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) ri[j] = fp::sub(ri[j], fp::mul(f, pr[j], p), p);
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(pivots), odd_swaps};
}

std::vector<FpVector> kernel_from_rref(const std::vector<FpVector>& rows,
                                       const std::vector<std::size_t>& pivots, std::size_t cols,
                                       std::uint32_t p) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FpVector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    FpVector v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = fp::neg(rows[i][f], p);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

EchelonForm row_reduce(const FpMatrix& m) {
  FpMatrix r = m;
  auto [pivots, odd] = eliminate(r);
  (void)odd;
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivot_cols.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  auto ech = row_reduce(m);
  std::vector<FpVector> rows;
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) {
    auto r = ech.reduced.row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return kernel_from_rref(rows, ech.pivot_cols, m.cols(), m.modulus());
}

FpScalar det(const FpMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::Shape, "determinant of a " + std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()) + " matrix");
  }
  const std::uint32_t p = m.modulus();
  // Plain forward elimination keeps the product of pivots.
  FpMatrix a = m;
  std::uint32_t d = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c) == 0) ++sel;
    if (sel == n) return {0, p};
    if (sel != c) {
      std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(c).begin());
      d = fp::neg(d, p);
    }
    const std::uint32_t piv = a(c, c);
    d = fp::mul(d, piv, p);
    const std::uint32_t pinv = fp::inv(piv, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      const std::uint32_t f = fp::mul(a(i, c), pinv, p);
      if (f == 0) continue;
      auto ri = a.row(i);
      auto rc = a.row(c);
      for (std::size_t j = c; j < n; ++j) ri[j] = fp::sub(ri[j], fp::mul(f, rc[j], p), p);
    }
  }
  return {d, p};
}

std::optional<FpVector> solve(const FpMatrix& m, std::span<const std::uint32_t> rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::Shape, "right-hand side length mismatch");
  FpMatrix aug(m.rows(), m.cols() + 1, m.modulus());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
    aug.set(i, m.cols(), rhs[i]);
  }
  auto ech = row_reduce(aug);
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols()) return std::nullopt;
  FpVector x(m.cols(), 0);
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) x[ech.pivot_cols[i]] = ech.reduced(i, m.cols());
  return x;
}

// ---------------------------------------------------------------------------

RowSpaceAccumulator::RowSpaceAccumulator(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p) {}

bool RowSpaceAccumulator::add_row(std::span<const std::uint32_t> row) {
  if (row.size() != cols_) throw Error(ErrorCode::Shape, "row length mismatch");
  if (basis_.size() == cols_) return false;
  FpVector v(row.begin(), row.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::uint32_t f = v[pivots_[i]];
    if (f == 0) continue;
    const auto& b = basis_[i];
    for (std::size_t j = 0; j < cols_; ++j) v[j] = fp::sub(v[j], fp::mul(f, b[j], p_), p_);
  }
  auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == v.end()) return false;
  const std::size_t c = static_cast<std::size_t>(lead - v.begin());
  const std::uint32_t scale = fp::inv(*lead, p_);
  for (auto& x : v) x = fp::mul(x, scale, p_);
  for (auto& b : basis_) {
    const std::uint32_t f = b[c];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) b[j] = fp::sub(b[j], fp::mul(f, v[j], p_), p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  basis_.insert(basis_.begin() + pos, std::move(v));
  return true;
}

std::vector<FpVector> RowSpaceAccumulator::kernel_basis() const {
  return kernel_from_rref(basis_, pivots_, cols_, p_);
}

}  // namespace steenrodlab

#pragma once

// Prime-field arithmetic and dense linear algebra over F_p.
//
// The modulus is a runtime value. Supported moduli are odd primes below 2^16,
// so a product of two reduced values always fits in 32 bits and sums of a few
// products fit comfortably in 64.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace steenrodlab {

inline constexpr std::uint32_t kMaxPrime = 1u << 16;

bool is_prime(std::uint64_t n);

// Throws Error(InvalidPrime) unless p is an odd prime below kMaxPrime.
void require_odd_prime(std::uint64_t p);

namespace fp {

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
// Throws Error(DivisionByZero) on a == 0.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

}  // namespace fp

class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator/(FpScalar o) const;
  FpScalar operator-() const;
  FpScalar pow(std::uint64_t e) const;

  bool operator==(const FpScalar&) const = default;

 private:
  void check_same(FpScalar o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

FpScalar fp_inverse(FpScalar a);

using FpVector = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  FpMatrix(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FpMatrix identity(std::size_t n, std::uint32_t p);
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = fp::reduce(v, p_); }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpVector operator*(std::span<const std::uint32_t> v) const;
  FpMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

struct EchelonForm {
  FpMatrix reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // ascending; pivot row i owns pivot_cols[i]
};

// Gauss-Jordan elimination. Pivot for each column is the first nonzero entry at or
// below the current pivot row, columns scanned left to right.
EchelonForm row_reduce(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

// Basis of ker M read off the reduced echelon form: one vector per free column,
// free columns ascending, with a 1 in that column.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

// Throws Error(Shape) for non-square input.
FpScalar det(const FpMatrix& m);

// Some x with Mx = rhs, or nullopt if the system is inconsistent.
std::optional<FpVector> solve(const FpMatrix& m, std::span<const std::uint32_t> rhs);

// Incrementally maintained reduced echelon basis of the row space spanned by
// the rows added so far. The final reduced form does not depend on the order in
// which rows were added, so the kernel basis it yields is canonical.
class RowSpaceAccumulator {
 public:
  RowSpaceAccumulator(std::size_t cols, std::uint32_t p);

  // Returns true when the row increased the rank.
  bool add_row(std::span<const std::uint32_t> row);

  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::vector<FpVector> kernel_basis() const;

 private:
  std::size_t cols_;
  std::uint32_t p_;
  // Kept sorted by pivot column.
  std::vector<std::size_t> pivots_;
  std::vector<FpVector> basis_;
};

}  // namespace steenrodlab

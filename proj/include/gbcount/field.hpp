#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gbcount/errors.hpp"

namespace gbcount {

/// A prime p with 2 <= p <= kMaxPrime. Primality is verified on construction.
class PrimeModulus {
 public:
  static constexpr std::uint32_t kMaxPrime = 257;

  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  /// Canonical residue of an arbitrary integer.
  std::uint32_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws DomainError on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p) noexcept;

class FieldElement {
 public:
  FieldElement(std::int64_t value, PrimeModulus modulus)
      : value_(modulus.reduce(value)), modulus_(modulus) {}

  std::uint32_t value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {modulus_.neg(value_), modulus_}; }
  FieldElement pow(std::uint64_t e) const { return {modulus_.pow(value_, e), modulus_}; }
  /// Multiplicative inverse; DomainError for zero.
  FieldElement inverse() const { return {modulus_.inv(value_), modulus_}; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void check_same(const FieldElement& o) const;

  std::uint32_t value_;
  PrimeModulus modulus_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul_inv(const FieldElement& a);

/// Dense row-major matrix over Z_p. Entries are kept as canonical residues.
class MatrixGF {
 public:
  MatrixGF(std::size_t rows, std::size_t cols, PrimeModulus modulus)
      : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}
  /// Builds from integer rows; every row must have the same length.
  static MatrixGF from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                            PrimeModulus modulus);
  static MatrixGF identity(std::size_t n, PrimeModulus modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  std::uint32_t raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set_raw(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v; }
  FieldElement at(std::size_t r, std::size_t c) const { return {raw(r, c), modulus_}; }
  void set(std::size_t r, std::size_t c, const FieldElement& v);

  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  MatrixGF transpose() const;
  MatrixGF operator*(const MatrixGF& o) const;

  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus modulus_;
  std::vector<std::uint32_t> data_;
};

struct RowReduction {
  MatrixGF rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivots are taken column by column, left to right,
/// using the first row (top to bottom) with a nonzero entry.
RowReduction row_reduce(MatrixGF m);

/// In-place elimination used by hot loops; returns the rank and pivot columns,
/// only looking for pivots in columns [0, pivot_limit).
std::size_t row_reduce_in_place(MatrixGF& m, std::vector<std::size_t>& pivot_cols,
                                std::size_t pivot_limit);

enum class SolveFailure { inconsistent, underdetermined };

using SolveResult = std::variant<std::vector<FieldElement>, SolveFailure>;

/// Solves m * x = b. A solution is returned only when it exists and is unique.
SolveResult solve_linear(const MatrixGF& m, std::span<const FieldElement> b);

}  // namespace gbcount

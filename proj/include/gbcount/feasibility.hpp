#pragma once

#include <cstdint>
#include <vector>

#include "gbcount/rational.hpp"

namespace gbcount {

/// One homogeneous constraint coeffs . x > 0 (strict) or coeffs . x >= 0.
struct HomogeneousRow {
  std::vector<std::int64_t> coeffs;
  bool strict = true;
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> witness;  // empty when infeasible
};

/// Fourier-Motzkin elimination on a homogeneous system over the rationals.
/// Rows are kept primitive (divided by the gcd of their entries) and
/// deduplicated after every elimination step, so elimination stays exact in
/// 64-bit integers. A feasible answer carries a witness that has been checked
/// against every input row.
FeasibilityResult fourier_motzkin(const std::vector<HomogeneousRow>& rows, std::size_t dim);

/// Strict constraints w . d > 0 on an n-dimensional weight vector.
class StrictInequalitySystem {
 public:
  explicit StrictInequalitySystem(std::size_t dim) : dim_(dim) {}

  /// UsageError for a zero row or a dimension mismatch. Duplicates are ignored.
  void add_row(std::vector<std::int64_t> row);

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

 private:
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Is there a w with every coordinate > 0 and w . d > 0 for all rows d?
/// The witness, when feasible, is strictly positive.
FeasibilityResult fm_feasible(const StrictInequalitySystem& sys);

}  // namespace gbcount

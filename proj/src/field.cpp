#include "gbcount/field.hpp"

#include <string>
#include <utility>

namespace gbcount {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p > kMaxPrime)
    throw UsageError("modulus " + std::to_string(p) + " exceeds the supported ceiling " +
                     std::to_string(kMaxPrime));
  if (!is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw DomainError("division by zero in Z_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(modulus_ == o.modulus_))
    throw UsageError("field elements from Z_" + std::to_string(modulus_.value()) + " and Z_" +
                     std::to_string(o.modulus_.value()) + " cannot be combined");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {modulus_.add(value_, o.value_), modulus_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {modulus_.sub(value_, o.value_), modulus_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {modulus_.mul(value_, o.value_), modulus_};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {modulus_.mul(value_, modulus_.inv(o.value_)), modulus_};
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) { return a + b; }

FieldElement fe_mul_inv(const FieldElement& a) { return a.inverse(); }

MatrixGF MatrixGF::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                             PrimeModulus modulus) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  MatrixGF m(rows.size(), cols, modulus);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set_raw(r, c, modulus.reduce(rows[r][c]));
  }
  return m;
}

MatrixGF MatrixGF::identity(std::size_t n, PrimeModulus modulus) {
  MatrixGF m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
  return m;
}

void MatrixGF::set(std::size_t r, std::size_t c, const FieldElement& v) {
  if (!(v.modulus() == modulus_)) throw UsageError("matrix entry from a different field");
  set_raw(r, c, v.value());
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(cols_, rows_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set_raw(c, r, raw(r, c));
  return t;
}

MatrixGF MatrixGF::operator*(const MatrixGF& o) const {
  if (!(modulus_ == o.modulus_)) throw UsageError("matrix product across different fields");
  if (cols_ != o.rows_) throw UsageError("matrix product dimension mismatch");
  MatrixGF out(rows_, o.cols_, modulus_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = raw(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        out.set_raw(r, c, modulus_.add(out.raw(r, c), modulus_.mul(a, o.raw(k, c))));
    }
  return out;
}

std::size_t row_reduce_in_place(MatrixGF& m, std::vector<std::size_t>& pivot_cols,
                                std::size_t pivot_limit) {
  const PrimeModulus& f = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  pivot_cols.clear();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < pivot_limit && c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m.raw(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      auto a = m.row(pivot);
      auto b = m.row(rank);
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[k], b[k]);
    }
    auto prow = m.row(rank);
    const std::uint32_t scale = f.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = f.mul(prow[k], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto row = m.row(r);
      const std::uint32_t factor = row[c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) row[k] = f.sub(row[k], f.mul(factor, prow[k]));
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  return rank;
}

RowReduction row_reduce(MatrixGF m) {
  RowReduction out{std::move(m), 0, {}};
  out.rank = row_reduce_in_place(out.rref, out.pivot_cols, out.rref.cols());
  return out;
}

SolveResult solve_linear(const MatrixGF& m, std::span<const FieldElement> b) {
  if (m.rows() != b.size()) throw UsageError("right-hand side length differs from row count");
  MatrixGF aug(m.rows(), m.cols() + 1, m.modulus());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!(b[r].modulus() == m.modulus())) throw UsageError("right-hand side from another field");
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set_raw(r, c, m.raw(r, c));
    aug.set_raw(r, m.cols(), b[r].value());
  }
  std::vector<std::size_t> pivots;
  const std::size_t rank = row_reduce_in_place(aug, pivots, aug.cols());
  if (!pivots.empty() && pivots.back() == m.cols()) return SolveFailure::inconsistent;
  if (rank < m.cols()) return SolveFailure::underdetermined;
  std::vector<FieldElement> x;
  x.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) x.emplace_back(aug.raw(c, m.cols()), m.modulus());
  return x;
}

}  // namespace gbcount

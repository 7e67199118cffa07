#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gbcount/field.hpp"
#include "gbcount/polynomial.hpp"

namespace gbcount {

/// A point of Z_p^n stored as canonical residues. The modulus lives on the
/// owning DataSet.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::uint32_t> coords() const noexcept { return coords_; }

  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

std::string to_string(const Point& pt);

/// Every point of Z_p^n in canonical (lexicographic, x1 most significant) order.
std::vector<Point> lattice_points(PrimeModulus p, std::size_t nvars);
/// Position of `pt` in lattice_points(p, n).
std::size_t lattice_index(const Point& pt, PrimeModulus p);

/// A set of distinct points of Z_p^n, kept sorted.
class DataSet {
 public:
  /// UsageError on wrong dimension, out-of-range coordinates or duplicates.
  DataSet(PrimeModulus p, std::size_t nvars, std::vector<Point> points);
  static DataSet from_indices(PrimeModulus p, std::size_t nvars,
                              std::span<const std::size_t> indices);

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return n_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  bool contains(const Point& pt) const;

  DataSet complement() const;
  DataSet with_point(const Point& pt) const;
  DataSet with_points(std::span<const Point> pts) const;

  friend bool operator==(const DataSet&, const DataSet&) = default;

 private:
  PrimeModulus p_;
  std::size_t n_;
  std::vector<Point> points_;
};

/// Semicolon-separated points, e.g. "(0,0);(1,1)". Empty set renders as "".
std::string to_string(const DataSet& set);

/// Text format: first line `p n`, then one point per line as n integers.
/// Blank lines and lines starting with '#' are ignored. ParseError carries
/// the offending line number.
DataSet parse_dataset(std::istream& in);
DataSet parse_dataset_file(const std::string& path);
std::string format_dataset(const DataSet& set);

/// Entry (i, j) is mons[j] evaluated at the i-th point. UsageError if any
/// exponent is >= p.
MatrixGF evaluation_matrix(std::span<const Monomial> mons, const DataSet& set);

struct BMResult {
  ReducedGB basis;
  std::vector<Monomial> standard;  // ascending in the term order
};

/// Reduced Gröbner basis and standard monomials of I(S) by linear algebra on
/// evaluation vectors, walking monomials in increasing term order.
BMResult buchberger_moller(const DataSet& set, const TermOrder& order);

/// True iff f vanishes on every point of the set.
bool ideal_membership(const Polynomial& f, const DataSet& set);

/// A polynomial with per-variable exponents <= p-1 taking value outputs[i] at
/// inputs[i]. DataError if an input repeats with a different output.
Polynomial interpolate(std::span<const Point> inputs, std::span<const std::uint32_t> outputs,
                       PrimeModulus p, std::size_t nvars);

}  // namespace gbcount

#pragma once

#include <cstddef>
#include <vector>

#include "gbcount/feasibility.hpp"
#include "gbcount/polynomial.hpp"
#include "gbcount/vanishing_ideal.hpp"

namespace gbcount {

/// A divisibility-closed set of exponent vectors inside {0..p-1}^n, i.e. a
/// candidate set of standard monomials. Cells are kept in ascending
/// administrative order.
class Staircase {
 public:
  /// UsageError unless every cell lies in the box and the set is closed under
  /// taking divisors.
  Staircase(std::size_t nvars, std::uint32_t p, std::vector<Monomial> cells);

  std::size_t nvars() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<Monomial>& cells() const noexcept { return cells_; }
  bool contains(const Monomial& mono) const;

  friend bool operator==(const Staircase& a, const Staircase& b) { return a.cells_ == b.cells_; }
  friend bool operator<(const Staircase& a, const Staircase& b) { return a.cells_ < b.cells_; }

 private:
  std::size_t n_;
  std::uint32_t p_;
  std::vector<Monomial> cells_;
};

/// All staircases with exactly m cells in {0..p-1}^n, each once, sorted by
/// their cell lists. UsageError unless 0 <= m <= p^n.
std::vector<Staircase> enumerate_staircases(std::size_t nvars, std::uint32_t p, std::size_t m);

/// Minimal monomials outside the staircase. Exponent p only appears in the
/// pure powers x_i^p sitting on top of a full column.
std::vector<Monomial> corners(const Staircase& stair);

/// Evaluation matrix of the staircase at the points is invertible.
bool is_admissible(const Staircase& stair, const DataSet& set);

/// The combination of staircase monomials agreeing with x^alpha on the set.
Polynomial normal_form_on_staircase(const Monomial& alpha, const Staircase& stair,
                                    const DataSet& set);

/// Rows alpha - beta for every corner alpha (pure powers x_i^p excluded) and
/// every beta in the support of its normal form. Rows with no negative entry
/// hold for every positive weight and are left out.
StrictInequalitySystem realizability_system(const Staircase& stair, const DataSet& set);

/// Reduced basis {x^alpha - NF(x^alpha)} over the corners, with a weight
/// order witnessing it. DomainError if no term order realizes the staircase.
ReducedGB reduced_gb_from_staircase(const Staircase& stair, const DataSet& set);

struct EnumerationStats {
  std::size_t staircases = 0;    // candidates of the right size
  std::size_t admissible = 0;    // passed the rank test
  std::size_t unrealizable = 0;  // admissible but rejected by the weight test

  EnumerationStats& operator+=(const EnumerationStats& o) {
    staircases += o.staircases;
    admissible += o.admissible;
    unrealizable += o.unrealizable;
    return *this;
  }
};

struct GBEntry {
  ReducedGB basis;
  Staircase staircase;
  std::vector<Monomial> leading;
};

/// Every distinct reduced Gröbner basis of I(S), sorted by staircase.
struct GBCollection {
  DataSet source;
  std::vector<GBEntry> bases;
  EnumerationStats stats;

  std::size_t count() const noexcept { return bases.size(); }
};

GBCollection enumerate_reduced_gbs(const DataSet& set);

/// Same count as enumerate_reduced_gbs without building the polynomials.
std::size_t count_gbs(const DataSet& set, EnumerationStats* stats = nullptr);

}  // namespace gbcount

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbcount/field.hpp"
#include "gbcount/rational.hpp"

namespace gbcount {

/// Exponent vector x1^e1 * ... * xn^en. The built-in ordering (lex on the
/// exponent vector) is administrative only; term orders live in TermOrder.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept;
  bool is_one() const noexcept;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; UsageError unless `divisor` divides *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Weight vector with a lexicographic tiebreak over a permutation of the
/// variables. Weights are stored as nonnegative integers; rational weights are
/// scaled by the common denominator, which leaves the order unchanged.
class TermOrder {
 public:
  TermOrder(std::vector<std::int64_t> weights, std::vector<std::size_t> tiebreak);
  static TermOrder from_rational(std::span<const Rational> weights,
                                 std::vector<std::size_t> tiebreak);
  /// Total degree, ties broken by lex with x1 > x2 > ... > xn.
  static TermOrder graded_lex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);

  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
  /// 0-based variable indices, most significant first.
  const std::vector<std::size_t>& tiebreak() const noexcept { return tiebreak_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<std::int64_t> weights_;
  std::vector<std::size_t> tiebreak_;
};

std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b);

/// Sparse polynomial over Z_p in a fixed number of variables. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::uint32_t>;

  Polynomial(std::size_t nvars, PrimeModulus modulus) : nvars_(nvars), modulus_(modulus) {}
  static Polynomial constant(std::size_t nvars, PrimeModulus modulus, std::int64_t c);
  static Polynomial term(const Monomial& mono, PrimeModulus modulus, std::int64_t c = 1);
  static Polynomial variable(std::size_t nvars, PrimeModulus modulus, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  FieldElement coefficient(const Monomial& mono) const;
  /// Adds coeff * mono, removing the term if it cancels.
  void add_term(const Monomial& mono, std::uint32_t coeff);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(std::uint32_t c) const;
  Polynomial times(const Monomial& mono, std::uint32_t c = 1) const;

  /// Value at a point given as canonical residues.
  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;

  /// Rewrites every x_i^e with e >= p as x_i^(((e-1) mod (p-1)) + 1); the
  /// result is the same function on Z_p^n.
  Polynomial reduced_by_field() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  std::size_t nvars_;
  PrimeModulus modulus_;
  Terms terms_;
};

struct LeadingTerm {
  Monomial monomial;
  FieldElement coefficient;
};

/// DomainError for the zero polynomial.
LeadingTerm leading_term(const Polynomial& f, const TermOrder& order);

/// Remainder of multivariate division by `divisors` (first applicable divisor wins).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const TermOrder& order);

struct GBGenerator {
  Polynomial poly;
  Monomial leading;

  friend bool operator==(const GBGenerator&, const GBGenerator&) = default;
};

/// A reduced Gröbner basis with marked leading monomials. Generators are kept
/// sorted by leading monomial (administrative order) so that two bases of the
/// same ideal compare equal regardless of how they were produced. The witness
/// order does not take part in equality.
class ReducedGB {
 public:
  ReducedGB() = default;
  ReducedGB(std::vector<GBGenerator> generators, std::optional<TermOrder> witness);

  const std::vector<GBGenerator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const std::optional<TermOrder>& witness() const noexcept { return witness_; }
  std::vector<Monomial> leading_monomials() const;
  std::vector<Polynomial> polynomials() const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b) { return a.gens_ == b.gens_; }
  friend bool operator<(const ReducedGB& a, const ReducedGB& b);

 private:
  std::vector<GBGenerator> gens_;
  std::optional<TermOrder> witness_;
};

/// Monic generators, pairwise incomparable leading monomials, and no leading
/// monomial dividing any other monomial in the basis.
bool is_reduced(const ReducedGB& basis);

/// Every generator's support forms a divisibility chain ending at its leading
/// monomial.
bool is_factor_closed(const ReducedGB& basis);

ReducedGB buchberger(std::span<const Polynomial> generators, const TermOrder& order);

/// Terms in descending `order`, coefficients as residues 0..p-1, variables x1..xn.
/// When `mark` is given, that monomial is prefixed with '*'.
std::string to_string(const Polynomial& f, const TermOrder& order,
                      const std::optional<Monomial>& mark = std::nullopt);
std::string to_string(const Monomial& mono);
/// Braced, comma-separated generators rendered under the witness order (graded
/// lex if absent) with leading monomials marked.
std::string to_string(const ReducedGB& basis);

}  // namespace gbcount

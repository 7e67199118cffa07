#include "gbcount/feasibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "gbcount/errors.hpp"

namespace gbcount {

namespace {

using RowMap = std::map<std::vector<std::int64_t>, bool>;  // coeffs -> strict

// Adds a row in primitive form. Returns false if the row is the contradiction 0 > 0.
bool insert_row(RowMap& rows, std::vector<std::int64_t> coeffs, bool strict) {
  std::int64_t g = 0;
  for (auto c : coeffs) g = std::gcd(g, c < 0 ? -c : c);
  if (g == 0) return !strict;
  if (g > 1)
    for (auto& c : coeffs) c /= g;
  auto [it, inserted] = rows.try_emplace(std::move(coeffs), strict);
  if (!inserted) it->second = it->second || strict;
  return true;
}

Rational dot_tail(const std::vector<std::int64_t>& coeffs, const std::vector<Rational>& x,
                  std::size_t from) {
  Rational s = 0;
  for (std::size_t j = from; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) s += Rational(coeffs[j]) * x[j];
  return s;
}

Rational floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return Rational(q);
}

}  // namespace

FeasibilityResult fourier_motzkin(const std::vector<HomogeneousRow>& input, std::size_t dim) {
  RowMap current;
  for (const auto& row : input) {
    if (row.coeffs.size() != dim) throw UsageError("constraint row has the wrong dimension");
    if (!insert_row(current, row.coeffs, row.strict)) return {};
  }

  std::vector<RowMap> stages;
  stages.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    stages.push_back(current);
    RowMap next;
    std::vector<RowMap::const_iterator> pos;
    std::vector<RowMap::const_iterator> neg;
    for (auto it = current.cbegin(); it != current.cend(); ++it) {
      const std::int64_t c = it->first[k];
      if (c > 0) {
        pos.push_back(it);
      } else if (c < 0) {
        neg.push_back(it);
      } else {
        next.emplace(it->first, it->second);
      }
    }
    for (auto p : pos)
      for (auto q : neg) {
        const std::int64_t a = p->first[k];
        const std::int64_t b = -q->first[k];
        std::vector<std::int64_t> combined(dim);
        for (std::size_t j = 0; j < dim; ++j) combined[j] = b * p->first[j] + a * q->first[j];
        if (!insert_row(next, std::move(combined), p->second || q->second)) return {};
      }
    current = std::move(next);
  }

  // Back-substitute: stage k only involves variables k..dim-1.
  std::vector<Rational> x(dim, Rational(0));
  for (std::size_t k = dim; k-- > 0;) {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    for (const auto& [coeffs, strict] : stages[k]) {
      const std::int64_t c = coeffs[k];
      if (c == 0) continue;
      const Rational bound = -dot_tail(coeffs, x, k + 1) / Rational(c);
      if (c > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper) {
      x[k] = (*lower == *upper) ? *lower : (*lower + *upper) / Rational(2);
    } else if (lower) {
      x[k] = floor_of(*lower) + Rational(1);
    } else if (upper) {
      x[k] = floor_of(*upper) - (floor_of(*upper) == *upper ? Rational(1) : Rational(0));
    } else {
      x[k] = Rational(1);
    }
  }

  for (const auto& row : input) {
    const Rational s = dot_tail(row.coeffs, x, 0);
    if (row.strict ? !(s > 0) : s < 0)
      throw InvariantViolation("Fourier-Motzkin witness fails an input row");
  }
  return {true, std::move(x)};
}

void StrictInequalitySystem::add_row(std::vector<std::int64_t> row) {
  if (row.size() != dim_) throw UsageError("inequality row has the wrong dimension");
  if (std::all_of(row.begin(), row.end(), [](std::int64_t c) { return c == 0; }))
    throw UsageError("zero row in strict inequality system");
  if (std::find(rows_.begin(), rows_.end(), row) == rows_.end()) rows_.push_back(std::move(row));
}

FeasibilityResult fm_feasible(const StrictInequalitySystem& sys) {
  const std::size_t n = sys.dimension();
  std::vector<HomogeneousRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    rows.push_back({std::move(e), true});
  }
  for (const auto& d : sys.rows()) {
    // Rows with no negative entry already follow from w > 0.
    if (std::all_of(d.begin(), d.end(), [](std::int64_t c) { return c >= 0; })) continue;
    rows.push_back({d, true});
  }
  FeasibilityResult res = fourier_motzkin(rows, n);
  if (res.feasible)
    for (const auto& d : sys.rows()) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += Rational(d[j]) * res.witness[j];
      if (!(s > 0)) throw InvariantViolation("weight witness violates a realizability row");
    }
  return res;
}

}  // namespace gbcount

#pragma once

#include <cstdint>
#include <optional>

#include "gbcount/vanishing_ideal.hpp"

namespace gbcount {

/// 1 when x == 0, otherwise 0.
int b0(std::int64_t x);
/// 1 when x == 1, 0 for every x >= 2. DomainError for x <= 0.
int b1(std::int64_t x);
/// max(x, 0).
std::int64_t b2(std::int64_t x);

/// Closed-form GB count of a two-point set: n minus the number of coordinates
/// on which the points agree. DomainError if p == q.
std::int64_t n2_count(const Point& p, const Point& q);

/// Closed-form count for three distinct points of Z_2^2.
std::int64_t n3_count_2d(const Point& p, const Point& q, const Point& r);
/// Closed-form count for three distinct points of Z_2^3.
std::int64_t n3_count_3d(const Point& p, const Point& q, const Point& r);

/// m^(2n(n-1)/(n+1)) rounded to nearest; m == 0 gives 1.
std::int64_t onn_bound(std::int64_t n, std::int64_t m);

/// Finite-field bound: symmetric in m <-> p^n - m, 1 at both ends, otherwise
/// (p^2 floor(m/p) + (m mod p)^2)^(n(n-1)/(n+1)) rounded to nearest.
std::int64_t modified_bound(std::int64_t n, std::int64_t m, std::int64_t p);

/// p(p-1)/2 * floor(m/p) + C(m mod p, 2).
std::int64_t max_coordinate_sum(std::int64_t m, std::int64_t p);

struct BoundReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::optional<std::int64_t> actual_max;
  std::int64_t original_bound = 0;
  std::int64_t modified_bound = 0;
};

BoundReport bound_report(std::int64_t n, std::int64_t m, std::int64_t p);

}  // namespace gbcount

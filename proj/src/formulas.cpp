#include "gbcount/formulas.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>

namespace gbcount {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

// base^(num/den), rounded half away from zero.
std::int64_t rounded_power(std::int64_t base, std::int64_t num, std::int64_t den) {
  if (base <= 0) return 0;
  const Real value = boost::multiprecision::pow(Real(base), Real(num) / Real(den));
  return boost::multiprecision::round(value).convert_to<std::int64_t>();
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= b;
  return r;
}

void check_triple(const Point& p, const Point& q, const Point& r, std::size_t n) {
  if (p.size() != n || q.size() != n || r.size() != n)
    throw UsageError("three-point formula needs points in Z_2^" + std::to_string(n));
  for (const Point* pt : {&p, &q, &r})
    for (std::size_t i = 0; i < n; ++i)
      if ((*pt)[i] > 1) throw UsageError("three-point formula needs Boolean coordinates");
  if (p == q || p == r || q == r) throw DomainError("three-point formula needs distinct points");
}

}  // namespace

int b0(std::int64_t x) { return x == 0 ? 1 : 0; }

int b1(std::int64_t x) {
  if (x <= 0) throw DomainError("B1 is defined for positive arguments only");
  return x == 1 ? 1 : 0;
}

std::int64_t b2(std::int64_t x) { return x < 0 ? 0 : x; }

std::int64_t n2_count(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw UsageError("points of different dimension");
  if (p == q) throw DomainError("two-point formula needs distinct points");
  std::int64_t agree = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    agree += b0(static_cast<std::int64_t>(p[i]) - static_cast<std::int64_t>(q[i]));
  return static_cast<std::int64_t>(p.size()) - agree;
}

std::int64_t n3_count_2d(const Point& p, const Point& q, const Point& r) {
  check_triple(p, q, r, 2);
  const std::int64_t ones = b1(n2_count(p, q)) + b1(n2_count(p, r)) + b1(n2_count(q, r));
  return 2 - b2(ones - 1);
}

std::int64_t n3_count_3d(const Point& p, const Point& q, const Point& r) {
  check_triple(p, q, r, 3);
  return 3 - (b1(n2_count(p, q)) + b1(n2_count(p, r)) + b1(n2_count(q, r)));
}

std::int64_t onn_bound(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 0) throw UsageError("bound needs n >= 1 and m >= 0");
  if (m == 0) return 1;
  return rounded_power(m, 2 * n * (n - 1), n + 1);
}

std::int64_t modified_bound(std::int64_t n, std::int64_t m, std::int64_t p) {
  if (n < 1 || p < 2 || p > 0xffffffffLL || !is_prime(static_cast<std::uint32_t>(p)))
    throw UsageError("bound needs n >= 1 and a prime p");
  const std::int64_t total = ipow(p, n);
  if (m < 0 || m > total)
    throw UsageError("m = " + std::to_string(m) + " outside 0.." + std::to_string(total));
  if (m == 0 || m == total) return 1;
  if (m > total / 2) return modified_bound(n, total - m, p);
  const std::int64_t base = p * p * (m / p) + (m % p) * (m % p);
  return rounded_power(base, n * (n - 1), n + 1);
}

std::int64_t max_coordinate_sum(std::int64_t m, std::int64_t p) {
  if (m < 0 || p < 2) throw UsageError("max_coordinate_sum needs m >= 0 and p >= 2");
  const std::int64_t r = m % p;
  return p * (p - 1) / 2 * (m / p) + r * (r - 1) / 2;
}

BoundReport bound_report(std::int64_t n, std::int64_t m, std::int64_t p) {
  return {n, m, p, std::nullopt, onn_bound(n, m), modified_bound(n, m, p)};
}

}  // namespace gbcount

#include <doctest.h>

#include <cmath>

#include "gbcount/formulas.hpp"
#include "gbcount/gb_enumeration.hpp"
#include "oracles.hpp"

using namespace gbcount;

TEST_CASE("indicator helpers") {
  CHECK(b0(0) == 1);
  CHECK(b0(1) == 0);
  CHECK(b0(7) == 0);
  CHECK(b1(1) == 1);
  CHECK(b1(2) == 0);
  CHECK(b1(3) == 0);
  CHECK_THROWS_AS(b1(0), DomainError);
  CHECK_THROWS_AS(b1(-2), DomainError);
  CHECK(b2(-1) == 0);
  CHECK(b2(0) == 0);
  CHECK(b2(3) == 3);
}

TEST_CASE("n2_count examples") {
  CHECK(n2_count(Point({1, 0, 0}), Point({0, 1, 0})) == 2);
  CHECK(n2_count(Point({0, 0}), Point({1, 1})) == 2);
  CHECK(n2_count(Point({0, 0}), Point({0, 2})) == 1);
  CHECK_THROWS_AS(n2_count(Point({0, 1}), Point({0, 1})), DomainError);
}

TEST_CASE("two-point formula matches enumeration") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    std::size_t pairs = 0;
    oracle::for_each_subset(p, n, 2, 2, [&](const DataSet& s) {
      const auto& pts = s.points();
      CHECK(n2_count(pts[0], pts[1]) == static_cast<std::int64_t>(count_gbs(s)));
      ++pairs;
    });
    CHECK(pairs == binomial(lattice_points(PrimeModulus(p), n).size(), 2));
  }
}

TEST_CASE("three-point formulas") {
  CHECK(n3_count_2d(Point({1, 0}), Point({0, 1}), Point({0, 0})) == 1);
  CHECK(n3_count_2d(Point({0, 0}), Point({0, 1}), Point({1, 1})) == 1);
  CHECK(n3_count_2d(Point({0, 0}), Point({1, 1}), Point({1, 0})) == 1);
  CHECK(n3_count_3d(Point({1, 0, 0}), Point({0, 1, 0}), Point({0, 0, 1})) == 3);
  CHECK(n3_count_3d(Point({0, 1, 0}), Point({0, 1, 1}), Point({1, 1, 1})) == 1);
  CHECK(n3_count_3d(Point({0, 0, 1}), Point({0, 1, 1}), Point({1, 1, 0})) == 2);
  oracle::for_each_subset(2, 2, 3, 3, [&](const DataSet& s) {
    const auto& q = s.points();
    CHECK(n3_count_2d(q[0], q[1], q[2]) == static_cast<std::int64_t>(count_gbs(s)));
  });
  oracle::for_each_subset(2, 3, 3, 3, [&](const DataSet& s) {
    const auto& q = s.points();
    CHECK(n3_count_3d(q[0], q[1], q[2]) == static_cast<std::int64_t>(count_gbs(s)));
  });
}

TEST_CASE("original bound") {
  CHECK(onn_bound(3, 4) == 64);
  CHECK(onn_bound(2, 2) == 3);
  CHECK(onn_bound(5, 4) == 10321);
  CHECK(onn_bound(2, 0) == 1);
  CHECK(onn_bound(4, 1) == 1);
  // Long-double cross-check away from rounding ties.
  for (std::int64_t n = 1; n <= 5; ++n)
    for (std::int64_t m = 1; m <= 40; ++m) {
      const long double v = std::pow(static_cast<long double>(m), 2.0L * n * (n - 1) / (n + 1));
      if (v > 1e15L || std::fabs(v - std::floor(v) - 0.5L) < 1e-6L) continue;
      CHECK(onn_bound(n, m) == static_cast<std::int64_t>(std::llround(v)));
    }
}

TEST_CASE("modified bound") {
  CHECK(modified_bound(3, 4, 2) == 23);
  CHECK(modified_bound(3, 3, 2) == 11);
  CHECK(modified_bound(2, 4, 3) == 5);
  CHECK(modified_bound(2, 7, 3) == 3);
  CHECK(modified_bound(4, 2, 2) == 28);
  CHECK(modified_bound(5, 4, 2) == 1024);
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t n = 1; n <= 3; ++n) {
      std::int64_t total = 1;
      for (std::int64_t i = 0; i < n; ++i) total *= p;
      CHECK(modified_bound(n, 0, p) == 1);
      CHECK(modified_bound(n, total, p) == 1);
      for (std::int64_t m = 0; m <= total; ++m) {
        CHECK(modified_bound(n, m, p) == modified_bound(n, total - m, p));
        CHECK(modified_bound(n, m, p) >= 1);
      }
    }
  CHECK_THROWS(modified_bound(2, 5, 2));
}

TEST_CASE("max_coordinate_sum against staircases") {
  CHECK(max_coordinate_sum(2, 2) == 1);
  CHECK(max_coordinate_sum(0, 5) == 0);
  for (std::int64_t p : {2, 3, 5}) CHECK(max_coordinate_sum(p, p) == p * (p - 1) / 2);
  // Largest total x2-exponent over staircases of size m in the p x p box.
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t m = 0; m <= p * p; ++m) {
      std::int64_t best = 0;
      for (const auto& cells : oracle::brute_staircases(2, p, m)) {
        std::int64_t s = 0;
        for (const auto& c : cells) s += c[1];
        best = std::max(best, s);
      }
      CHECK(max_coordinate_sum(static_cast<std::int64_t>(m), p) == best);
    }
}

TEST_CASE("bound_report") {
  const BoundReport r = bound_report(2, 7, 3);
  CHECK(r.original_bound == 13);
  CHECK(r.modified_bound == 3);
  CHECK_FALSE(r.actual_max);
  CHECK_THROWS_AS(bound_report(2, 10, 3), UsageError);
  CHECK_THROWS_AS(bound_report(2, 1, 4), UsageError);
}

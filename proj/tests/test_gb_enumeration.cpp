#include <doctest.h>

#include <random>
#include <set>

#include "gbcount/formulas.hpp"
#include "gbcount/gb_enumeration.hpp"
#include "oracles.hpp"

using namespace gbcount;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

DataSet z(std::uint32_t p, std::size_t n, std::vector<Point> pts) {
  return DataSet(PrimeModulus(p), n, std::move(pts));
}

std::set<std::vector<Monomial>> as_set(const std::vector<Staircase>& v) {
  std::set<std::vector<Monomial>> out;
  for (const auto& s : v) out.insert(s.cells());
  return out;
}

std::vector<ReducedGB> bases_of(const GBCollection& c) {
  std::vector<ReducedGB> out;
  for (const auto& e : c.bases) out.push_back(e.basis);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("staircase validation") {
  CHECK_THROWS_AS(Staircase(2, 2, {mono({0, 1})}), UsageError);
  CHECK_THROWS_AS(Staircase(2, 2, {mono({0, 0}), mono({0, 2})}), UsageError);
  CHECK_NOTHROW(Staircase(2, 2, {mono({0, 1}), mono({0, 0})}));
}

TEST_CASE("enumerate_staircases examples") {
  CHECK(as_set(enumerate_staircases(2, 2, 2)) ==
        std::set<std::vector<Monomial>>{{mono({0, 0}), mono({0, 1})}, {mono({0, 0}), mono({1, 0})}});
  CHECK(enumerate_staircases(2, 2, 1).size() == 1);
  CHECK(as_set(enumerate_staircases(2, 3, 3)) ==
        std::set<std::vector<Monomial>>{{mono({0, 0}), mono({0, 1}), mono({1, 0})},
                                        {mono({0, 0}), mono({1, 0}), mono({2, 0})},
                                        {mono({0, 0}), mono({0, 1}), mono({0, 2})}});
  CHECK_THROWS_AS(enumerate_staircases(2, 2, 5), UsageError);
}

TEST_CASE("enumerate_staircases matches brute force") {
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 5}}) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::size_t m = 0; m <= total; ++m) {
      if (binomial(total, m) > 20000) continue;
      const auto ours = enumerate_staircases(n, p, m);
      CHECK(as_set(ours) == oracle::brute_staircases(n, p, m));
      CHECK(std::is_sorted(ours.begin(), ours.end()));
    }
  }
}

TEST_CASE("corners examples") {
  CHECK(corners(Staircase(2, 2, {mono({0, 0}), mono({0, 1})})) ==
        std::vector<Monomial>{mono({0, 2}), mono({1, 0})});
  CHECK(corners(Staircase(2, 2, {mono({0, 0}), mono({1, 0})})) ==
        std::vector<Monomial>{mono({0, 1}), mono({2, 0})});
  CHECK(corners(Staircase(3, 2, {mono({0, 0, 0})})) ==
        std::vector<Monomial>{mono({0, 0, 1}), mono({0, 1, 0}), mono({1, 0, 0})});
  CHECK(corners(Staircase(2, 2, {})) == std::vector<Monomial>{Monomial::one(2)});
}

TEST_CASE("is_admissible examples") {
  const Staircase s1x2(2, 2, {mono({0, 0}), mono({0, 1})});
  const Staircase s1x1(2, 2, {mono({0, 0}), mono({1, 0})});
  CHECK(is_admissible(s1x2, z(2, 2, {Point({0, 0}), Point({1, 1})})));
  CHECK_FALSE(is_admissible(s1x1, z(2, 2, {Point({0, 0}), Point({0, 1})})));
  for (const auto& pt : lattice_points(PrimeModulus(2), 2))
    CHECK(is_admissible(Staircase(2, 2, {mono({0, 0})}), z(2, 2, {pt})));
}

TEST_CASE("normal_form_on_staircase examples") {
  const PrimeModulus f2(2);
  const Polynomial x1 = Polynomial::variable(2, f2, 0), x2 = Polynomial::variable(2, f2, 1);
  const Staircase s1x2(2, 2, {mono({0, 0}), mono({0, 1})});
  const Staircase s1x1(2, 2, {mono({0, 0}), mono({1, 0})});
  const DataSet diag = z(2, 2, {Point({0, 0}), Point({1, 1})});
  CHECK(normal_form_on_staircase(mono({1, 0}), s1x2, diag) == x2);
  CHECK(normal_form_on_staircase(mono({0, 1}), s1x2, diag) == x2);
  CHECK(normal_form_on_staircase(mono({0, 1}), s1x1, z(2, 2, {Point({0, 1}), Point({1, 0})})) ==
        x1 + Polynomial::constant(2, f2, 1));
  CHECK_THROWS_AS(normal_form_on_staircase(mono({0, 1}), s1x1, z(2, 2, {Point({0, 0}), Point({0, 1})})),
                  UsageError);
}

TEST_CASE("realizability_system examples") {
  const DataSet diag = z(2, 2, {Point({0, 0}), Point({1, 1})});
  const auto sys = realizability_system(Staircase(2, 2, {mono({0, 0}), mono({0, 1})}), diag);
  CHECK(sys.rows() == std::vector<std::vector<std::int64_t>>{{1, -1}});
  // x1 - 1 and x2 - 1: constant tails only.
  const auto single = realizability_system(Staircase(2, 2, {mono({0, 0})}), z(2, 2, {Point({1, 1})}));
  CHECK(single.empty());
  // Three points; the corner x1 has normal form x2 + x3 + 1, so rows x1 - x2 and x1 - x3.
  const DataSet s3 = z(2, 3, {Point({1, 0, 0}), Point({0, 1, 0}), Point({1, 1, 1})});
  const Staircase stair(3, 2, {mono({0, 0, 0}), mono({0, 0, 1}), mono({0, 1, 0})});
  REQUIRE(is_admissible(stair, s3));
  const auto nf = normal_form_on_staircase(mono({1, 0, 0}), stair, s3);
  CHECK(nf == Polynomial::variable(3, PrimeModulus(2), 1) + Polynomial::variable(3, PrimeModulus(2), 2) +
                  Polynomial::constant(3, PrimeModulus(2), 1));
  const auto rows = realizability_system(stair, s3).rows();
  CHECK(std::find(rows.begin(), rows.end(), std::vector<std::int64_t>{1, -1, 0}) != rows.end());
  CHECK(std::find(rows.begin(), rows.end(), std::vector<std::int64_t>{1, 0, -1}) != rows.end());
}

TEST_CASE("reduced_gb_from_staircase examples") {
  const PrimeModulus f2(2);
  const Polynomial x1 = Polynomial::variable(2, f2, 0), x2 = Polynomial::variable(2, f2, 1);
  const DataSet diag = z(2, 2, {Point({0, 0}), Point({1, 1})});
  const ReducedGB g1 = reduced_gb_from_staircase(Staircase(2, 2, {mono({0, 0}), mono({0, 1})}), diag);
  const ReducedGB g2 = reduced_gb_from_staircase(Staircase(2, 2, {mono({0, 0}), mono({1, 0})}), diag);
  CHECK(g1.polynomials() == std::vector<Polynomial>{x2 * x2 - x2, x1 - x2});
  CHECK(g2.polynomials() == std::vector<Polynomial>{x2 - x1, x1 * x1 - x1});
  REQUIRE(g1.witness());
  CHECK(buchberger_moller(diag, *g1.witness()).basis == g1);

  const DataSet pair3 = z(2, 3, {Point({1, 0, 1}), Point({0, 1, 0})});
  const Polynomial y1 = Polynomial::variable(3, f2, 0), y2 = Polynomial::variable(3, f2, 1),
                   y3 = Polynomial::variable(3, f2, 2), one = Polynomial::constant(3, f2, 1);
  const ReducedGB g = reduced_gb_from_staircase(Staircase(3, 2, {mono({0, 0, 0}), mono({0, 0, 1})}), pair3);
  CHECK(g.polynomials() == std::vector<Polynomial>{y3 * y3 - y3, y2 - y3 - one, y1 - y3});

  // Some admissible staircase of a 4-point set in Z_3^2 has no realizing order.
  bool seen_unrealizable = false;
  oracle::for_each_subset(3, 2, 4, 4, [&](const DataSet& s) {
    for (const auto& st : enumerate_staircases(2, 3, 4))
      if (!seen_unrealizable && is_admissible(st, s) && !fm_feasible(realizability_system(st, s)).feasible) {
        seen_unrealizable = true;
        CHECK_THROWS_AS(reduced_gb_from_staircase(st, s), DomainError);
      }
  });
  CHECK(seen_unrealizable);
  CHECK_THROWS_AS(reduced_gb_from_staircase(Staircase(2, 2, {mono({0, 0}), mono({1, 0})}),
                                            z(2, 2, {Point({0, 0}), Point({0, 1})})),
                  UsageError);
}

TEST_CASE("enumerate and count examples") {
  CHECK(enumerate_reduced_gbs(z(2, 2, {Point({0, 0}), Point({1, 1})})).count() == 2);
  CHECK(enumerate_reduced_gbs(z(2, 3, {Point({1, 0, 1}), Point({0, 1, 0})})).count() == 3);
  const auto empty = enumerate_reduced_gbs(z(2, 2, {}));
  REQUIRE(empty.count() == 1);
  CHECK(empty.bases[0].basis.polynomials() ==
        std::vector<Polynomial>{Polynomial::constant(2, PrimeModulus(2), 1)});
  CHECK(count_gbs(z(2, 2, {Point({0, 0}), Point({0, 1})})) == 1);
  CHECK(count_gbs(z(3, 2, {Point({1, 2}), Point({2, 1})})) == 2);
  CHECK(count_gbs(z(2, 3, {Point({1, 1, 1}), Point({0, 1, 0})})) == 2);
  CHECK(count_gbs(z(2, 3, {Point({1, 0, 0}), Point({0, 1, 0}), Point({0, 0, 1})})) == 3);
}

TEST_CASE("collection invariants") {
  oracle::for_each_subset(2, 3, 0, 8, [&](const DataSet& s) {
    EnumerationStats stats;
    const GBCollection c = enumerate_reduced_gbs(s);
    CHECK(count_gbs(s, &stats) == c.count());
    CHECK(stats.admissible - stats.unrealizable == c.count());
    CHECK(c.count() >= 1);
    CHECK(static_cast<std::int64_t>(c.count()) <= modified_bound(3, static_cast<std::int64_t>(s.size()), 2));
    std::set<std::vector<Monomial>> leads;
    for (std::size_t i = 0; i < c.bases.size(); ++i) {
      const auto& e = c.bases[i];
      if (i > 0) CHECK(c.bases[i - 1].staircase < e.staircase);
      CHECK(e.staircase.size() == s.size());
      CHECK(is_reduced(e.basis));
      leads.insert(e.leading);
      for (const auto& g : e.basis.polynomials()) CHECK(ideal_membership(g, s));
      REQUIRE(e.basis.witness());
      const BMResult bm = buchberger_moller(s, *e.basis.witness());
      CHECK(bm.basis == e.basis);
      CHECK(bm.standard.size() == s.size());
    }
    CHECK(leads.size() == c.count());
  });
}

TEST_CASE("complement symmetry") {
  oracle::for_each_subset(2, 2, 0, 4, [&](const DataSet& s) { CHECK(count_gbs(s) == count_gbs(s.complement())); });
  oracle::for_each_subset(2, 3, 0, 8, [&](const DataSet& s) { CHECK(count_gbs(s) == count_gbs(s.complement())); });
  oracle::for_each_subset(3, 2, 0, 4, [&](const DataSet& s) { CHECK(count_gbs(s) == count_gbs(s.complement())); });
}

TEST_CASE("enumeration covers the order sweep") {
  // Small slice; the acceptance binary runs the full sweep.
  oracle::for_each_subset(2, 2, 0, 4, [&](const DataSet& s) {
    CHECK(bases_of(enumerate_reduced_gbs(s)) == oracle::bm_sweep(s));
  });
  std::mt19937 rng(23);
  std::size_t k = 0;
  oracle::for_each_subset(3, 2, 1, 4, [&](const DataSet& s) {
    if (rng() % 20 != 0 || ++k > 20) return;
    CHECK(bases_of(enumerate_reduced_gbs(s)) == oracle::bm_sweep(s, 8));
  });
}

TEST_CASE("factor-closed bases are unique") {
  for (std::size_t n : {2u, 3u})
    oracle::for_each_subset(2, n, 1, std::size_t{1} << n, [&](const DataSet& s) {
      const ReducedGB g = buchberger_moller(s, TermOrder::graded_lex(n)).basis;
      if (is_factor_closed(g)) CHECK(count_gbs(s) == 1);
    });
}

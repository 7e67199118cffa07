#include <doctest.h>

#include <random>

#include "gbcount/field.hpp"
#include "oracles.hpp"

using namespace gbcount;

TEST_CASE("prime modulus validation") {
  CHECK_NOTHROW(PrimeModulus(2));
  CHECK_NOTHROW(PrimeModulus(257));
  CHECK_THROWS_AS(PrimeModulus(4), UsageError);
  CHECK_THROWS_AS(PrimeModulus(1), UsageError);
  CHECK_THROWS_AS(PrimeModulus(263), UsageError);
}

TEST_CASE("fe_add") {
  CHECK(fe_add(FieldElement(1, PrimeModulus(2)), FieldElement(1, PrimeModulus(2))).value() == 0);
  CHECK(fe_add(FieldElement(2, PrimeModulus(3)), FieldElement(2, PrimeModulus(3))).value() == 1);
  CHECK(fe_add(FieldElement(0, PrimeModulus(5)), FieldElement(4, PrimeModulus(5))).value() == 4);
  CHECK_THROWS_AS(fe_add(FieldElement(1, PrimeModulus(3)), FieldElement(1, PrimeModulus(5))),
                  UsageError);
}

TEST_CASE("constructors normalize to least nonnegative residues") {
  CHECK(FieldElement(-1, PrimeModulus(7)).value() == 6);
  CHECK(FieldElement(15, PrimeModulus(7)).value() == 1);
}

TEST_CASE("fe_mul_inv") {
  CHECK(fe_mul_inv(FieldElement(2, PrimeModulus(3))).value() == 2);
  CHECK(fe_mul_inv(FieldElement(2, PrimeModulus(5))).value() == 3);
  CHECK(fe_mul_inv(FieldElement(1, PrimeModulus(2))).value() == 1);
  CHECK_THROWS_AS(fe_mul_inv(FieldElement(0, PrimeModulus(7))), DomainError);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 257u}) {
    const PrimeModulus f(p);
    for (std::uint32_t a = 1; a < p; ++a) CHECK((FieldElement(a, f) * fe_mul_inv(FieldElement(a, f))).value() == 1);
  }
}

TEST_CASE("Fermat: a^p = a for every element") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 257u}) {
    const PrimeModulus f(p);
    for (std::uint32_t a = 0; a < p; ++a) CHECK(FieldElement(a, f).pow(p).value() == a);
  }
}

TEST_CASE("row_reduce examples") {
  CHECK(row_reduce(MatrixGF::from_rows({{1, 1}, {1, 1}}, PrimeModulus(2))).rank == 1);
  CHECK(row_reduce(MatrixGF::identity(3, PrimeModulus(2))).rank == 3);
  // det [[1,2],[2,1]] = -3 = 0 mod 3, confirmed by the minor oracle.
  const std::vector<std::vector<std::int64_t>> m{{1, 2}, {2, 1}};
  REQUIRE(oracle::determinant(m, 3) == 0);
  REQUIRE(oracle::rank_by_minors(m, 3) == 1);
  const RowReduction rr = row_reduce(MatrixGF::from_rows(m, PrimeModulus(3)));
  CHECK(rr.rank == 1);
  CHECK(rr.pivot_cols == std::vector<std::size_t>{0});
  CHECK(rr.rref == MatrixGF::from_rows({{1, 2}, {0, 0}}, PrimeModulus(3)));
}

TEST_CASE("row_reduce properties on random matrices") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeModulus f(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % 4;
      std::vector<std::vector<std::int64_t>> raw(rows, std::vector<std::int64_t>(cols));
      for (auto& r : raw)
        for (auto& x : r) x = rng() % p;
      const MatrixGF m = MatrixGF::from_rows(raw, f);
      const RowReduction rr = row_reduce(m);
      CHECK(rr.rank == oracle::rank_by_minors(raw, p));
      CHECK(row_reduce(m.transpose()).rank == rr.rank);
      const RowReduction again = row_reduce(rr.rref);
      CHECK(again.rref == rr.rref);
    }
  }
}

TEST_CASE("solve_linear") {
  const PrimeModulus f2(2);
  {
    std::vector<FieldElement> b{FieldElement(1, f2), FieldElement(0, f2)};
    const auto res = solve_linear(MatrixGF::identity(2, f2), b);
    REQUIRE(std::holds_alternative<std::vector<FieldElement>>(res));
    CHECK(std::get<std::vector<FieldElement>>(res) == b);
  }
  {
    // x = (2, 0, 1) against an invertible matrix; b computed by hand-rolled products.
    const PrimeModulus f3(3);
    const std::vector<std::vector<std::int64_t>> m{{1, 2, 0}, {0, 1, 1}, {2, 0, 1}};
    REQUIRE(oracle::determinant(m, 3) != 0);
    const std::vector<std::int64_t> x{2, 0, 1};
    std::vector<FieldElement> b;
    for (const auto& row : m) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += row[j] * x[j];
      b.emplace_back(s, f3);
    }
    const auto res = solve_linear(MatrixGF::from_rows(m, f3), b);
    REQUIRE(std::holds_alternative<std::vector<FieldElement>>(res));
    const auto& sol = std::get<std::vector<FieldElement>>(res);
    for (std::size_t j = 0; j < 3; ++j) CHECK(sol[j].value() == x[j]);
  }
  {
    const auto m = MatrixGF::from_rows({{1, 1}, {1, 1}}, f2);
    std::vector<FieldElement> inconsistent{FieldElement(0, f2), FieldElement(1, f2)};
    std::vector<FieldElement> consistent{FieldElement(1, f2), FieldElement(1, f2)};
    CHECK(std::get<SolveFailure>(solve_linear(m, inconsistent)) == SolveFailure::inconsistent);
    CHECK(std::get<SolveFailure>(solve_linear(m, consistent)) == SolveFailure::underdetermined);
    std::vector<FieldElement> short_b{FieldElement(1, f2)};
    CHECK_THROWS_AS(solve_linear(m, short_b), UsageError);
  }
}

#include <doctest.h>

#include <sstream>

#include "gbcount/model_space.hpp"
#include "oracles.hpp"

using namespace gbcount;

namespace {

InputOutputData io(std::uint32_t p, std::size_t n, std::vector<IOPair> pairs) {
  return InputOutputData(PrimeModulus(p), n, std::move(pairs));
}

// Variables that occur anywhere in the PDS.
std::vector<bool> support_vars(const PDS& f, std::size_t n) {
  std::vector<bool> used(n, false);
  for (const auto& c : f.components)
    for (const auto& [m, coeff] : c.terms())
      for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || m[i] > 0;
  return used;
}

const InputOutputData kDiagonal = io(2, 2, {{Point({0, 0}), Point({0, 1})}, {Point({1, 1}), Point({1, 0})}});

}  // namespace

TEST_CASE("data validation") {
  CHECK_THROWS_AS(io(2, 2, {{Point({0, 0}), Point({0, 1})}, {Point({0, 0}), Point({1, 1})}}), DataError);
  CHECK_THROWS_AS(io(2, 2, {{Point({0, 0}), Point({0, 2})}}), UsageError);
  std::istringstream in("2 2\n0 0 0 1\n1 1 1 0\n");
  const auto d = parse_io_data(in);
  CHECK(d.pairs().size() == 2);
  CHECK(d.inputs() == kDiagonal.inputs());
  std::istringstream bad("2 2\n0 0 0\n");
  CHECK_THROWS_AS(parse_io_data(bad), ParseError);
}

TEST_CASE("interpolating_pds") {
  const auto fixed = io(2, 2, {{Point({0, 0}), Point({0, 0})}, {Point({1, 1}), Point({1, 1})}});
  CHECK(fits(interpolating_pds(fixed), fixed));
  const auto constant = io(3, 2, {{Point({0, 1}), Point({2, 1})}, {Point({1, 2}), Point({2, 1})}, {Point({2, 2}), Point({2, 1})}});
  const PDS f = interpolating_pds(constant);
  CHECK(f.components[0] == Polynomial::constant(2, PrimeModulus(3), 2));
  CHECK(f.components[1] == Polynomial::constant(2, PrimeModulus(3), 1));
  const auto single = io(3, 2, {{Point({1, 2}), Point({0, 2})}});
  const PDS g = interpolating_pds(single);
  CHECK(g.components[0].is_zero());
  CHECK(g.components[1] == Polynomial::constant(2, PrimeModulus(3), 2));
}

TEST_CASE("minimal_pds on the diagonal pair") {
  const auto gbs = enumerate_reduced_gbs(kDiagonal.inputs());
  REQUIRE(gbs.count() == 2);
  for (const auto& e : gbs.bases) {
    const PDS f = minimal_pds(kDiagonal, e.basis);
    CHECK(fits(f, kDiagonal));
    const auto used = support_vars(f, 2);
    // Staircase {1, x2} keeps x2 only, {1, x1} keeps x1 only.
    CHECK(used[0] == e.staircase.contains(Monomial({1, 0})));
    CHECK(used[1] == e.staircase.contains(Monomial({0, 1})));
    const auto polys = e.basis.polynomials();
    for (const auto& c : f.components) CHECK(normal_form(c, polys, *e.basis.witness()) == c);
  }
  // A basis of a different ideal is rejected.
  const auto other = enumerate_reduced_gbs(DataSet(PrimeModulus(2), 2, {Point({0, 0}), Point({0, 1})}));
  CHECK_THROWS_AS(minimal_pds(kDiagonal, other.bases[0].basis), UsageError);
}

TEST_CASE("enumerate_minimal_models") {
  CHECK(enumerate_minimal_models(kDiagonal).size() == 2);
  const auto constant = io(2, 2, {{Point({0, 0}), Point({1, 1})}, {Point({1, 1}), Point({1, 1})}});
  CHECK(enumerate_minimal_models(constant).size() == 1);
  const auto unique = io(2, 2, {{Point({0, 0}), Point({1, 0})}, {Point({0, 1}), Point({0, 1})}});
  CHECK(enumerate_minimal_models(unique).size() == 1);
}

TEST_CASE("model count never exceeds the GB count") {
  for (std::size_t n : {2u, 3u}) {
    const auto all = lattice_points(PrimeModulus(2), n);
    oracle::for_each_subset(2, n, 1, 3, [&](const DataSet& s) {
      const std::size_t gbs = count_gbs(s);
      // Every assignment of outputs for n = 2; a fixed stride of them for n = 3.
      const std::size_t choices = all.size();
      std::size_t combos = 1;
      for (std::size_t i = 0; i < s.size(); ++i) combos *= choices;
      for (std::size_t code = 0; code < combos; code += (n == 2 ? 1 : 37)) {
        std::vector<IOPair> pairs;
        std::size_t c = code;
        for (const auto& pt : s.points()) {
          pairs.push_back({pt, all[c % choices]});
          c /= choices;
        }
        const InputOutputData d(PrimeModulus(2), n, pairs);
        const auto models = enumerate_minimal_models(d);
        CHECK(models.size() <= gbs);
        CHECK(models.size() >= 1);
        for (const auto& mm : models) CHECK(fits(mm.pds, d));
      }
    });
  }
}

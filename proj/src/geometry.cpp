#include "gbcount/geometry.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "gbcount/combinations.hpp"
#include "gbcount/feasibility.hpp"
#include "gbcount/gb_enumeration.hpp"

namespace gbcount {

std::size_t coordinate_changes(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw UsageError("points of different dimension");
  std::size_t changes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) changes += a[i] != b[i] ? 1 : 0;
  return changes;
}

bool is_linked(const Point& q, const DataSet& set, LinkMode mode) {
  if (set.contains(q)) throw UsageError("point " + to_string(q) + " is already in the set");
  auto on_line = [&](const Point& s) { return coordinate_changes(q, s) <= 1; };
  const auto& pts = set.points();
  if (mode == LinkMode::forall) return !pts.empty() && std::all_of(pts.begin(), pts.end(), on_line);
  return std::any_of(pts.begin(), pts.end(), on_line);
}

bool in_convex_hull(const Point& q, std::span<const Point> hull) {
  if (hull.empty()) return false;
  const std::size_t n = q.size();
  // q lies outside iff some (a, b) has a.t <= b for all t in the hull and a.q > b.
  std::vector<HomogeneousRow> rows;
  for (const auto& t : hull) {
    if (t.size() != n) throw UsageError("points of different dimension");
    std::vector<std::int64_t> r(n + 1);
    for (std::size_t i = 0; i < n; ++i) r[i] = -static_cast<std::int64_t>(t[i]);
    r[n] = 1;
    rows.push_back({std::move(r), false});
  }
  std::vector<std::int64_t> r(n + 1);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::int64_t>(q[i]);
  r[n] = -1;
  rows.push_back({std::move(r), true});
  return !fourier_motzkin(rows, n + 1).feasible;
}

std::vector<Point> hull_holes(const DataSet& set) {
  if (set.empty()) throw UsageError("hull of an empty set");
  std::vector<Point> holes;
  for (auto& pt : lattice_points(set.modulus(), set.nvars()))
    if (!set.contains(pt) && in_convex_hull(pt, set.points())) holes.push_back(std::move(pt));
  return holes;
}

ConjectureReport check_conjecture(std::uint32_t p, std::size_t nvars, std::size_t max_m,
                                  LinkMode mode, std::optional<std::uint64_t> sample,
                                  std::uint64_t seed) {
  const PrimeModulus field(p);
  const auto lattice = lattice_points(field, nvars);
  if (lattice.size() > kConjectureExhaustiveLimit && !sample)
    throw UsageError("p^n = " + std::to_string(lattice.size()) + " exceeds the exhaustive limit of " +
                     std::to_string(kConjectureExhaustiveLimit) +
                     "; pass a sample size to draw random base sets instead");
  ConjectureReport report;
  report.p = p;
  report.nvars = nvars;
  report.max_m = max_m;
  report.mode = mode;
  report.sampled = sample.has_value();

  std::map<std::vector<std::size_t>, std::size_t> counts;
  auto count_of = [&](const std::vector<std::size_t>& idx) {
    auto it = counts.find(idx);
    if (it != counts.end()) return it->second;
    return counts.emplace(idx, count_gbs(DataSet::from_indices(field, nvars, idx))).first->second;
  };

  auto examine = [&](std::span<const std::size_t> idx) {
    const std::vector<std::size_t> base_idx(idx.begin(), idx.end());
    const DataSet base = DataSet::from_indices(field, nvars, base_idx);
    ++report.sets_examined;
    for (std::size_t qi = 0; qi < lattice.size(); ++qi) {
      if (std::binary_search(base_idx.begin(), base_idx.end(), qi)) continue;
      const Point& q = lattice[qi];
      if (!is_linked(q, base, mode)) continue;
      ++report.linked_pairs;
      const DataSet grown = base.with_point(q);
      if (!hull_holes(grown).empty()) {
        ++report.with_holes;
        continue;
      }
      ++report.checked;
      std::vector<std::size_t> grown_idx = base_idx;
      grown_idx.insert(std::upper_bound(grown_idx.begin(), grown_idx.end(), qi), qi);
      const std::size_t before = count_of(base_idx);
      const std::size_t after = count_of(grown_idx);
      if (after > before) report.violations.push_back({base, q, before, after});
    }
    return true;
  };

  const std::size_t top = std::min(max_m, lattice.size());
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> all(lattice.size());
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t k = 1; k <= top; ++k) {
    if (!sample) {
      for_each_combination(lattice.size(), k, examine);
      continue;
    }
    for (std::uint64_t s = 0; s < *sample; ++s) {
      std::vector<std::size_t> pick;
      std::sample(all.begin(), all.end(), std::back_inserter(pick), k, rng);
      examine(pick);
    }
  }
  return report;
}

std::optional<AugmentationResult> find_unique_augmentation(const DataSet& set,
                                                           std::size_t budget) {
  std::vector<Point> free_points;
  for (auto& pt : lattice_points(set.modulus(), set.nvars()))
    if (!set.contains(pt)) free_points.push_back(std::move(pt));

  std::optional<AugmentationResult> found;
  for (std::size_t k = 0; k <= std::min(budget, free_points.size()) && !found; ++k) {
    for_each_combination(free_points.size(), k, [&](std::span<const std::size_t> idx) {
      std::vector<Point> extra;
      for (std::size_t i : idx) extra.push_back(free_points[i]);
      const DataSet grown = set.with_points(extra);
      const std::size_t c = count_gbs(grown);
      if (c != 1) return true;
      found = AugmentationResult{set, std::move(extra), c};
      return false;
    });
  }
  return found;
}

}  // namespace gbcount

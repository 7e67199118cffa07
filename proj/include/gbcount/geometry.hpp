#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gbcount/vanishing_ideal.hpp"

namespace gbcount {

/// Number of coordinates in which the two points differ.
std::size_t coordinate_changes(const Point& a, const Point& b);

/// How "lies on the same grid lines as S" is read: some member of S shares an
/// axis-parallel line with q (exists), or every member does (forall).
enum class LinkMode { exists, forall };

/// UsageError if q is already in S.
bool is_linked(const Point& q, const DataSet& set, LinkMode mode = LinkMode::exists);

/// Exact test for q being a convex combination of `hull`.
bool in_convex_hull(const Point& q, std::span<const Point> hull);

/// Lattice points of {0..p-1}^n inside conv(T), boundary included, that are not in T.
std::vector<Point> hull_holes(const DataSet& set);

struct ConjectureViolation {
  DataSet base;
  Point added;
  std::size_t base_count = 0;
  std::size_t augmented_count = 0;
};

struct ConjectureReport {
  std::uint32_t p = 0;
  std::size_t nvars = 0;
  std::size_t max_m = 0;
  LinkMode mode = LinkMode::exists;
  std::size_t sets_examined = 0;   // nonempty base sets
  std::size_t linked_pairs = 0;    // (S, q) with q linked to S
  std::size_t with_holes = 0;      // linked pairs skipped because conv(S + q) has holes
  std::size_t checked = 0;         // pairs where the inequality was evaluated
  bool sampled = false;
  std::vector<ConjectureViolation> violations;
};

inline constexpr std::size_t kConjectureExhaustiveLimit = 32;

/// For every nonempty S with |S| <= max_m and every linked q whose addition
/// leaves no hull holes, records whether #GB(S + q) <= #GB(S).
/// With `sample`, draws that many random base sets per size instead of all of
/// them; without it, UsageError when p^n > kConjectureExhaustiveLimit.
ConjectureReport check_conjecture(std::uint32_t p, std::size_t nvars, std::size_t max_m,
                                  LinkMode mode = LinkMode::exists,
                                  std::optional<std::uint64_t> sample = std::nullopt,
                                  std::uint64_t seed = 1);

struct AugmentationResult {
  DataSet base;
  std::vector<Point> added;
  std::size_t final_count = 0;
};

/// Smallest set of extra points (at most `budget`) giving a unique reduced
/// GB. Sizes are tried in increasing order and candidates in lexicographic
/// order of lattice indices, so the first hit is returned.
std::optional<AugmentationResult> find_unique_augmentation(const DataSet& set,
                                                           std::size_t budget);

}  // namespace gbcount

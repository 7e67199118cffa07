#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gbcount/gb_enumeration.hpp"

namespace gbcount {

struct SurveyOptions {
  std::uint32_t p = 2;
  std::size_t nvars = 2;
  std::size_t m_min = 0;
  std::size_t m_max = 0;
  std::size_t jobs = 1;
  std::uint64_t budget = 1'000'000;    // max subsets per size in exact mode
  std::optional<std::uint64_t> sample;  // draw this many random subsets per size instead
  std::uint64_t seed = 20240101;
};

struct SurveyRow {
  std::size_t m = 0;
  std::size_t actual_max = 0;  // a lower bound when `sampled`
  std::int64_t original_bound = 0;
  std::int64_t modified_bound = 0;
  DataSet witness;             // lexicographically least subset attaining actual_max
  std::uint64_t subsets = 0;   // data sets evaluated
  bool sampled = false;
  EnumerationStats stats;
};

struct SurveyResult {
  SurveyOptions options;
  std::vector<SurveyRow> rows;
};

/// Max #GB over all m-subsets of Z_p^n for each m in [m_min, m_max].
/// BudgetError if C(p^n, m) exceeds the budget without sampling.
/// InvariantViolation if a row exceeds its modified bound, or if exact rows
/// m and p^n - m disagree.
SurveyResult run_survey(const SurveyOptions& options);

/// Header `m,actual_max,original_bound,modified_bound,witness`; the witness
/// column holds semicolon-separated points in double quotes.
std::string survey_csv(const SurveyResult& result);
std::string survey_json(const SurveyResult& result);

/// One published cell from the appendix tables of max-GB counts and bounds.
struct ReferenceCell {
  std::string table;
  std::uint32_t p;
  std::size_t nvars;
  std::size_t m;
  std::optional<std::int64_t> actual_max;
  std::optional<std::int64_t> original_bound;
  std::optional<std::int64_t> modified_bound;
  bool original_three_digits = false;  // printed in 3-significant-digit E notation
};

const std::vector<ReferenceCell>& reference_cells();

struct Discrepancy {
  std::string table;
  std::size_t m;
  std::string column;
  std::int64_t published;
  std::int64_t computed;
};

/// Cells of the reference tables for (p, n) that disagree with the survey.
std::vector<Discrepancy> compare_with_reference(const SurveyResult& result);

/// Rounds to three significant digits (how E-notation cells were printed).
std::int64_t three_significant_digits(std::int64_t x);

}  // namespace gbcount

#pragma once

#include <iosfwd>
#include <string>

#include "gbcount/geometry.hpp"
#include "gbcount/model_space.hpp"
#include "gbcount/survey.hpp"

namespace gbcount {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBudget = 2,
  kExitInvariant = 3,
};

enum class OutputFormat { csv, json };

/// Count, then one basis per line with leading monomials prefixed by '*'.
void cmd_count(const DataSet& set, std::ostream& out);

/// Closed-form count for 2 points (any n, p) or 3 points in Z_2^2 / Z_2^3.
/// With `verify`, also prints the enumerated count and MATCH/MISMATCH.
/// Returns false on MISMATCH. UsageError for unsupported configurations.
bool cmd_formula(const DataSet& set, bool verify, std::ostream& out);

void cmd_bound(std::int64_t n, std::int64_t m, std::int64_t p, std::ostream& out);

/// Writes the table to `out` and, with `compare`, a discrepancy report to `report`.
SurveyResult cmd_survey(const SurveyOptions& options, OutputFormat format, bool compare,
                        std::ostream& out, std::ostream& report);

ConjectureReport cmd_conjecture(std::uint32_t p, std::size_t nvars, std::size_t max_m,
                                LinkMode mode, OutputFormat format, std::ostream& out,
                                std::optional<std::uint64_t> sample = std::nullopt,
                                std::uint64_t seed = 1);

std::optional<AugmentationResult> cmd_augment(const DataSet& set, std::size_t budget,
                                              std::ostream& out);

std::vector<MinimalModel> cmd_models(const InputOutputData& data, std::ostream& out);

/// Full command-line entry point; maps exceptions to ExitCode values.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gbcount

#include "gbcount/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "gbcount/formulas.hpp"

namespace gbcount {

void cmd_count(const DataSet& set, std::ostream& out) {
  const GBCollection collection = enumerate_reduced_gbs(set);
  out << collection.count() << '\n';
  for (const auto& entry : collection.bases) out << to_string(entry.basis) << '\n';
}

bool cmd_formula(const DataSet& set, bool verify, std::ostream& out) {
  const auto& pts = set.points();
  const std::uint32_t p = set.modulus().value();
  std::int64_t value = 0;
  std::string name;
  if (pts.size() == 2) {
    value = n2_count(pts[0], pts[1]);
    name = "two-point";
  } else if (pts.size() == 3 && p == 2 && set.nvars() == 2) {
    value = n3_count_2d(pts[0], pts[1], pts[2]);
    name = "three-point (Z_2^2)";
  } else if (pts.size() == 3 && p == 2 && set.nvars() == 3) {
    value = n3_count_3d(pts[0], pts[1], pts[2]);
    name = "three-point (Z_2^3)";
  } else {
    throw UsageError("no closed-form count for m = " + std::to_string(pts.size()) + " in Z_" +
                     std::to_string(p) + "^" + std::to_string(set.nvars()) +
                     ": beyond two points, formulas exist only for three points in Z_2^2 and "
                     "Z_2^3; a general formula for larger n or p is hard to generate");
  }
  out << name << " formula: " << value << '\n';
  if (!verify) return true;
  const std::size_t counted = count_gbs(set);
  const bool match = static_cast<std::int64_t>(counted) == value;
  out << "enumeration: " << counted << '\n' << (match ? "MATCH" : "MISMATCH") << '\n';
  return match;
}

void cmd_bound(std::int64_t n, std::int64_t m, std::int64_t p, std::ostream& out) {
  const BoundReport r = bound_report(n, m, p);
  out << "original_bound " << r.original_bound << '\n'
      << "modified_bound " << r.modified_bound << '\n';
}

SurveyResult cmd_survey(const SurveyOptions& options, OutputFormat format, bool compare,
                        std::ostream& out, std::ostream& report) {
  SurveyResult result = run_survey(options);
  out << (format == OutputFormat::csv ? survey_csv(result) : survey_json(result));
  for (const auto& row : result.rows)
    if (row.stats.unrealizable > 0)
      report << "m=" << row.m << ": " << row.stats.unrealizable
             << " admissible staircases had no realizing term order\n";
  if (compare) {
    const auto diffs = compare_with_reference(result);
    if (diffs.empty()) report << "reference tables: all cells match\n";
    for (const auto& d : diffs)
      report << "DISCREPANCY " << d.table << " m=" << d.m << ' ' << d.column
             << ": published " << d.published << ", computed " << d.computed << '\n';
  }
  return result;
}

ConjectureReport cmd_conjecture(std::uint32_t p, std::size_t nvars, std::size_t max_m,
                                LinkMode mode, OutputFormat format, std::ostream& out,
                                std::optional<std::uint64_t> sample, std::uint64_t seed) {
  ConjectureReport r = check_conjecture(p, nvars, max_m, mode, sample, seed);
  if (format == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["n"] = r.nvars;
    j["max_m"] = r.max_m;
    j["mode"] = mode == LinkMode::exists ? "exists" : "forall";
    j["sets_examined"] = r.sets_examined;
    j["linked_pairs"] = r.linked_pairs;
    j["skipped_with_holes"] = r.with_holes;
    j["checked"] = r.checked;
    j["sampled"] = r.sampled;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations)
      j["violations"].push_back({{"base", to_string(v.base)},
                                 {"added", to_string(v.added)},
                                 {"base_count", v.base_count},
                                 {"augmented_count", v.augmented_count}});
    out << j.dump(2) << '\n';
  } else {
    out << "# p=" << r.p << " n=" << r.nvars << " max_m=" << r.max_m
        << " mode=" << (mode == LinkMode::exists ? "exists" : "forall")
        << " sets=" << r.sets_examined << " linked=" << r.linked_pairs
        << " skipped_holes=" << r.with_holes << " checked=" << r.checked
        << " violations=" << r.violations.size() << (r.sampled ? " sampled" : "") << '\n';
    out << "base,added,base_count,augmented_count\n";
    for (const auto& v : r.violations)
      out << '"' << to_string(v.base) << "\",\"" << to_string(v.added) << "\"," << v.base_count
          << ',' << v.augmented_count << '\n';
  }
  return r;
}

std::optional<AugmentationResult> cmd_augment(const DataSet& set, std::size_t budget,
                                              std::ostream& out) {
  out << "initial_count " << count_gbs(set) << '\n';
  auto res = find_unique_augmentation(set, budget);
  if (!res) {
    out << "not found within budget " << budget << '\n';
    return res;
  }
  out << "added " << res->added.size() << '\n';
  for (const auto& pt : res->added) out << to_string(pt) << '\n';
  out << "final_count " << res->final_count << '\n';
  return res;
}

std::vector<MinimalModel> cmd_models(const InputOutputData& data, std::ostream& out) {
  auto models = enumerate_minimal_models(data);
  out << models.size() << '\n';
  for (const auto& mm : models)
    out << to_string(mm.pds, *mm.basis.witness()) << "   via " << to_string(mm.basis) << '\n';
  return models;
}

namespace {

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write " + path);
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw UsageError("unknown format " + s);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and enumerate reduced Groebner bases of ideals of points over Z_p"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format = "csv";
  bool verify = false;
  bool compare = false;
  std::size_t jobs = 1;
  std::uint64_t sample = 0;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 20240101;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::size_t m_min = 0;
  std::size_t m_max = 0;
  std::size_t max_m = 0;
  std::size_t aug_budget = 0;
  std::string mode = "exists";

  auto* count = app.add_subcommand("count", "enumerate every reduced GB of I(S)");
  count->add_option("--input,-i", input, "data set file")->required();

  auto* formula = app.add_subcommand("formula", "closed-form GB count for 2 or 3 points");
  formula->add_option("--input,-i", input, "data set file")->required();
  formula->add_flag("--verify", verify, "compare against exhaustive enumeration");

  auto* bound = app.add_subcommand("bound", "original and modified upper bounds");
  bound->add_option("--n", n, "number of variables")->required();
  bound->add_option("--m", m, "number of points")->required();
  bound->add_option("--p", p, "field size")->required();

  auto* survey = app.add_subcommand("survey", "max #GB over all m-subsets of Z_p^n");
  survey->add_option("--p", p, "field size")->required();
  survey->add_option("--n", n, "number of variables")->required();
  survey->add_option("--m-min", m_min, "smallest subset size");
  auto* m_max_opt = survey->add_option("--m-max", m_max, "largest subset size (default p^n)");
  survey->add_option("--jobs,-j", jobs, "worker threads");
  survey->add_option("--sample", sample, "random subsets per size when over budget");
  survey->add_option("--budget", budget, "max subsets per size in exact mode");
  survey->add_option("--seed", seed, "sampling seed");
  survey->add_option("--output,-o", output, "output file (default stdout)");
  survey->add_option("--format", format, "csv or json");
  survey->add_flag("--compare-paper", compare, "flag cells that differ from the published tables");

  auto* conjecture = app.add_subcommand("conjecture", "linked-point monotonicity evidence run");
  conjecture->add_option("--p", p, "field size")->required();
  conjecture->add_option("--n", n, "number of variables")->required();
  conjecture->add_option("--max-m", max_m, "largest base set size")->required();
  conjecture->add_option("--mode", mode, "linked-position reading: exists or forall");
  conjecture->add_option("--output,-o", output, "output file (default stdout)");
  conjecture->add_option("--format", format, "csv or json");
  conjecture->add_option("--sample", sample, "random base sets per size instead of all");
  conjecture->add_option("--seed", seed, "sampling seed");

  auto* augment = app.add_subcommand("augment", "fewest added points giving a unique GB");
  augment->add_option("--input,-i", input, "data set file")->required();
  augment->add_option("--budget", aug_budget, "largest addition set to try")->required();

  auto* models = app.add_subcommand("models", "distinct minimal polynomial dynamical systems");
  models->add_option("--input,-i", input, "input-output data file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) {
      cmd_count(parse_dataset_file(input), out);
    } else if (*formula) {
      cmd_formula(parse_dataset_file(input), verify, out);
    } else if (*bound) {
      cmd_bound(n, m, p, out);
    } else if (*survey) {
      if (n < 1 || p < 2) throw UsageError("survey needs n >= 1 and prime p");
      SurveyOptions opt;
      opt.p = static_cast<std::uint32_t>(p);
      opt.nvars = static_cast<std::size_t>(n);
      opt.m_min = m_min;
      opt.m_max = *m_max_opt ? m_max : lattice_points(PrimeModulus(opt.p), opt.nvars).size();
      opt.jobs = jobs;
      opt.budget = budget;
      if (sample > 0) opt.sample = sample;
      opt.seed = seed;
      OutputTarget target(output, out);
      cmd_survey(opt, parse_format(format), compare, target.get(), err);
    } else if (*conjecture) {
      if (mode != "exists" && mode != "forall") throw UsageError("mode must be exists or forall");
      OutputTarget target(output, out);
      cmd_conjecture(static_cast<std::uint32_t>(p), static_cast<std::size_t>(n), max_m,
                     mode == "exists" ? LinkMode::exists : LinkMode::forall,
                     parse_format(format), target.get(),
                     sample > 0 ? std::optional<std::uint64_t>(sample) : std::nullopt, seed);
    } else if (*augment) {
      cmd_augment(parse_dataset_file(input), aug_budget, out);
    } else if (*models) {
      cmd_models(parse_io_data_file(input), out);
    }
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace gbcount

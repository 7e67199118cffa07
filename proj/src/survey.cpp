#include "gbcount/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gbcount/combinations.hpp"
#include "gbcount/formulas.hpp"

namespace gbcount {

namespace {

// k-combination of {0..n-1} at position `rank` in lexicographic order.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> out;
  std::size_t c = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::uint64_t block = binomial(n - c - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    out.push_back(c++);
  }
  return out;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

struct ChunkBest {
  std::size_t best = 0;
  std::vector<std::size_t> witness;
  bool any = false;
  EnumerationStats stats;
};

SurveyRow survey_exact(const SurveyOptions& opt, std::size_t m) {
  const PrimeModulus field(opt.p);
  const std::size_t total = lattice_points(field, opt.nvars).size();
  const std::uint64_t subsets = binomial(total, m);
  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (subsets + kChunk - 1) / kChunk;
  std::vector<ChunkBest> results(chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      ChunkBest& out = results[c];
      std::vector<std::size_t> idx = unrank_combination(total, m, c * kChunk);
      const std::uint64_t end = std::min(subsets, (c + 1) * kChunk);
      for (std::uint64_t r = c * kChunk; r < end; ++r) {
        const std::size_t count =
            count_gbs(DataSet::from_indices(field, opt.nvars, idx), &out.stats);
        if (!out.any || count > out.best) {
          out.best = count;
          out.witness = idx;
          out.any = true;
        }
        if (r + 1 < end) next_combination(idx, total);
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(opt.jobs, chunks));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Chunks are in rank order; a strictly larger count is needed to move the witness.
  SurveyRow row{.m = m, .witness = DataSet(field, opt.nvars, {}), .subsets = subsets, .stats = {}};
  bool have = false;
  std::vector<std::size_t> witness;
  for (const auto& r : results) {
    row.stats += r.stats;
    if (r.any && (!have || r.best > row.actual_max)) {
      row.actual_max = r.best;
      witness = r.witness;
      have = true;
    }
  }
  row.witness = DataSet::from_indices(field, opt.nvars, witness);
  return row;
}

SurveyRow survey_sampled(const SurveyOptions& opt, std::size_t m) {
  const PrimeModulus field(opt.p);
  const std::size_t total = lattice_points(field, opt.nvars).size();
  std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (m + 1)));
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), 0);
  SurveyRow row{.m = m, .witness = DataSet(field, opt.nvars, {}), .sampled = true, .stats = {}};
  bool have = false;
  std::vector<std::size_t> witness;
  for (std::uint64_t s = 0; s < *opt.sample; ++s) {
    std::vector<std::size_t> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), m, rng);
    const std::size_t count = count_gbs(DataSet::from_indices(field, opt.nvars, pick), &row.stats);
    if (!have || count > row.actual_max || (count == row.actual_max && pick < witness)) {
      row.actual_max = count;
      witness = pick;
      have = true;
    }
    ++row.subsets;
  }
  row.witness = DataSet::from_indices(field, opt.nvars, witness);
  return row;
}

}  // namespace

SurveyResult run_survey(const SurveyOptions& opt) {
  const PrimeModulus field(opt.p);
  const std::size_t total = lattice_points(field, opt.nvars).size();
  if (opt.m_min > opt.m_max || opt.m_max > total)
    throw UsageError("m range must satisfy 0 <= m_min <= m_max <= p^n = " + std::to_string(total));
  if (!opt.sample)
    for (std::size_t m = opt.m_min; m <= opt.m_max; ++m)
      if (binomial(total, m) > opt.budget)
        throw BudgetError("C(" + std::to_string(total) + ", " + std::to_string(m) +
                          ") subsets exceed the enumeration budget of " +
                          std::to_string(opt.budget) + "; pass --sample K or raise --budget");

  SurveyResult result{opt, {}};
  for (std::size_t m = opt.m_min; m <= opt.m_max; ++m) {
    const bool exact = !opt.sample || binomial(total, m) <= *opt.sample;
    SurveyRow row = exact ? survey_exact(opt, m) : survey_sampled(opt, m);
    row.original_bound = onn_bound(static_cast<std::int64_t>(opt.nvars), static_cast<std::int64_t>(m));
    row.modified_bound = modified_bound(static_cast<std::int64_t>(opt.nvars),
                                        static_cast<std::int64_t>(m), opt.p);
    if (static_cast<std::int64_t>(row.actual_max) > row.modified_bound)
      throw InvariantViolation("m = " + std::to_string(m) + ": " + std::to_string(row.actual_max) +
                               " reduced GBs exceed the modified bound " +
                               std::to_string(row.modified_bound) + " (witness " +
                               to_string(row.witness) + ")");
    result.rows.push_back(std::move(row));
  }

  for (const auto& a : result.rows)
    for (const auto& b : result.rows)
      if (!a.sampled && !b.sampled && a.m + b.m == total && a.actual_max != b.actual_max)
        throw InvariantViolation("complement symmetry broken between m = " + std::to_string(a.m) +
                                 " and m = " + std::to_string(b.m));
  return result;
}

std::string survey_csv(const SurveyResult& result) {
  std::ostringstream os;
  os << "m,actual_max,original_bound,modified_bound,witness\n";
  for (const auto& r : result.rows)
    os << r.m << ',' << r.actual_max << ',' << r.original_bound << ',' << r.modified_bound
       << ",\"" << to_string(r.witness) << "\"\n";
  return os.str();
}

std::string survey_json(const SurveyResult& result) {
  nlohmann::ordered_json j;
  j["p"] = result.options.p;
  j["n"] = result.options.nvars;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json row;
    row["m"] = r.m;
    row["actual_max"] = r.actual_max;
    row["original_bound"] = r.original_bound;
    row["modified_bound"] = r.modified_bound;
    row["witness"] = to_string(r.witness);
    row["subsets"] = r.subsets;
    row["sampled"] = r.sampled;
    row["staircases_tested"] = r.stats.staircases;
    row["admissible"] = r.stats.admissible;
    row["admissible_unrealizable"] = r.stats.unrealizable;
    j["rows"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

const std::vector<ReferenceCell>& reference_cells() {
  static const std::vector<ReferenceCell> cells = [] {
    std::vector<ReferenceCell> out;
    auto add = [&](const char* table, std::uint32_t p, std::size_t n, std::size_t m,
                   std::optional<std::int64_t> act, std::optional<std::int64_t> orig,
                   std::optional<std::int64_t> mod, bool three = false) {
      out.push_back({table, p, n, m, act, orig, mod, three});
    };
    // p = 2, n = 2
    const std::int64_t t1[5][3] = {{1, 1, 1}, {1, 1, 1}, {2, 3, 3}, {1, 4, 1}, {1, 6, 1}};
    for (std::size_t m = 0; m < 5; ++m) add("Table 1", 2, 2, m, t1[m][0], t1[m][1], t1[m][2]);
    // p = 2, n = 3
    const std::int64_t t2[9][3] = {{1, 1, 1},   {1, 1, 1},   {3, 8, 8},   {3, 27, 11}, {3, 64, 23},
                                   {3, 125, 11}, {3, 216, 8}, {1, 343, 1}, {1, 512, 1}};
    for (std::size_t m = 0; m < 9; ++m) add("Table 2", 2, 3, m, t2[m][0], t2[m][1], t2[m][2]);
    // p = 2, n = 4; original bound from m = 5 on printed as 2.26E+03 etc.
    const std::int64_t t3[8][3] = {{1, 1, 1},     {4, 28, 28},   {5, 195, 195},  {6, 776, 28},
                                   {13, 2260, 48}, {12, 5430, 74}, {13, 11400, 471}, {9, 19300, 147}};
    for (std::size_t m = 1; m <= 8; ++m)
      add("Table 3", 2, 4, m, t3[m - 1][0], t3[m - 1][1], t3[m - 1][2], m >= 5);
    // p = 3, n = 2
    const std::int64_t t4[9][3] = {{1, 1, 1}, {2, 3, 3},  {2, 4, 4},  {2, 6, 5}, {2, 9, 5},
                                   {2, 11, 4}, {2, 13, 3}, {1, 16, 1}, {1, 19, 1}};
    for (std::size_t m = 1; m <= 9; ++m) add("Table 4", 3, 2, m, t4[m - 1][0], t4[m - 1][1], t4[m - 1][2]);
    // m = 4, p = 2, varying n
    const std::int64_t t5[4][3] = {{1, 6, 1}, {3, 64, 27}, {5, 776, 147}, {8, 10321, 1024}};
    for (std::size_t n = 2; n <= 5; ++n) add("Table 5", 2, n, 4, t5[n - 2][0], t5[n - 2][1], t5[n - 2][2]);
    // Max-GB row of the augmentation example in Z_2^4, m = 2..14.
    const std::int64_t aug[13] = {4, 5, 6, 13, 12, 13, 9, 13, 12, 13, 6, 5, 4};
    for (std::size_t m = 2; m <= 14; ++m)
      add("Augmentation table", 2, 4, m, aug[m - 2], std::nullopt, std::nullopt);
    return out;
  }();
  return cells;
}

std::int64_t three_significant_digits(std::int64_t x) {
  if (x < 1000) return x;
  std::int64_t scale = 1;
  while (x / scale >= 1000) scale *= 10;
  return ((x + scale / 2) / scale) * scale;
}

std::vector<Discrepancy> compare_with_reference(const SurveyResult& result) {
  std::vector<Discrepancy> out;
  for (const auto& cell : reference_cells()) {
    if (cell.p != result.options.p || cell.nvars != result.options.nvars) continue;
    auto row = std::find_if(result.rows.begin(), result.rows.end(),
                            [&](const SurveyRow& r) { return r.m == cell.m; });
    if (row == result.rows.end()) continue;
    if (cell.actual_max && *cell.actual_max != static_cast<std::int64_t>(row->actual_max))
      out.push_back({cell.table, cell.m, "actual_max", *cell.actual_max,
                     static_cast<std::int64_t>(row->actual_max)});
    if (cell.original_bound) {
      const std::int64_t computed = cell.original_three_digits
                                        ? three_significant_digits(row->original_bound)
                                        : row->original_bound;
      if (*cell.original_bound != computed)
        out.push_back({cell.table, cell.m, "original_bound", *cell.original_bound, row->original_bound});
    }
    if (cell.modified_bound && *cell.modified_bound != row->modified_bound)
      out.push_back({cell.table, cell.m, "modified_bound", *cell.modified_bound, row->modified_bound});
  }
  return out;
}

}  // namespace gbcount

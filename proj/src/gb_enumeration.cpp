#include "gbcount/gb_enumeration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

namespace gbcount {

Staircase::Staircase(std::size_t nvars, std::uint32_t p, std::vector<Monomial> cells)
    : n_(nvars), p_(p), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw UsageError("staircase has a repeated cell");
  for (const auto& c : cells_) {
    if (c.size() != n_) throw UsageError("staircase cell has the wrong arity");
    for (std::size_t i = 0; i < n_; ++i) {
      if (c[i] >= static_cast<int>(p_)) throw UsageError("staircase cell outside {0..p-1}^n");
      if (c[i] > 0 && !contains(c / Monomial::variable(n_, i)))
        throw UsageError("cell set is not closed under divisors: " + to_string(c));
    }
  }
}

bool Staircase::contains(const Monomial& mono) const {
  return std::binary_search(cells_.begin(), cells_.end(), mono);
}

namespace {

std::size_t box_size(std::size_t n, std::uint32_t p) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  return total;
}

std::size_t box_index(const Monomial& mono, std::uint32_t p) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) idx = idx * p + static_cast<std::size_t>(mono[i]);
  return idx;
}

Monomial box_monomial(std::size_t idx, std::size_t n, std::uint32_t p) {
  std::vector<int> e(n);
  for (std::size_t i = n; i-- > 0;) {
    e[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return Monomial(std::move(e));
}

std::vector<Staircase> build_staircases(std::size_t n, std::uint32_t p, std::size_t m) {
  const std::size_t total = box_size(n, p);
  if (m > total) throw UsageError("staircase size exceeds p^n");

  // Cells in graded order, so every proper divisor precedes its multiples.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Monomial> monos;
  for (std::size_t i = 0; i < total; ++i) monos.push_back(box_monomial(i, n, p));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return monos[a].degree() < monos[b].degree();
  });
  std::vector<std::vector<std::size_t>> lower(total);  // box ids of c / x_i
  for (std::size_t id = 0; id < total; ++id)
    for (std::size_t i = 0; i < n; ++i)
      if (monos[id][i] > 0) lower[id].push_back(box_index(monos[id] / Monomial::variable(n, i), p));

  std::vector<Staircase> out;
  std::vector<char> in(total, 0);
  std::vector<std::size_t> chosen;
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (chosen.size() == m) {
      std::vector<Monomial> cells;
      for (std::size_t id : chosen) cells.push_back(monos[id]);
      out.emplace_back(n, p, std::move(cells));
      return;
    }
    if (pos == total || chosen.size() + (total - pos) < m) return;
    const std::size_t id = order[pos];
    if (std::all_of(lower[id].begin(), lower[id].end(), [&](std::size_t l) { return in[l]; })) {
      in[id] = 1;
      chosen.push_back(id);
      self(self, pos + 1);
      chosen.pop_back();
      in[id] = 0;
    }
    self(self, pos + 1);
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Per-staircase data shared by every data set of the same (n, p, m).
struct StairInfo {
  Staircase stair;
  std::vector<std::size_t> cell_ids;
  std::vector<Monomial> corners;             // all corners, ascending
  std::vector<Monomial> box_corners;         // corners with exponents < p
  std::vector<std::size_t> box_corner_ids;
  std::vector<std::size_t> field_corner_vars;  // i such that x_i^p is a corner
};

using Catalog = std::vector<StairInfo>;

std::shared_ptr<const Catalog> staircase_catalog(std::size_t n, std::uint32_t p, std::size_t m) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::uint32_t, std::size_t>,
                  std::shared_ptr<const Catalog>>
      cache;
  const auto key = std::make_tuple(n, p, m);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto catalog = std::make_shared<Catalog>();
  for (auto& stair : build_staircases(n, p, m)) {
    StairInfo info{stair, {}, corners(stair), {}, {}, {}};
    for (const auto& c : stair.cells()) info.cell_ids.push_back(box_index(c, p));
    for (const auto& c : info.corners) {
      auto big = std::find(c.exponents().begin(), c.exponents().end(), static_cast<int>(p));
      if (big != c.exponents().end()) {
        info.field_corner_vars.push_back(static_cast<std::size_t>(big - c.exponents().begin()));
      } else {
        info.box_corners.push_back(c);
        info.box_corner_ids.push_back(box_index(c, p));
      }
    }
    catalog->push_back(std::move(info));
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(catalog)).first->second;
}

// values[i][b]: box monomial b evaluated at point i.
std::vector<std::vector<std::uint32_t>> box_values(const DataSet& set) {
  const std::size_t n = set.nvars();
  const std::uint32_t p = set.modulus().value();
  const std::size_t total = box_size(n, p);
  std::vector<std::vector<std::uint32_t>> values(set.size(), std::vector<std::uint32_t>(total));
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Point& pt = set.points()[i];
    for (std::size_t b = 0; b < total; ++b) {
      std::size_t idx = b;
      std::uint32_t v = 1;
      for (std::size_t k = n; k-- > 0;) {
        v = set.modulus().mul(v, set.modulus().pow(pt[k], idx % p));
        idx /= p;
      }
      values[i][b] = v;
    }
  }
  return values;
}

// Rank test plus normal forms of the box corners. On success, nf[j][k] is the
// coefficient of cell k in NF(box_corners[j]).
bool solve_staircase(const StairInfo& info, const std::vector<std::vector<std::uint32_t>>& values,
                     const PrimeModulus& field, std::vector<std::vector<std::uint32_t>>* nf) {
  const std::size_t m = info.cell_ids.size();
  const std::size_t c = info.box_corner_ids.size();
  MatrixGF mat(m, m + c, field);
  for (std::size_t i = 0; i < m; ++i) {
    auto row = mat.row(i);
    for (std::size_t k = 0; k < m; ++k) row[k] = values[i][info.cell_ids[k]];
    for (std::size_t j = 0; j < c; ++j) row[m + j] = values[i][info.box_corner_ids[j]];
  }
  std::vector<std::size_t> pivots;
  if (row_reduce_in_place(mat, pivots, m) < m) return false;
  if (nf) {
    nf->assign(c, std::vector<std::uint32_t>(m));
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < m; ++k) (*nf)[j][k] = mat.raw(k, m + j);
  }
  return true;
}

StrictInequalitySystem rows_from_normal_forms(const StairInfo& info,
                                              const std::vector<std::vector<std::uint32_t>>& nf) {
  const std::size_t n = info.stair.nvars();
  StrictInequalitySystem sys(n);
  for (std::size_t j = 0; j < info.box_corners.size(); ++j)
    for (std::size_t k = 0; k < nf[j].size(); ++k) {
      if (nf[j][k] == 0) continue;
      std::vector<std::int64_t> row(n);
      const Monomial& cell = info.stair.cells()[k];
      bool implied = true;  // beta divides alpha: positivity already forces it
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = info.box_corners[j][i] - cell[i];
        implied = implied && row[i] >= 0;
      }
      if (!implied) sys.add_row(std::move(row));
    }
  return sys;
}

ReducedGB assemble_basis(const StairInfo& info, const std::vector<std::vector<std::uint32_t>>& nf,
                         const PrimeModulus& field, const std::vector<Rational>& witness) {
  const std::size_t n = info.stair.nvars();
  std::vector<GBGenerator> gens;
  for (std::size_t j = 0; j < info.box_corners.size(); ++j) {
    Polynomial g = Polynomial::term(info.box_corners[j], field);
    for (std::size_t k = 0; k < nf[j].size(); ++k)
      g.add_term(info.stair.cells()[k], field.neg(nf[j][k]));
    gens.push_back({std::move(g), info.box_corners[j]});
  }
  for (std::size_t i : info.field_corner_vars) {
    const Monomial lead = Monomial::variable(n, i, static_cast<int>(field.value()));
    Polynomial g = Polynomial::term(lead, field);
    g.add_term(Monomial::variable(n, i), field.neg(1));
    gens.push_back({std::move(g), lead});
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  return ReducedGB(std::move(gens), TermOrder::from_rational(witness, std::move(perm)));
}

const StairInfo& info_for(const Staircase& stair, std::shared_ptr<const Catalog>& holder) {
  holder = staircase_catalog(stair.nvars(), stair.p(), stair.size());
  auto it = std::lower_bound(holder->begin(), holder->end(), stair,
                             [](const StairInfo& a, const Staircase& s) { return a.stair < s; });
  if (it == holder->end() || !(it->stair == stair)) throw UsageError("unknown staircase");
  return *it;
}

void check_compatible(const Staircase& stair, const DataSet& set) {
  if (stair.nvars() != set.nvars() || stair.p() != set.modulus().value())
    throw UsageError("staircase and data set live in different ambient spaces");
  if (stair.size() != set.size())
    throw UsageError("staircase size " + std::to_string(stair.size()) +
                     " differs from the number of points " + std::to_string(set.size()));
}

}  // namespace

std::vector<Staircase> enumerate_staircases(std::size_t nvars, std::uint32_t p, std::size_t m) {
  std::vector<Staircase> out;
  for (const auto& info : *staircase_catalog(nvars, p, m)) out.push_back(info.stair);
  return out;
}

std::vector<Monomial> corners(const Staircase& stair) {
  const std::size_t n = stair.nvars();
  std::vector<Monomial> out;
  if (stair.size() == 0) return {Monomial::one(n)};
  for (const auto& cell : stair.cells())
    for (std::size_t i = 0; i < n; ++i) {
      Monomial up = cell * Monomial::variable(n, i);
      if (up[i] < static_cast<int>(stair.p()) && stair.contains(up)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (up[j] == 0) continue;
        Monomial down = up / Monomial::variable(n, j);
        bool in_box = true;
        for (std::size_t k = 0; k < n; ++k) in_box = in_box && down[k] < static_cast<int>(stair.p());
        minimal = in_box && stair.contains(down);
      }
      if (minimal) out.push_back(std::move(up));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_admissible(const Staircase& stair, const DataSet& set) {
  check_compatible(stair, set);
  const MatrixGF m = evaluation_matrix(stair.cells(), set);
  return row_reduce(m).rank == set.size();
}

Polynomial normal_form_on_staircase(const Monomial& alpha, const Staircase& stair,
                                    const DataSet& set) {
  check_compatible(stair, set);
  const PrimeModulus& field = set.modulus();
  const MatrixGF m = evaluation_matrix(stair.cells(), set);
  std::vector<FieldElement> rhs;
  const Polynomial target = Polynomial::term(alpha, field);
  for (const auto& pt : set.points()) rhs.emplace_back(target.evaluate(pt.coords()), field);
  const SolveResult res = solve_linear(m, rhs);
  const auto* coeffs = std::get_if<std::vector<FieldElement>>(&res);
  if (!coeffs) throw UsageError("staircase is not admissible for this data set");
  Polynomial out(set.nvars(), field);
  for (std::size_t k = 0; k < coeffs->size(); ++k)
    out.add_term(stair.cells()[k], (*coeffs)[k].value());
  return out;
}

StrictInequalitySystem realizability_system(const Staircase& stair, const DataSet& set) {
  check_compatible(stair, set);
  std::shared_ptr<const Catalog> holder;
  const StairInfo& info = info_for(stair, holder);
  std::vector<std::vector<std::uint32_t>> nf;
  if (!solve_staircase(info, box_values(set), set.modulus(), &nf))
    throw UsageError("staircase is not admissible for this data set");
  return rows_from_normal_forms(info, nf);
}

ReducedGB reduced_gb_from_staircase(const Staircase& stair, const DataSet& set) {
  check_compatible(stair, set);
  std::shared_ptr<const Catalog> holder;
  const StairInfo& info = info_for(stair, holder);
  std::vector<std::vector<std::uint32_t>> nf;
  if (!solve_staircase(info, box_values(set), set.modulus(), &nf))
    throw UsageError("staircase is not admissible for this data set");
  const FeasibilityResult fr = fm_feasible(rows_from_normal_forms(info, nf));
  if (!fr.feasible) throw DomainError("no term order realizes this staircase");
  return assemble_basis(info, nf, set.modulus(), fr.witness);
}

GBCollection enumerate_reduced_gbs(const DataSet& set) {
  GBCollection out{set, {}, {}};
  const auto catalog = staircase_catalog(set.nvars(), set.modulus().value(), set.size());
  const auto values = box_values(set);
  std::vector<std::vector<std::uint32_t>> nf;
  for (const auto& info : *catalog) {
    ++out.stats.staircases;
    if (!solve_staircase(info, values, set.modulus(), &nf)) continue;
    ++out.stats.admissible;
    const FeasibilityResult fr = fm_feasible(rows_from_normal_forms(info, nf));
    if (!fr.feasible) {
      ++out.stats.unrealizable;
      continue;
    }
    ReducedGB basis = assemble_basis(info, nf, set.modulus(), fr.witness);
    std::vector<Monomial> leading = basis.leading_monomials();
    out.bases.push_back({std::move(basis), info.stair, std::move(leading)});
  }
  return out;
}

std::size_t count_gbs(const DataSet& set, EnumerationStats* stats) {
  const auto catalog = staircase_catalog(set.nvars(), set.modulus().value(), set.size());
  const auto values = box_values(set);
  EnumerationStats local;
  std::size_t count = 0;
  std::vector<std::vector<std::uint32_t>> nf;
  for (const auto& info : *catalog) {
    ++local.staircases;
    if (!solve_staircase(info, values, set.modulus(), &nf)) continue;
    ++local.admissible;
    if (fm_feasible(rows_from_normal_forms(info, nf)).feasible) {
      ++count;
    } else {
      ++local.unrealizable;
    }
  }
  if (stats) *stats += local;
  return count;
}

}  // namespace gbcount

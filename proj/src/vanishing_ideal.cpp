#include "gbcount/vanishing_ideal.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace gbcount {

std::string to_string(const Point& pt) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
  os << ')';
  return os.str();
}

std::vector<Point> lattice_points(PrimeModulus p, std::size_t nvars) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) total *= p.value();
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::uint32_t> c(nvars, 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.emplace_back(c);
    for (std::size_t i = nvars; i-- > 0;) {
      if (++c[i] < p.value()) break;
      c[i] = 0;
    }
  }
  return out;
}

std::size_t lattice_index(const Point& pt, PrimeModulus p) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < pt.size(); ++i) idx = idx * p.value() + pt[i];
  return idx;
}

DataSet::DataSet(PrimeModulus p, std::size_t nvars, std::vector<Point> points)
    : p_(p), n_(nvars), points_(std::move(points)) {
  for (const auto& pt : points_) {
    if (pt.size() != n_)
      throw UsageError("point " + to_string(pt) + " does not have " + std::to_string(n_) +
                       " coordinates");
    for (std::size_t i = 0; i < n_; ++i)
      if (pt[i] >= p_.value())
        throw UsageError("coordinate out of range in point " + to_string(pt));
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) throw UsageError("duplicate point " + to_string(*dup));
}

DataSet DataSet::from_indices(PrimeModulus p, std::size_t nvars,
                              std::span<const std::size_t> indices) {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::size_t idx : indices) {
    std::vector<std::uint32_t> c(nvars);
    for (std::size_t i = nvars; i-- > 0;) {
      c[i] = static_cast<std::uint32_t>(idx % p.value());
      idx /= p.value();
    }
    if (idx != 0) throw UsageError("lattice index out of range");
    pts.emplace_back(std::move(c));
  }
  return DataSet(p, nvars, std::move(pts));
}

bool DataSet::contains(const Point& pt) const {
  return std::binary_search(points_.begin(), points_.end(), pt);
}

DataSet DataSet::complement() const {
  std::vector<Point> out;
  for (auto& pt : lattice_points(p_, n_))
    if (!contains(pt)) out.push_back(std::move(pt));
  return DataSet(p_, n_, std::move(out));
}

DataSet DataSet::with_point(const Point& pt) const {
  std::vector<Point> pts(points_);
  pts.push_back(pt);
  return DataSet(p_, n_, std::move(pts));
}

DataSet DataSet::with_points(std::span<const Point> extra) const {
  std::vector<Point> pts(points_);
  pts.insert(pts.end(), extra.begin(), extra.end());
  return DataSet(p_, n_, std::move(pts));
}

std::string to_string(const DataSet& set) {
  std::string out;
  for (const auto& pt : set.points()) {
    if (!out.empty()) out += ';';
    out += to_string(pt);
  }
  return out;
}

// ---------------------------------------------------------------- parsing

DataSet parse_dataset(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::vector<Point> points;
  std::set<Point> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> values;
    long long v = 0;
    while (ls >> v) values.push_back(v);
    if (!ls.eof()) throw ParseError(lineno, "expected integers");
    if (!have_header) {
      if (values.size() != 2) throw ParseError(lineno, "header must be `p n`");
      if (values[0] < 2 || values[0] > PrimeModulus::kMaxPrime || !is_prime(values[0]))
        throw ParseError(lineno, "p must be a prime in [2, " +
                                     std::to_string(PrimeModulus::kMaxPrime) + "]");
      if (values[1] < 1) throw ParseError(lineno, "n must be positive");
      p = static_cast<std::uint32_t>(values[0]);
      n = static_cast<std::size_t>(values[1]);
      have_header = true;
      continue;
    }
    if (values.size() != n)
      throw ParseError(lineno, "expected " + std::to_string(n) + " coordinates, got " +
                                   std::to_string(values.size()));
    std::vector<std::uint32_t> c;
    for (long long x : values) {
      if (x < 0 || x >= static_cast<long long>(p))
        throw ParseError(lineno, "coordinate " + std::to_string(x) + " outside 0.." +
                                     std::to_string(p - 1));
      c.push_back(static_cast<std::uint32_t>(x));
    }
    Point pt(std::move(c));
    if (!seen.insert(pt).second) throw ParseError(lineno, "duplicate point " + to_string(pt));
    points.push_back(std::move(pt));
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(lineno, 1), "missing `p n` header");
  return DataSet(PrimeModulus(p), n, std::move(points));
}

DataSet parse_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return parse_dataset(in);
}

std::string format_dataset(const DataSet& set) {
  std::ostringstream os;
  os << set.modulus().value() << ' ' << set.nvars() << '\n';
  for (const auto& pt : set.points()) {
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? " " : "") << pt[i];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- evaluation

namespace {

std::uint32_t eval_monomial(const Monomial& mono, std::span<const std::uint32_t> pt,
                            const PrimeModulus& f) {
  std::uint32_t v = 1;
  for (std::size_t i = 0; i < pt.size(); ++i)
    if (mono[i] > 0) v = f.mul(v, f.pow(pt[i], static_cast<std::uint64_t>(mono[i])));
  return v;
}

}  // namespace

MatrixGF evaluation_matrix(std::span<const Monomial> mons, const DataSet& set) {
  const PrimeModulus& f = set.modulus();
  for (const auto& mono : mons) {
    if (mono.size() != set.nvars()) throw UsageError("monomial arity does not match data set");
    for (int e : mono.exponents())
      if (e >= static_cast<int>(f.value()))
        throw UsageError("monomial " + to_string(mono) + " has an exponent >= p");
  }
  MatrixGF m(set.size(), mons.size(), f);
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j)
      m.set_raw(i, j, eval_monomial(mons[j], set.points()[i].coords(), f));
  return m;
}

bool ideal_membership(const Polynomial& f, const DataSet& set) {
  for (const auto& pt : set.points())
    if (f.evaluate(pt.coords()) != 0) return false;
  return true;
}

// ---------------------------------------------------------------- Buchberger-Möller

BMResult buchberger_moller(const DataSet& set, const TermOrder& order) {
  const PrimeModulus& f = set.modulus();
  const std::size_t n = set.nvars();
  const std::size_t m = set.size();
  if (order.size() != n) throw UsageError("term order arity does not match data set");

  struct EchelonRow {
    std::vector<std::uint32_t> values;  // evaluation vector, 1 at pivot
    std::size_t pivot;
    std::vector<std::uint32_t> combo;  // coefficients on standard monomials
  };
  std::vector<EchelonRow> echelon;
  std::vector<Monomial> standard;
  std::vector<GBGenerator> gens;
  std::set<Monomial> candidates{Monomial::one(n)};

  while (!candidates.empty()) {
    auto pick = candidates.begin();
    for (auto it = std::next(pick); it != candidates.end(); ++it)
      if (order.less(*it, *pick)) pick = it;
    const Monomial t = *pick;
    candidates.erase(pick);
    if (std::any_of(gens.begin(), gens.end(),
                    [&](const GBGenerator& g) { return g.leading.divides(t); }))
      continue;

    std::vector<std::uint32_t> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = eval_monomial(t, set.points()[i].coords(), f);
    std::vector<std::uint32_t> combo(standard.size(), 0);
    for (const auto& row : echelon) {
      const std::uint32_t a = v[row.pivot];
      if (a == 0) continue;
      for (std::size_t i = 0; i < m; ++i) v[i] = f.sub(v[i], f.mul(a, row.values[i]));
      for (std::size_t j = 0; j < row.combo.size(); ++j)
        combo[j] = f.sub(combo[j], f.mul(a, row.combo[j]));
    }
    auto nz = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (nz == v.end()) {
      Polynomial g = Polynomial::term(t, f);
      for (std::size_t j = 0; j < standard.size(); ++j) g.add_term(standard[j], combo[j]);
      gens.push_back({std::move(g), t});
      continue;
    }
    const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
    const std::uint32_t scale = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, scale);
    combo.push_back(1);
    for (auto& c : combo) c = f.mul(c, scale);
    echelon.push_back({std::move(v), pivot, std::move(combo)});
    standard.push_back(t);
    for (std::size_t i = 0; i < n; ++i) candidates.insert(t * Monomial::variable(n, i));
  }
  return {ReducedGB(std::move(gens), order), std::move(standard)};
}

// ---------------------------------------------------------------- interpolation

Polynomial interpolate(std::span<const Point> inputs, std::span<const std::uint32_t> outputs,
                       PrimeModulus p, std::size_t nvars) {
  if (inputs.size() != outputs.size()) throw UsageError("inputs and outputs differ in length");
  std::map<Point, std::uint32_t> table;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() != nvars) throw UsageError("input point has the wrong dimension");
    const std::uint32_t out = p.reduce(outputs[i]);
    auto [it, inserted] = table.emplace(inputs[i], out);
    if (!inserted && it->second != out)
      throw DataError("input " + to_string(inputs[i]) + " is mapped to two different outputs");
  }

  // (x_j - s)^(p-1), cached per (variable, value).
  std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> factor_cache;
  auto indicator_factor = [&](std::size_t j, std::uint32_t s) -> const Polynomial& {
    auto key = std::make_pair(j, s);
    auto it = factor_cache.find(key);
    if (it != factor_cache.end()) return it->second;
    Polynomial base = Polynomial::variable(nvars, p, j) - Polynomial::constant(nvars, p, s);
    Polynomial power = Polynomial::constant(nvars, p, 1);
    for (std::uint32_t k = 0; k + 1 < p.value(); ++k) power = power * base;
    // 1 - (x_j - s)^(p-1) is 1 at x_j = s and 0 elsewhere.
    return factor_cache.emplace(key, Polynomial::constant(nvars, p, 1) - power).first->second;
  };

  Polynomial result(nvars, p);
  for (const auto& [pt, value] : table) {
    if (value == 0) continue;
    Polynomial indicator = Polynomial::constant(nvars, p, value);
    for (std::size_t j = 0; j < nvars; ++j) indicator = indicator * indicator_factor(j, pt[j]);
    result += indicator;
  }
  return result;
}

}  // namespace gbcount

#include "gbcount/model_space.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace gbcount {

InputOutputData::InputOutputData(PrimeModulus p, std::size_t nvars, std::vector<IOPair> pairs)
    : p_(p), n_(nvars), pairs_(std::move(pairs)) {
  std::set<Point> seen;
  for (const auto& [in, out] : pairs_) {
    for (const Point* pt : {&in, &out}) {
      if (pt->size() != n_) throw UsageError("point " + to_string(*pt) + " has wrong dimension");
      for (std::size_t i = 0; i < n_; ++i)
        if ((*pt)[i] >= p_.value()) throw UsageError("coordinate out of range in " + to_string(*pt));
    }
    if (!seen.insert(in).second) throw DataError("input " + to_string(in) + " appears twice");
  }
}

DataSet InputOutputData::inputs() const {
  std::vector<Point> pts;
  for (const auto& pr : pairs_) pts.push_back(pr.input);
  return DataSet(p_, n_, std::move(pts));
}

InputOutputData parse_io_data(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  std::uint32_t p = 0;
  bool have_header = false;
  std::vector<IOPair> pairs;
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
        throw ParseError(lineno, "p must be a supported prime");
      if (values[1] < 1) throw ParseError(lineno, "n must be positive");
      p = static_cast<std::uint32_t>(values[0]);
      n = static_cast<std::size_t>(values[1]);
      have_header = true;
      continue;
    }
    if (values.size() != 2 * n)
      throw ParseError(lineno, "expected " + std::to_string(2 * n) + " integers");
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      if (values[i] < 0 || values[i] >= static_cast<long long>(p))
        throw ParseError(lineno, "coordinate " + std::to_string(values[i]) + " out of range");
      (i < n ? a : b).push_back(static_cast<std::uint32_t>(values[i]));
    }
    Point input(std::move(a));
    if (!seen.insert(input).second)
      throw ParseError(lineno, "input " + to_string(input) + " appears twice");
    pairs.push_back({std::move(input), Point(std::move(b))});
  }
  if (!have_header) throw ParseError(std::max<std::size_t>(lineno, 1), "missing `p n` header");
  return InputOutputData(PrimeModulus(p), n, std::move(pairs));
}

InputOutputData parse_io_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return parse_io_data(in);
}

std::vector<std::uint32_t> PDS::apply(const Point& x) const {
  std::vector<std::uint32_t> out;
  out.reserve(components.size());
  for (const auto& f : components) out.push_back(f.evaluate(x.coords()));
  return out;
}

bool fits(const PDS& f, const InputOutputData& data) {
  for (const auto& [in, out] : data.pairs()) {
    const auto image = f.apply(in);
    if (!std::equal(image.begin(), image.end(), out.coords().begin(), out.coords().end()))
      return false;
  }
  return true;
}

PDS interpolating_pds(const InputOutputData& data) {
  std::vector<Point> inputs;
  for (const auto& pr : data.pairs()) inputs.push_back(pr.input);
  // Reduced under graded lex so constant data gives constant components.
  const TermOrder order = TermOrder::graded_lex(data.nvars());
  const auto basis = buchberger_moller(data.inputs(), order).basis.polynomials();
  PDS f;
  for (std::size_t j = 0; j < data.nvars(); ++j) {
    std::vector<std::uint32_t> outputs;
    for (const auto& pr : data.pairs()) outputs.push_back(pr.output[j]);
    f.components.push_back(
        normal_form(interpolate(inputs, outputs, data.modulus(), data.nvars()), basis, order));
  }
  return f;
}

namespace {

void check_basis_of_inputs(const DataSet& inputs, const ReducedGB& basis) {
  if (!basis.witness()) throw UsageError("basis carries no term order");
  for (const auto& g : basis.generators())
    if (g.poly.nvars() != inputs.nvars() || !(g.poly.modulus() == inputs.modulus()) ||
        !ideal_membership(g.poly, inputs))
      throw UsageError("basis does not belong to the ideal of the input points");
  // Zero-dimensional with exactly m standard monomials.
  const std::size_t n = inputs.nvars();
  const auto leads = basis.leading_monomials();
  for (std::size_t i = 0; i < n; ++i) {
    const bool bounded = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) {
      return l[i] > 0 && l.degree() == l[i];
    });
    if (!bounded) throw UsageError("basis is not zero-dimensional");
  }
  std::size_t standard = 0;
  for (const auto& pt : lattice_points(inputs.modulus(), n)) {
    std::vector<int> e(pt.coords().begin(), pt.coords().end());
    const Monomial mono(std::move(e));
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(mono); }))
      ++standard;
  }
  if (standard != inputs.size())
    throw UsageError("basis has " + std::to_string(standard) + " standard monomials, expected " +
                     std::to_string(inputs.size()));
}

}  // namespace

PDS minimal_pds(const InputOutputData& data, const ReducedGB& basis) {
  check_basis_of_inputs(data.inputs(), basis);
  const auto gens = basis.polynomials();
  PDS out;
  for (const auto& f : interpolating_pds(data).components)
    out.components.push_back(normal_form(f, gens, *basis.witness()));
  return out;
}

std::vector<MinimalModel> enumerate_minimal_models(const InputOutputData& data) {
  std::vector<MinimalModel> models;
  const GBCollection collection = enumerate_reduced_gbs(data.inputs());
  for (const auto& entry : collection.bases) {
    PDS f = minimal_pds(data, entry.basis);
    const bool seen = std::any_of(models.begin(), models.end(),
                                  [&](const MinimalModel& mm) { return mm.pds == f; });
    if (!seen) models.push_back({std::move(f), entry.basis});
  }
  return models;
}

std::string to_string(const PDS& f, const TermOrder& order) {
  std::ostringstream os;
  for (std::size_t j = 0; j < f.components.size(); ++j)
    os << (j ? "; " : "") << 'f' << (j + 1) << " = " << to_string(f.components[j], order);
  return os.str();
}

}  // namespace gbcount

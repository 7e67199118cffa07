#include "gbcount/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace gbcount {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) throw UsageError("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  if (index >= nvars) throw UsageError("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) throw UsageError("monomials of different arity");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (size() != other.size()) throw UsageError("monomials of different arity");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw UsageError("monomial quotient is not exact");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (size() != other.size()) throw UsageError("monomials of different arity");
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], other.exps_[i]);
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(std::vector<std::int64_t> weights, std::vector<std::size_t> tiebreak)
    : weights_(std::move(weights)), tiebreak_(std::move(tiebreak)) {
  if (weights_.size() != tiebreak_.size())
    throw UsageError("weight vector and tiebreak permutation differ in length");
  for (auto w : weights_)
    if (w < 0) throw UsageError("term order weights must be nonnegative");
  std::vector<std::size_t> sorted(tiebreak_);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw UsageError("tiebreak is not a permutation of the variables");
}

TermOrder TermOrder::from_rational(std::span<const Rational> weights,
                                   std::vector<std::size_t> tiebreak) {
  std::int64_t denom = 1;
  for (const auto& w : weights) denom = std::lcm(denom, w.denominator());
  std::vector<std::int64_t> scaled;
  scaled.reserve(weights.size());
  for (const auto& w : weights) scaled.push_back(w.numerator() * (denom / w.denominator()));
  return TermOrder(std::move(scaled), std::move(tiebreak));
}

TermOrder TermOrder::graded_lex(std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  return TermOrder(std::vector<std::int64_t>(nvars, 1), std::move(perm));
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  return TermOrder(std::vector<std::int64_t>(nvars, 0), std::move(perm));
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != size() || b.size() != size())
    throw UsageError("monomial arity does not match the term order");
  std::int64_t wa = 0;
  std::int64_t wb = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    wa += weights_[i] * a[i];
    wb += weights_[i] * b[i];
  }
  if (wa != wb) return wa <=> wb;
  for (std::size_t idx : tiebreak_)
    if (a[idx] != b[idx]) return a[idx] <=> b[idx];
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const TermOrder& order, const Monomial& a, const Monomial& b) {
  return order.compare(a, b);
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, PrimeModulus modulus, std::int64_t c) {
  Polynomial f(nvars, modulus);
  f.add_term(Monomial::one(nvars), modulus.reduce(c));
  return f;
}

Polynomial Polynomial::term(const Monomial& mono, PrimeModulus modulus, std::int64_t c) {
  Polynomial f(mono.size(), modulus);
  f.add_term(mono, modulus.reduce(c));
  return f;
}

Polynomial Polynomial::variable(std::size_t nvars, PrimeModulus modulus, std::size_t index) {
  return term(Monomial::variable(nvars, index), modulus);
}

FieldElement Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return {it == terms_.end() ? 0 : it->second, modulus_};
}

void Polynomial::add_term(const Monomial& mono, std::uint32_t coeff) {
  if (mono.size() != nvars_) throw UsageError("monomial arity does not match polynomial");
  coeff %= modulus_.value();
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (inserted) return;
  it->second = modulus_.add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(modulus_ == o.modulus_))
    throw UsageError("polynomials from different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, modulus_.neg(c));
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(nvars_, modulus_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, modulus_.mul(ca, cb));
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(modulus_.neg(1)); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  Polynomial r(nvars_, modulus_);
  c %= modulus_.value();
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, modulus_.mul(v, c));
  return r;
}

Polynomial Polynomial::times(const Monomial& mono, std::uint32_t c) const {
  Polynomial r(nvars_, modulus_);
  c %= modulus_.value();
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m * mono, modulus_.mul(v, c));
  return r;
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != nvars_) throw UsageError("point dimension does not match polynomial");
  std::uint32_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t v = c;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i)
      if (m[i] > 0) v = modulus_.mul(v, modulus_.pow(point[i], static_cast<std::uint64_t>(m[i])));
    total = modulus_.add(total, v);
  }
  return total;
}

Polynomial Polynomial::reduced_by_field() const {
  const int p = static_cast<int>(modulus_.value());
  Polynomial r(nvars_, modulus_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(m.exponents());
    for (int& x : e)
      if (x >= p) x = ((x - 1) % (p - 1)) + 1;
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

// ---------------------------------------------------------------- division

LeadingTerm leading_term(const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading term");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, FieldElement(best->second, f.modulus())};
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const TermOrder& order) {
  const PrimeModulus& field = f.modulus();
  std::vector<LeadingTerm> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.is_zero()) throw UsageError("division by the zero polynomial");
    leads.push_back(leading_term(g, order));
  }
  Polynomial work(f);
  Polynomial remainder(f.nvars(), field);
  while (!work.is_zero()) {
    const LeadingTerm lt = leading_term(work, order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].monomial.divides(lt.monomial)) continue;
      const std::uint32_t factor =
          field.mul(lt.coefficient.value(), field.inv(leads[i].coefficient.value()));
      work -= divisors[i].times(lt.monomial / leads[i].monomial, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lt.monomial, lt.coefficient.value());
      work.add_term(lt.monomial, field.neg(lt.coefficient.value()));
    }
  }
  return remainder;
}

// ---------------------------------------------------------------- ReducedGB

ReducedGB::ReducedGB(std::vector<GBGenerator> generators, std::optional<TermOrder> witness)
    : gens_(std::move(generators)), witness_(std::move(witness)) {
  std::sort(gens_.begin(), gens_.end(),
            [](const GBGenerator& a, const GBGenerator& b) { return a.leading < b.leading; });
}

std::vector<Monomial> ReducedGB::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.leading);
  return out;
}

std::vector<Polynomial> ReducedGB::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.poly);
  return out;
}

bool operator<(const ReducedGB& a, const ReducedGB& b) {
  return std::lexicographical_compare(
      a.gens_.begin(), a.gens_.end(), b.gens_.begin(), b.gens_.end(),
      [](const GBGenerator& x, const GBGenerator& y) {
        if (x.leading != y.leading) return x.leading < y.leading;
        return x.poly.terms() < y.poly.terms();
      });
}

bool is_reduced(const ReducedGB& basis) {
  const auto& gens = basis.generators();
  for (const auto& g : gens)
    if (g.poly.coefficient(g.leading).value() != 1) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (const auto& [m, c] : gens[j].poly.terms()) {
        if (i == j && m == gens[i].leading) continue;
        if (gens[i].leading.divides(m)) return false;
      }
  return true;
}

bool is_factor_closed(const ReducedGB& basis) {
  for (const auto& g : basis.generators()) {
    std::vector<Monomial> support;
    for (const auto& [m, c] : g.poly.terms()) support.push_back(m);
    std::sort(support.begin(), support.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
      if (!support[i].divides(support[i + 1])) return false;
    if (!support.empty() && support.back() != g.leading) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Buchberger

namespace {

Polynomial make_monic(const Polynomial& f, const TermOrder& order) {
  const LeadingTerm lt = leading_term(f, order);
  return f.scaled(f.modulus().inv(lt.coefficient.value()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  const LeadingTerm lf = leading_term(f, order);
  const LeadingTerm lg = leading_term(g, order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const PrimeModulus& field = f.modulus();
  return f.times(l / lf.monomial, field.inv(lf.coefficient.value())) -
         g.times(l / lg.monomial, field.inv(lg.coefficient.value()));
}

}  // namespace

ReducedGB buchberger(std::span<const Polynomial> generators, const TermOrder& order) {
  std::vector<Polynomial> basis;
  for (const auto& f : generators)
    if (!f.is_zero()) basis.push_back(make_monic(f, order));
  if (basis.empty()) throw UsageError("Buchberger needs at least one nonzero generator");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    const Monomial li = leading_term(basis[i], order).monomial;
    const Monomial lj = leading_term(basis[j], order).monomial;
    if (li.coprime(lj)) continue;  // product criterion
    Polynomial r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r, order));
    const std::size_t k = basis.size() - 1;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
  }

  // Minimalize: drop generators whose leading monomial is a multiple of another's.
  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(leading_term(g, order).monomial);
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      // Equal leading monomials: keep the first occurrence only.
      redundant = leads[j] != leads[i] || j < i;
    }
    if (!redundant) {
      minimal.push_back(basis[i]);
      minimal_leads.push_back(leads[i]);
    }
  }

  // Inter-reduce the tails.
  std::vector<GBGenerator> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial g = normal_form(minimal[i], others, order);
    out.push_back({make_monic(g, order), minimal_leads[i]});
  }
  return ReducedGB(std::move(out), order);
}

// ---------------------------------------------------------------- rendering

std::string to_string(const Monomial& mono) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (mono[i] > 1) os << '^' << mono[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const Polynomial& f, const TermOrder& order,
                      const std::optional<Monomial>& mark) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, std::uint32_t>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  if (mark) {
    auto it = std::find_if(terms.begin(), terms.end(),
                           [&](const auto& t) { return t.first == *mark; });
    if (it != terms.end()) std::rotate(terms.begin(), it, std::next(it));
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    if (mark && m == *mark) os << '*';
    if (m.is_one()) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

std::string to_string(const ReducedGB& basis) {
  const std::size_t n = basis.generators().empty() ? 0 : basis.generators().front().poly.nvars();
  const TermOrder order = basis.witness().value_or(TermOrder::graded_lex(n));
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& g : basis.generators()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(g.poly, order, g.leading);
  }
  os << '}';
  return os.str();
}

}  // namespace gbcount

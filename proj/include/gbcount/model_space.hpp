#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gbcount/gb_enumeration.hpp"

namespace gbcount {

struct IOPair {
  Point input;
  Point output;
};

/// Observed transitions s_i -> t_i in Z_p^n with pairwise distinct inputs.
class InputOutputData {
 public:
  InputOutputData(PrimeModulus p, std::size_t nvars, std::vector<IOPair> pairs);

  const PrimeModulus& modulus() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return n_; }
  const std::vector<IOPair>& pairs() const noexcept { return pairs_; }
  DataSet inputs() const;

 private:
  PrimeModulus p_;
  std::size_t n_;
  std::vector<IOPair> pairs_;
};

/// Text format: first line `p n`, then 2n integers per line (input then output).
InputOutputData parse_io_data(std::istream& in);
InputOutputData parse_io_data_file(const std::string& path);

/// Polynomial dynamical system f = (f_1, ..., f_n): Z_p^n -> Z_p^n.
struct PDS {
  std::vector<Polynomial> components;

  std::vector<std::uint32_t> apply(const Point& x) const;
  friend bool operator==(const PDS&, const PDS&) = default;
};

bool fits(const PDS& f, const InputOutputData& data);

/// One interpolant per coordinate, reduced modulo the graded-lex basis of the
/// input ideal (constant data gives constant components).
PDS interpolating_pds(const InputOutputData& data);

/// Component-wise normal form of the interpolating PDS. UsageError unless
/// `basis` carries its term order and is a reduced GB of the input ideal.
PDS minimal_pds(const InputOutputData& data, const ReducedGB& basis);

struct MinimalModel {
  PDS pds;
  ReducedGB basis;  // first basis (in collection order) producing this model
};

/// Distinct minimal PDSs over all reduced GBs of the input ideal.
std::vector<MinimalModel> enumerate_minimal_models(const InputOutputData& data);

std::string to_string(const PDS& f, const TermOrder& order);

}  // namespace gbcount

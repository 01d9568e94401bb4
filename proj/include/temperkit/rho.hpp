#pragma once

#include <optional>
#include <vector>

#include "temperkit/rational.hpp"

namespace temperkit {

using Coord = long long;

/// Integer weight vector in the basis {e_1,...,e_rank}; pairing with a test
/// vector Y is the integer dot product lambda(Y) = sum_i lambda_i y_i.
using WeightVector = std::vector<Coord>;

/// Integer element of the split Cartan subalgebra, e.g. E_I = sum_{i in I} E_ii.
using TestVector = std::vector<Coord>;

struct WeightEntry {
  WeightVector weight;
  long long mult = 1;
};

/// Finite list of integer weights with positive multiplicities; the input of
/// every rho evaluation. The zero weight is permitted and contributes nothing.
struct WeightMultiset {
  int rank = 0;
  std::vector<WeightEntry> entries;

  void add(WeightVector w, long long mult = 1);
  /// Throws std::invalid_argument on rank mismatch or nonpositive multiplicity.
  void validate() const;
  long long total_multiplicity() const;
};

/// 2*rho_V(Y) = sum_lambda m_lambda |lambda(Y)|. Carrying 2*rho keeps every
/// value an integer; all comparisons downstream are integer cross products.
long long rho2_eval(const WeightMultiset& v, const TestVector& y);

struct RatioResult {
  Rat value{0};
  TestVector argmax;
  /// False iff some candidate had a positive numerator over a zero
  /// denominator, i.e. the ratio is unbounded along that direction. The
  /// value/argmax still report the maximum over admissible candidates.
  bool attained = true;
};

/// Exact maximum of rho2(num,Y)/rho2(den,Y) over candidates with positive
/// denominator; zero-denominator candidates are skipped (central directions).
/// Ties keep the first candidate in supplied order. Throws std::domain_error
/// when every candidate has zero denominator.
RatioResult max_ratio(const WeightMultiset& num, const WeightMultiset& den,
                      const std::vector<TestVector>& candidates);

struct DominanceResult {
  bool holds = true;
  std::optional<TestVector> witness;  // first violating candidate
};

/// c_num * rho2(v,Y) <= c_den * rho2(w,Y) at every candidate.
DominanceResult dominates(long long c_num, const WeightMultiset& v,
                          long long c_den, const WeightMultiset& w,
                          const std::vector<TestVector>& candidates);

}  // namespace temperkit

#include "temperkit/rho.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace temperkit {

void WeightMultiset::add(WeightVector w, long long mult) {
  entries.push_back({std::move(w), mult});
}

void WeightMultiset::validate() const {
  for (const auto& e : entries) {
    if (static_cast<int>(e.weight.size()) != rank)
      throw std::invalid_argument("WeightMultiset: weight of length " +
                                  std::to_string(e.weight.size()) +
                                  " in a rank-" + std::to_string(rank) +
                                  " multiset");
    if (e.mult < 1)
      throw std::invalid_argument("WeightMultiset: multiplicity must be >= 1");
  }
}

long long WeightMultiset::total_multiplicity() const {
  long long t = 0;
  for (const auto& e : entries) t += e.mult;
  return t;
}

long long rho2_eval(const WeightMultiset& v, const TestVector& y) {
  if (static_cast<int>(y.size()) != v.rank)
    throw std::invalid_argument("rho2_eval: rank mismatch (multiset rank " +
                                std::to_string(v.rank) + ", test vector length " +
                                std::to_string(y.size()) + ")");
  long long acc = 0;
  for (const auto& e : v.entries) {
    long long dot = 0;
    const Coord* w = e.weight.data();
    for (size_t i = 0; i < y.size(); ++i) dot += w[i] * y[i];
    acc += e.mult * std::llabs(dot);
  }
  return acc;
}

namespace {

// a/b < c/d for nonnegative fractions with positive denominators.
bool ratio_less(long long a, long long b, long long c, long long d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

}  // namespace

RatioResult max_ratio(const WeightMultiset& num, const WeightMultiset& den,
                      const std::vector<TestVector>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("max_ratio: empty candidate list");
  RatioResult best;
  bool have = false;
  long long bn = 0, bd = 1;
  for (const auto& y : candidates) {
    const long long d = rho2_eval(den, y);
    const long long n = rho2_eval(num, y);
    if (d == 0) {
      if (n > 0) best.attained = false;
      continue;
    }
    if (!have || ratio_less(bn, bd, n, d)) {
      bn = n;
      bd = d;
      best.argmax = y;
      have = true;
    }
  }
  if (!have)
    throw std::domain_error(
        "max_ratio: every candidate has zero denominator (the ratio is taken "
        "over central directions only)");
  best.value = Rat(bn, bd);
  return best;
}

DominanceResult dominates(long long c_num, const WeightMultiset& v,
                          long long c_den, const WeightMultiset& w,
                          const std::vector<TestVector>& candidates) {
  DominanceResult res;
  for (const auto& y : candidates) {
    if (c_num * rho2_eval(v, y) > c_den * rho2_eval(w, y)) {
      res.holds = false;
      res.witness = y;
      return res;
    }
  }
  return res;
}

}  // namespace temperkit

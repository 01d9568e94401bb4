#pragma once

// Internal exact linear algebra helpers shared by the root-system sources.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "temperkit/roots.hpp"

namespace temperkit::detail {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline long long dot_ll(const WeightVector& a, const WeightVector& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatMat gram_matrix(const std::vector<WeightVector>& v) {
  const int k = static_cast<int>(v.size());
  RatMat g(k, RatVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g[i][j] = Rat(dot_ll(v[i], v[j]));
  return g;
}

// Gaussian elimination for an invertible square system.
inline RatVec solve_linear(RatMat a, RatVec b) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != Rat(0)) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("solve_linear: singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rat d = a[col][col];
    for (int j = col; j < n; ++j) a[col][j] /= d;
    b[col] /= d;
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const Rat f = a[row][col];
      if (f == Rat(0)) continue;
      for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

inline long long rat_to_integer(const Rat& r) {
  if (r.denominator() != 1)
    throw std::logic_error("expected an integer rational, got " + rat_string(r));
  return r.numerator();
}

inline TestVector primitive_integer(const RatVec& v) {
  long long lcm = 1;
  for (const Rat& x : v) lcm = lcm / std::gcd(lcm, x.denominator()) * x.denominator();
  TestVector w(v.size());
  long long g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = rat_to_integer(v[i] * lcm);
    g = std::gcd(g, std::abs(w[i]));
  }
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

inline Rat pair_rat(const WeightVector& weight, const RatVec& y) {
  Rat s(0);
  for (size_t i = 0; i < weight.size(); ++i) s += Rat(weight[i]) * y[i];
  return s;
}

}  // namespace temperkit::detail

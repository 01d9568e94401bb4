#include "temperkit/subsets.hpp"

#include <algorithm>
#include <numeric>

namespace temperkit {

void for_each_proper_subset(
    int n, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> subset;
  for (int card = 1; card <= n - 1; ++card) {
    subset.resize(card);
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
      if (!fn(subset)) return;
      // next k-combination in lexicographic order
      int i = card - 1;
      while (i >= 0 && subset[i] == n - card + 1 + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < card; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
}

TestVector indicator_vector(int n, const std::vector<int>& subset) {
  TestVector y(n, 0);
  for (int i : subset) y[i - 1] = 1;
  return y;
}

std::vector<TestVector> proper_subset_indicators(int n) {
  std::vector<TestVector> out;
  for_each_proper_subset(n, [&](const std::vector<int>& s) {
    out.push_back(indicator_vector(n, s));
    return true;
  });
  return out;
}

std::vector<std::vector<int>> all_compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  const unsigned long long total = 1ULL << (n - 1);
  for (unsigned long long cuts = 0; cuts < total; ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int pos = 0; pos < n - 1; ++pos) {
      if (cuts & (1ULL << pos)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

}  // namespace temperkit

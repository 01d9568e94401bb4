#pragma once

#include <functional>
#include <vector>

#include "temperkit/rho.hpp"

namespace temperkit {

/// Visits every proper nonempty subset of {1,...,n}, ordered by cardinality
/// and lexicographically within each cardinality. The visitor returns false
/// to stop early. This is the canonical witness-search order: by Lemma-style
/// reductions a singleton witness is found first whenever one exists.
void for_each_proper_subset(int n,
                            const std::function<bool(const std::vector<int>&)>& fn);

/// Indicator vector E_I of a sorted 1-based index subset.
TestVector indicator_vector(int n, const std::vector<int>& subset);

/// All E_I for proper nonempty I, in the for_each_proper_subset order.
std::vector<TestVector> proper_subset_indicators(int n);

/// All compositions of n (ordered tuples of positive parts summing to n),
/// enumerated by binary counting on the n-1 cut points.
std::vector<std::vector<int>> all_compositions(int n);

}  // namespace temperkit

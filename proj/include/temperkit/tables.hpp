#pragma once

#include <optional>

#include "temperkit/roots.hpp"

namespace temperkit {

/// Non-temperedness predicate read off the classification tables.
/// Returns nullopt when no table row applies to this Levi (the verdict is
/// still computable, it just has no row to be matched against): non-pure
/// parabolics of su/so/sp fall in this bucket. J must be a proper subset.
/// Split and complex labels are fully covered by the split/complex table;
/// su*(2n) block Levis and so*(2n) are fully covered by their rows.
std::optional<bool> table_predicate(const RootDatum& r, const LeviSpec& j);

/// For su/so/sp(p,q): k with J = {k+1,...,q} when J is a pure tail, else
/// nullopt. k = q corresponds to the minimal parabolic (J empty).
std::optional<int> pure_parabolic_k(const RootDatum& r, const LeviSpec& j);

struct TableRow {
  LeviSpec j;
  LeviVerdict verdict;
  std::optional<bool> predicted;
  bool matched() const {
    return !predicted.has_value() || *predicted == !verdict.tempered;
  }
};

struct TableReport {
  GroupLabel label;
  std::vector<TableRow> rows;  // all proper J, binary-counting order
  long long checked = 0;       // rows with an applicable predicate
  bool all_match = true;
};

/// Classifies every proper Levi subset and matches it against the table
/// predicate. The full subset J = {1..rank} (L = G) is excluded: the
/// classification concerns proper parabolic subgroups.
TableReport generate_table(const RootDatum& r, int max_rank = 8);

}  // namespace temperkit

#include "temperkit/tables.hpp"

#include <algorithm>

namespace temperkit {

namespace {

bool contains(const LeviSpec& j, int node) {
  return std::binary_search(j.j.begin(), j.j.end(), node);
}

// Length of the run node, node-1, node-2, ... contained in J.
int run_down_from(const LeviSpec& j, int node) {
  int run = 0;
  while (node >= 1 && contains(j, node)) {
    ++run;
    --node;
  }
  return run;
}

// Block sizes of the composition of n cut by J inside an A_{n-1} chain.
std::vector<int> a_type_blocks(const LeviSpec& j, int rank) {
  std::vector<int> blocks;
  int block = 1;
  for (int i = 1; i <= rank; ++i) {
    if (contains(j, i)) {
      ++block;
    } else {
      blocks.push_back(block);
      block = 1;
    }
  }
  blocks.push_back(block);
  return blocks;
}

bool split_table_predicate(const RootDatum& r, const LeviSpec& j) {
  const int n = r.rank;
  switch (r.label.type) {
    case SplitType::A: {
      int mx = 0, run = 0;
      for (int i = 1; i <= n; ++i) {
        run = contains(j, i) ? run + 1 : 0;
        mx = std::max(mx, run);
      }
      return 2 * mx >= n + 1;
    }
    case SplitType::B:
    case SplitType::C: {
      const int m = run_down_from(j, n);
      return 2 * m >= n + 1;
    }
    case SplitType::D: {
      bool nontempered = false;
      if (contains(j, n - 1) && contains(j, n)) {
        const int m = 2 + run_down_from(j, n - 2);
        nontempered = 2 * m >= n + 2;
      }
      if (n >= 3 && static_cast<int>(j.j.size()) == n - 1 &&
          (!contains(j, n) || !contains(j, n - 1)))
        nontempered = true;  // the two fork-deleted a_{n-1} subsets
      return nontempered;
    }
    case SplitType::E: {
      const auto comps = levi_components(r, j);
      auto has = [&](const char* t) {
        return std::any_of(comps.begin(), comps.end(),
                           [&](const LeviComponent& c) { return c.type_name == t; });
      };
      if (n == 6) return has("d5");
      if (n == 7) return has("d6") || has("e6");
      return has("e7");
    }
    case SplitType::F:
    case SplitType::G:
      return false;
  }
  return false;
}

}  // namespace

std::optional<int> pure_parabolic_k(const RootDatum& r, const LeviSpec& j) {
  if (r.label.kind != GroupLabel::Kind::real_form) return std::nullopt;
  if (r.label.family != RealFamily::su && r.label.family != RealFamily::so &&
      r.label.family != RealFamily::sp)
    return std::nullopt;
  const int q = r.rank;
  const int k = q - static_cast<int>(j.j.size());
  for (size_t t = 0; t < j.j.size(); ++t)
    if (j.j[t] != k + 1 + static_cast<int>(t)) return std::nullopt;
  return k;
}

std::optional<bool> table_predicate(const RootDatum& r, const LeviSpec& j) {
  if (static_cast<int>(j.j.size()) >= r.rank)
    throw std::invalid_argument("table_predicate: J must be a proper subset");
  switch (r.label.kind) {
    case GroupLabel::Kind::split:
    case GroupLabel::Kind::complex_simple:
      return split_table_predicate(r, j);
    case GroupLabel::Kind::real_form:
      break;
  }
  const int p = r.label.p, q = r.label.q;
  switch (r.label.family) {
    case RealFamily::su:
    case RealFamily::so:
    case RealFamily::sp: {
      const auto k_opt = pure_parabolic_k(r, j);
      if (!k_opt) return std::nullopt;
      const int k = *k_opt;
      // l_ns = su/so/sp(p-k, q-k); the k-range of the nonsplit table
      const int c = r.label.family == RealFamily::su   ? 2
                    : r.label.family == RealFamily::so ? 3
                                                       : 1;
      return 1 <= k && k <= p - 1 && k <= q - 1 && 4 * k <= p + q - c;
    }
    case RealFamily::su_star: {
      const int n = r.label.p;  // g = su*(2n), restricted A_{n-1}
      const auto blocks = a_type_blocks(j, r.rank);
      const int mx = *std::max_element(blocks.begin(), blocks.end());
      return 2 * mx >= n + 2;
    }
    case RealFamily::so_star: {
      const int n = r.label.p;  // g = so*(2n)
      // so*(4N) with [l,l] = su*(2N): the full A-chain J = {1..q-1}; the
      // so*(2m)-tail row's condition m >= n+2 never holds.
      if (n % 2 != 0) return false;
      const int q_rank = r.rank;
      if (static_cast<int>(j.j.size()) != q_rank - 1) return false;
      for (size_t t = 0; t < j.j.size(); ++t)
        if (j.j[t] != static_cast<int>(t) + 1) return false;
      return true;
    }
  }
  return std::nullopt;
}

TableReport generate_table(const RootDatum& r, int max_rank) {
  TableReport rep;
  rep.label = r.label;
  const auto classified = classify_levis(r, max_rank);
  for (const auto& row : classified) {
    if (static_cast<int>(row.j.j.size()) == r.rank) continue;  // L = G
    TableRow t;
    t.j = row.j;
    t.verdict = row.verdict;
    t.predicted = table_predicate(r, row.j);
    if (t.predicted) ++rep.checked;
    if (!t.matched()) rep.all_match = false;
    rep.rows.push_back(std::move(t));
  }
  return rep;
}

}  // namespace temperkit

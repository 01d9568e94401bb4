#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include "rat_linalg.hpp"
#include "temperkit/roots.hpp"

namespace temperkit {

unsigned LeviSpec::mask() const {
  unsigned m = 0;
  for (int i : j) m |= 1u << (i - 1);
  return m;
}

LeviSpec LeviSpec::from_mask(unsigned mask, int rank) {
  LeviSpec s;
  for (int i = 1; i <= rank; ++i)
    if (mask & (1u << (i - 1))) s.j.push_back(i);
  return s;
}

std::string LeviSpec::str() const {
  std::string s = "{";
  for (size_t k = 0; k < j.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(j[k]);
  }
  return s + "}";
}

namespace {

unsigned root_support(const Root& r) {
  unsigned m = 0;
  for (size_t i = 0; i < r.alpha.size(); ++i)
    if (r.alpha[i] != 0) m |= 1u << i;
  return m;
}

}  // namespace

WeightMultiset levi_roots(const RootDatum& r, const LeviSpec& j) {
  const unsigned mask = j.mask();
  WeightMultiset m;
  m.rank = r.dim;
  for (const auto& root : r.roots)
    if ((root_support(root) & ~mask) == 0) m.add(root.ambient, root.mult);
  return m;
}

WeightMultiset levi_roots_alpha(const RootDatum& r, const LeviSpec& j) {
  const unsigned mask = j.mask();
  WeightMultiset m;
  m.rank = r.rank;
  for (const auto& root : r.roots)
    if ((root_support(root) & ~mask) == 0) {
      WeightVector w(root.alpha.begin(), root.alpha.end());
      m.add(std::move(w), root.mult);
    }
  return m;
}

namespace {

std::string component_type_name(const RootDatum& r, const std::vector<int>& nodes,
                                const std::vector<const Root*>& roots_in) {
  const int rank = static_cast<int>(nodes.size());
  // non-reduced subsystems (a root together with its double) are BC type
  std::set<std::vector<int>> alphas;
  for (const Root* rt : roots_in) alphas.insert(rt->alpha);
  for (const Root* rt : roots_in) {
    std::vector<int> twice = rt->alpha;
    for (int& x : twice) x *= 2;
    if (alphas.count(twice)) return "bc" + std::to_string(rank);
  }
  const long long cnt = static_cast<long long>(roots_in.size());
  std::set<long long> norms;
  for (const Root* rt : roots_in)
    norms.insert(detail::dot_ll(rt->ambient, rt->ambient));
  if (norms.size() == 1) {
    if (cnt == static_cast<long long>(rank) * (rank + 1))
      return "a" + std::to_string(rank);  // covers b1 = c1 = a1 and d3 = a3
    if (cnt == 2LL * rank * (rank - 1)) return "d" + std::to_string(rank);
    if (rank == 6 && cnt == 72) return "e6";
    if (rank == 7 && cnt == 126) return "e7";
    if (rank == 8 && cnt == 240) return "e8";
  } else if (norms.size() == 2) {
    if (rank == 2 && cnt == 12) return "g2";
    if (rank == 4 && cnt == 48) return "f4";
    if (cnt == 2LL * rank * rank) {
      if (rank == 2) return "b2";  // b2 and c2 coincide
      const long long max_norm = *norms.rbegin();
      long long long_cnt = 0;
      for (const Root* rt : roots_in)
        if (detail::dot_ll(rt->ambient, rt->ambient) == max_norm) ++long_cnt;
      return (long_cnt == 2LL * rank ? "c" : "b") + std::to_string(rank);
    }
  }
  throw std::logic_error("component_type_name: unrecognized subsystem in " +
                         r.label.str());
}

}  // namespace

std::vector<LeviComponent> levi_components(const RootDatum& r, const LeviSpec& j) {
  std::vector<LeviComponent> out;
  std::vector<bool> in_j(r.rank + 1, false), used(r.rank + 1, false);
  for (int i : j.j) in_j[i] = true;
  for (int start = 1; start <= r.rank; ++start) {
    if (!in_j[start] || used[start]) continue;
    // connected component in the Dynkin graph restricted to J
    std::vector<int> nodes{start};
    used[start] = true;
    for (size_t head = 0; head < nodes.size(); ++head) {
      const int u = nodes[head];
      for (int v = 1; v <= r.rank; ++v)
        if (in_j[v] && !used[v] && r.cartan[u - 1][v - 1] != 0) {
          used[v] = true;
          nodes.push_back(v);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    unsigned mask = 0;
    for (int v : nodes) mask |= 1u << (v - 1);
    std::vector<const Root*> roots_in;
    for (const auto& root : r.roots)
      if ((root_support(root) & ~mask) == 0) roots_in.push_back(&root);
    LeviComponent comp;
    comp.nodes = nodes;
    comp.rank = static_cast<int>(nodes.size());
    comp.type_name = component_type_name(r, nodes, roots_in);
    out.push_back(std::move(comp));
  }
  return out;
}

std::string levi_type_string(const std::vector<LeviComponent>& components) {
  if (components.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += components[i].type_name;
  }
  return s;
}

namespace {

struct PackedRoots {
  int rank = 0;
  size_t count = 0;
  std::vector<std::array<std::int16_t, 8>> alpha;
  std::vector<std::int32_t> mult;
  std::vector<unsigned> support;
};

PackedRoots pack_roots(const RootDatum& r) {
  if (r.rank > 8)
    throw std::length_error("levi classification supports rank <= 8");
  PackedRoots p;
  p.rank = r.rank;
  p.count = r.roots.size();
  p.alpha.resize(p.count);
  p.mult.resize(p.count);
  p.support.resize(p.count);
  for (size_t t = 0; t < p.count; ++t) {
    const Root& rt = r.roots[t];
    p.alpha[t].fill(0);
    for (int x = 0; x < r.rank; ++x)
      p.alpha[t][x] = static_cast<std::int16_t>(rt.alpha[x]);
    p.mult[t] = static_cast<std::int32_t>(rt.mult);
    p.support[t] = root_support(rt);
  }
  return p;
}

struct CandidateBlock {
  int rank = 0;
  size_t count = 0;
  std::vector<std::int16_t> flat;  // count * rank, row-major

  TestVector extract(size_t c) const {
    TestVector y(rank);
    for (int x = 0; x < rank; ++x) y[x] = flat[c * rank + x];
    return y;
  }
};

CandidateBlock build_block(const RootDatum& r) {
  CandidateBlock cb;
  cb.rank = r.rank;
  const auto ys = edge_candidates_y(r);
  cb.count = ys.size();
  cb.flat.resize(cb.count * r.rank);
  for (size_t c = 0; c < cb.count; ++c)
    for (int x = 0; x < r.rank; ++x)
      cb.flat[c * r.rank + x] = static_cast<std::int16_t>(ys[c][x]);
  return cb;
}

// rho2 of the sub-multiset supported on `mask` at every candidate.
void accumulate_rho2(const PackedRoots& pr, const CandidateBlock& cb, unsigned mask,
                     std::vector<long long>& out) {
  out.assign(cb.count, 0);
  const int rank = cb.rank;
  for (size_t t = 0; t < pr.count; ++t) {
    if (pr.support[t] & ~mask) continue;
    const auto& a = pr.alpha[t];
    const long long m = pr.mult[t];
    const std::int16_t* y = cb.flat.data();
    for (size_t c = 0; c < cb.count; ++c, y += rank) {
      long long dot = 0;
      for (int x = 0; x < rank; ++x) dot += static_cast<long long>(a[x]) * y[x];
      out[c] += m * std::llabs(dot);
    }
  }
}

LeviVerdict classify_one(const RootDatum& r, const PackedRoots& pr,
                         const CandidateBlock& cb,
                         const std::vector<long long>& rho2_g, unsigned mask,
                         std::vector<long long>& scratch) {
  LeviVerdict v;
  accumulate_rho2(pr, cb, mask, scratch);
  long long best_num = 0, best_den = 1;
  size_t violation = cb.count;
  for (size_t c = 0; c < cb.count; ++c) {
    const long long l = scratch[c];
    const long long g = rho2_g[c];
    if (static_cast<__int128>(l) * best_den > static_cast<__int128>(best_num) * g) {
      best_num = l;
      best_den = g;
    }
    if (violation == cb.count && 2 * l > g) violation = c;
  }
  v.extremal_ratio = Rat(best_num, best_den);
  if (violation != cb.count) {
    v.tempered = false;
    v.witness = y_to_ambient_primitive(r, cb.extract(violation));
  }
  v.components = levi_components(r, LeviSpec::from_mask(mask, r.rank));
  v.levi_type = levi_type_string(v.components);
  return v;
}

std::vector<long long> full_rho2(const RootDatum& r, const PackedRoots& pr,
                                 const CandidateBlock& cb) {
  std::vector<long long> rho2_g;
  accumulate_rho2(pr, cb, ~0u, rho2_g);
  for (long long g : rho2_g)
    if (g <= 0)
      throw std::logic_error("rho_g vanished on a candidate of " + r.label.str());
  return rho2_g;
}

}  // namespace

LeviVerdict levi_tempered(const RootDatum& r, const LeviSpec& j) {
  for (int i : j.j)
    if (i < 1 || i > r.rank)
      throw std::invalid_argument("levi_tempered: subset index out of range");
  const PackedRoots pr = pack_roots(r);
  const CandidateBlock cb = build_block(r);
  const std::vector<long long> rho2_g = full_rho2(r, pr, cb);
  std::vector<long long> scratch;
  return classify_one(r, pr, cb, rho2_g, j.mask(), scratch);
}

std::vector<ClassifiedLevi> classify_levis(const RootDatum& r, int max_rank) {
  if (r.rank > max_rank)
    throw std::length_error("classify_levis: rank " + std::to_string(r.rank) +
                            " exceeds the cap " + std::to_string(max_rank));
  const PackedRoots pr = pack_roots(r);
  const CandidateBlock cb = build_block(r);
  const std::vector<long long> rho2_g = full_rho2(r, pr, cb);
  std::vector<long long> scratch;
  std::vector<ClassifiedLevi> out;
  const unsigned total = 1u << r.rank;
  out.reserve(total);
  for (unsigned mask = 0; mask < total; ++mask) {
    ClassifiedLevi row;
    row.j = LeviSpec::from_mask(mask, r.rank);
    row.verdict = classify_one(r, pr, cb, rho2_g, mask, scratch);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace temperkit

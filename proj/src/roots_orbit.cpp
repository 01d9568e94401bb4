#include <cstdint>
#include <set>
#include <unordered_set>

#include "rat_linalg.hpp"
#include "temperkit/roots.hpp"

namespace temperkit {

namespace {

// Reflection in coweight-basis coordinates: y_j(s_i Y) = y_j - y_i * cartan[j][i].
TestVector reflect_y(const std::vector<std::vector<int>>& cartan, const TestVector& y,
                     int i) {
  TestVector out = y;
  const Coord yi = y[i];
  if (yi == 0) return out;
  for (size_t j = 0; j < y.size(); ++j) out[j] -= yi * cartan[j][i];
  return out;
}

// Coweight-orbit coordinates are root coefficients, bounded by 6 across the
// whole catalog; one byte per coordinate packs a rank <= 8 vector.
std::uint64_t pack_y(const TestVector& y) {
  std::uint64_t key = 0;
  for (size_t j = 0; j < y.size(); ++j) {
    if (y[j] < -127 || y[j] > 127)
      throw std::logic_error("orbit coordinate out of packing range");
    const auto byte = static_cast<std::uint8_t>(static_cast<std::int8_t>(y[j]));
    key |= static_cast<std::uint64_t>(byte) << (8 * j);
  }
  return key;
}

std::vector<TestVector> orbit_y(const RootDatum& r, TestVector start) {
  std::vector<TestVector> out;
  out.push_back(std::move(start));
  if (r.rank <= 8) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(1024);
    seen.insert(pack_y(out[0]));
    for (size_t head = 0; head < out.size(); ++head) {
      const TestVector cur = out[head];  // copy; out may reallocate
      for (int i = 0; i < r.rank; ++i) {
        TestVector nxt = reflect_y(r.cartan, cur, i);
        if (seen.insert(pack_y(nxt)).second) out.push_back(std::move(nxt));
      }
    }
  } else {
    std::set<TestVector> seen;
    seen.insert(out[0]);
    for (size_t head = 0; head < out.size(); ++head) {
      const TestVector cur = out[head];
      for (int i = 0; i < r.rank; ++i) {
        TestVector nxt = reflect_y(r.cartan, cur, i);
        if (seen.insert(nxt).second) out.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<TestVector> edge_candidates_y(const RootDatum& r) {
  std::vector<TestVector> all;
  for (int i = 0; i < r.rank; ++i) {
    TestVector e(r.rank, 0);
    e[i] = 1;
    auto orb = orbit_y(r, std::move(e));
    all.insert(all.end(), std::make_move_iterator(orb.begin()),
               std::make_move_iterator(orb.end()));
  }
  return all;
}

TestVector y_to_ambient_primitive(const RootDatum& r, const TestVector& y) {
  detail::RatVec amb(r.dim, Rat(0));
  for (int j = 0; j < r.rank; ++j) {
    if (y[j] == 0) continue;
    for (int x = 0; x < r.dim; ++x) amb[x] += Rat(y[j]) * r.coweights_exact[j][x];
  }
  return detail::primitive_integer(amb);
}

std::vector<TestVector> edge_candidates(const RootDatum& r) {
  std::vector<TestVector> out;
  for (const auto& y : edge_candidates_y(r)) out.push_back(y_to_ambient_primitive(r, y));
  return out;
}

std::vector<TestVector> weyl_orbit(const RootDatum& r, const TestVector& v) {
  if (static_cast<int>(v.size()) != r.dim)
    throw std::invalid_argument("weyl_orbit: vector length does not match ambient dim");
  constexpr size_t kOrbitCap = 5'000'000;
  std::vector<detail::RatVec> out;
  std::set<detail::RatVec> seen;
  detail::RatVec start(v.size());
  for (size_t i = 0; i < v.size(); ++i) start[i] = Rat(v[i]);
  out.push_back(start);
  seen.insert(start);
  for (size_t head = 0; head < out.size(); ++head) {
    const detail::RatVec cur = out[head];
    for (int i = 0; i < r.rank; ++i) {
      // s_i(v) = v - (2 <alpha_i, v> / <alpha_i, alpha_i>) alpha_i
      Rat num(0);
      for (int x = 0; x < r.dim; ++x) num += Rat(r.simple_roots[i][x]) * cur[x];
      if (num == Rat(0)) continue;
      const Rat c = Rat(2) * num /
                    Rat(detail::dot_ll(r.simple_roots[i], r.simple_roots[i]));
      detail::RatVec nxt = cur;
      for (int x = 0; x < r.dim; ++x) nxt[x] -= c * Rat(r.simple_roots[i][x]);
      if (seen.insert(nxt).second) {
        out.push_back(std::move(nxt));
        if (out.size() > kOrbitCap)
          throw std::length_error("weyl_orbit: orbit exceeds the enumeration cap");
      }
    }
  }
  // Clear denominators uniformly so the result is a single scaled orbit.
  long long lcm = 1;
  for (const auto& vec : out)
    for (const Rat& x : vec)
      lcm = lcm / std::gcd(lcm, x.denominator()) * x.denominator();
  std::vector<TestVector> res;
  res.reserve(out.size());
  for (const auto& vec : out) {
    TestVector w(vec.size());
    for (size_t i = 0; i < vec.size(); ++i)
      w[i] = detail::rat_to_integer(vec[i] * lcm);
    res.push_back(std::move(w));
  }
  return res;
}

}  // namespace temperkit

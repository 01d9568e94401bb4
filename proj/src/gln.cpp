#include "temperkit/gln.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

#include "temperkit/subsets.hpp"

namespace temperkit {

int Composition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

void Composition::validate() const {
  if (parts.empty())
    throw std::invalid_argument("composition: at least one part required");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("composition: parts must be >= 1");
}

Composition Composition::parse(const std::string& text) {
  Composition c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("composition: cannot parse part '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size())
      throw std::invalid_argument("composition: trailing junk in part '" + tok + "'");
    c.parts.push_back(v);
  }
  c.validate();
  return c;
}

std::string Composition::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

int d_value(const Composition& p) {
  p.validate();
  return *std::max_element(p.parts.begin(), p.parts.end());
}

bool tensor_tempered(const Composition& p, const Composition& q) {
  const int n = p.n();
  if (q.n() != n)
    throw std::invalid_argument("tensor_tempered: compositions of different n (" +
                                std::to_string(n) + " vs " + std::to_string(q.n()) + ")");
  return d_value(p) + d_value(q) <= n + 1;
}

ClosureViolation::ClosureViolation(int i_, int j_, int k_)
    : std::runtime_error("epsilon matrix not bracket-closed: eps(" +
                         std::to_string(i_) + "," + std::to_string(j_) +
                         ")=eps(" + std::to_string(j_) + "," + std::to_string(k_) +
                         ")=1 but eps(" + std::to_string(i_) + "," +
                         std::to_string(k_) + ")=0"),
      i(i_), j(j_), k(k_) {}

EpsilonMatrix::EpsilonMatrix(int n_) : n(n_), bits(static_cast<size_t>(n_) * n_, 0) {
  if (n_ < 1) throw std::invalid_argument("epsilon matrix: n must be >= 1");
  for (int i = 0; i < n; ++i) set(i, i, true);
}

EpsilonMatrix EpsilonMatrix::identity(int n) { return EpsilonMatrix(n); }

EpsilonMatrix EpsilonMatrix::all_ones(int n) {
  EpsilonMatrix e(n);
  std::fill(e.bits.begin(), e.bits.end(), 1);
  return e;
}

void EpsilonMatrix::validate_closure() const {
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (i != k && at(j, k) && !at(i, k)) throw ClosureViolation(i + 1, j + 1, k + 1);
    }
}

bool EpsilonMatrix::is_closed() const {
  try {
    validate_closure();
  } catch (const ClosureViolation&) {
    return false;
  }
  return true;
}

void EpsilonMatrix::close() {
  // Boolean Floyd-Warshall; diagonal stays 1.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (at(i, j))
        for (int k = 0; k < n; ++k)
          if (at(j, k)) set(i, k, true);
}

namespace {

std::vector<int> prefix_sums(const Composition& c) {
  std::vector<int> ns(c.parts.size() + 1, 0);
  for (size_t a = 0; a < c.parts.size(); ++a) ns[a + 1] = ns[a] + c.parts[a];
  return ns;
}

// Per-row block bounds [start, end) of the composition.
void block_bounds(const Composition& c, std::vector<int>& start, std::vector<int>& end) {
  const auto ns = prefix_sums(c);
  const int n = ns.back();
  start.resize(n);
  end.resize(n);
  for (size_t a = 0; a < c.parts.size(); ++a)
    for (int i = ns[a]; i < ns[a + 1]; ++i) {
      start[i] = ns[a];
      end[i] = ns[a + 1];
    }
}

}  // namespace

EpsilonMatrix epsilon_from_parabolic(const Composition& p, Orientation o) {
  p.validate();
  const int n = p.n();
  EpsilonMatrix e(n);
  std::vector<int> start, end;
  block_bounds(p, start, end);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool in = (o == Orientation::upper) ? j >= start[i] : j < end[i];
      if (in) e.set(i, j, true);
    }
  return e;
}

EpsilonMatrix epsilon_intersection(const Composition& p, const Composition& q) {
  const int n = p.n();
  if (q.n() != n)
    throw std::invalid_argument("epsilon_intersection: compositions of different n");
  Composition q_rev = q;
  std::reverse(q_rev.parts.begin(), q_rev.parts.end());
  const EpsilonMatrix ep = epsilon_from_parabolic(p, Orientation::upper);
  const EpsilonMatrix eq = epsilon_from_parabolic(q_rev, Orientation::lower);
  EpsilonMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.set(i, j, ep.at(i, j) && eq.at(i, j));
  return h;
}

EpsilonMatrix block_diagonal_epsilon(const Composition& parts, int n) {
  parts.validate();
  if (parts.n() > n)
    throw std::invalid_argument("block_diagonal_epsilon: parts sum exceeds n");
  EpsilonMatrix e(n);
  int off = 0;
  for (int p : parts.parts) {
    for (int i = off; i < off + p; ++i)
      for (int j = off; j < off + p; ++j) e.set(i, j, true);
    off += p;
  }
  return e;
}

WeightMultiset adjoint_weights(const EpsilonMatrix& h, long long field_mult) {
  h.validate_closure();
  WeightMultiset v;
  v.rank = h.n;
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j) {
      if (i == j || !h.at(i, j)) continue;
      WeightVector w(h.n, 0);
      w[i] = 1;
      w[j] = -1;
      v.add(std::move(w), field_mult);
    }
  return v;
}

WeightMultiset gl_adjoint_weights(int n, long long field_mult) {
  return adjoint_weights(EpsilonMatrix::all_ones(n), field_mult);
}

int ad_image_dim(const EpsilonMatrix& h, int i) {
  int d = 0;
  for (int j = 0; j < h.n; ++j) {
    if (j == i) continue;
    d += (h.at(i, j) ? 1 : 0) + (h.at(j, i) ? 1 : 0);
  }
  return d;
}

bool tempered_fast(const EpsilonMatrix& h) {
  h.validate_closure();
  for (int i = 0; i < h.n; ++i)
    if (ad_image_dim(h, i) > h.n - 1) return false;
  return true;
}

TemperednessReport tempered_bruteforce(const EpsilonMatrix& h, int max_n,
                                       long long field_mult) {
  if (h.n > max_n)
    throw std::length_error("tempered_bruteforce: n = " + std::to_string(h.n) +
                            " exceeds the exhaustive cap " + std::to_string(max_n));
  const WeightMultiset hw = adjoint_weights(h, field_mult);
  const WeightMultiset gw = gl_adjoint_weights(h.n, field_mult);
  TemperednessReport rep;
  long long best_num = 0, best_den = 1;
  for_each_proper_subset(h.n, [&](const std::vector<int>& subset) {
    const TestVector y = indicator_vector(h.n, subset);
    const long long rh = rho2_eval(hw, y);
    const long long rg = rho2_eval(gw, y);
    if (static_cast<__int128>(rh) * best_den > static_cast<__int128>(best_num) * rg) {
      best_num = rh;
      best_den = rg;
    }
    if (2 * rh > rg && !rep.witness) {
      rep.tempered = false;
      rep.witness = subset;
    }
    return true;
  });
  rep.extremal_ratio = Rat(best_num, best_den);
  return rep;
}

LpCheck lp_criterion(const EpsilonMatrix& h, int p, SubsetMode mode,
                     long long field_mult, int max_n) {
  if (p < 2) throw std::invalid_argument("lp_criterion: p must be >= 2");
  const WeightMultiset hw = adjoint_weights(h, field_mult);
  const WeightMultiset gw = gl_adjoint_weights(h.n, field_mult);
  LpCheck res;
  auto check = [&](const std::vector<int>& subset) {
    const TestVector y = indicator_vector(h.n, subset);
    if (p * rho2_eval(hw, y) > (p - 1) * rho2_eval(gw, y)) {
      res.holds = false;
      res.witness = subset;
      return false;
    }
    return true;
  };
  if (mode == SubsetMode::singletons) {
    for (int i = 1; i <= h.n; ++i)
      if (!check({i})) break;
  } else {
    if (h.n > max_n)
      throw std::length_error("lp_criterion: n exceeds the exhaustive cap");
    for_each_proper_subset(h.n, check);
  }
  return res;
}

void QuadForm::validate() const {
  if (r < 1) throw std::invalid_argument("quad form: r must be >= 1");
  if (static_cast<int>(a.size()) != r || static_cast<int>(n_vec.size()) != r)
    throw std::invalid_argument("quad form: dimension mismatch");
  for (int k = 0; k < r; ++k) {
    if (static_cast<int>(a[k].size()) != r)
      throw std::invalid_argument("quad form: matrix is not r x r");
    if (a[k][k] != 1) throw std::invalid_argument("quad form: diagonal must be 1");
    if (n_vec[k] < 1) throw std::invalid_argument("quad form: n_k must be >= 1");
    for (int l = 0; l < r; ++l) {
      if (a[k][l] != a[l][k]) throw std::invalid_argument("quad form: matrix not symmetric");
      if (k != l && a[k][l] > 0)
        throw std::invalid_argument("quad form: off-diagonal entries must be <= 0");
    }
  }
}

long long quad_f(const QuadForm& q, const std::vector<long long>& m) {
  q.validate();
  if (static_cast<int>(m.size()) != q.r)
    throw std::invalid_argument("quad_f: m has wrong length");
  for (int k = 0; k < q.r; ++k)
    if (m[k] < 0 || m[k] > q.n_vec[k])
      throw std::invalid_argument("quad_f: m outside the box [0, n]");
  long long acc = 0;
  for (int k = 0; k < q.r; ++k)
    for (int l = 0; l < q.r; ++l) acc += q.a[k][l] * m[k] * (q.n_vec[l] - m[l]);
  return acc;
}

QuadCheckResult quad_lemma_check(const QuadForm& q, long long max_points) {
  q.validate();
  long long points = 1;
  for (int k = 0; k < q.r; ++k) {
    points *= q.n_vec[k] + 1;
    if (points > max_points)
      throw std::length_error("quad_lemma_check: box exceeds the exhaustive cap");
  }
  QuadCheckResult res;
  for (int l = 0; l < q.r; ++l) {
    std::vector<long long> e(q.r, 0);
    e[l] = 1;
    if (quad_f(q, e) > 0) {
      res.outcome = QuadOutcome::premise_failed;
      res.witness = e;
      return res;
    }
  }
  std::vector<long long> m(q.r, 0);
  while (true) {
    if (quad_f(q, m) > 0) {
      res.outcome = QuadOutcome::violated;
      res.witness = m;
      return res;
    }
    int k = 0;
    while (k < q.r && m[k] == q.n_vec[k]) m[k++] = 0;
    if (k == q.r) break;
    ++m[k];
  }
  return res;
}

std::optional<Rat> lp_exponent(const Composition& parts, int n) {
  parts.validate();
  if (parts.n() > n)
    throw std::invalid_argument("lp_exponent: parts sum exceeds n");
  if (n == 1) return Rat(0);
  const EpsilonMatrix h = block_diagonal_epsilon(parts, n);
  const WeightMultiset hw = adjoint_weights(h);
  WeightMultiset quot;  // weights of g/h: the complement of h in gl_n
  quot.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || h.at(i, j)) continue;
      WeightVector w(n, 0);
      w[i] = 1;
      w[j] = -1;
      quot.add(std::move(w), 1);
    }
  const auto candidates = proper_subset_indicators(n);
  for (const auto& y : candidates)
    if (rho2_eval(hw, y) > 0 && rho2_eval(quot, y) == 0) return std::nullopt;
  try {
    return max_ratio(hw, quot, candidates).value;
  } catch (const std::domain_error&) {
    return Rat(0);  // rho_{g/h} vanished everywhere, and so did rho_h
  }
}

bool almost_lp(const Composition& parts, int n, int p) {
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument(
        "almost_lp: the criterion is stated for positive even p");
  const auto exponent = lp_exponent(parts, n);
  if (!exponent) return false;  // unbounded exponent
  return *exponent <= Rat(p - 1);
}

bool almost_lp_closed_form(const Composition& parts, int n, int p) {
  if (p < 2 || p % 2 != 0)
    throw std::invalid_argument(
        "almost_lp_closed_form: the criterion is stated for positive even p");
  const int m = d_value(parts);
  return Rat(m) <= Rat(n) - Rat(n - 1, p);
}

std::optional<Rat> c_value(const EpsilonMatrix& h) {
  int maxdim = 0;
  for (int i = 0; i < h.n; ++i) maxdim = std::max(maxdim, ad_image_dim(h, i));
  if (maxdim == 0) return std::nullopt;
  return Rat(2 * (h.n - 1), maxdim);
}

EpsilonMatrix random_closed_epsilon(int n, unsigned long long seed, double density) {
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("random_closed_epsilon: density must be in [0,1]");
  EpsilonMatrix e(n);
  std::seed_seq seq{static_cast<unsigned int>(seed & 0xffffffffu),
                    static_cast<unsigned int>(seed >> 32),
                    static_cast<unsigned int>(n)};
  std::mt19937 gen(seq);
  // Raw 32-bit draws against a fixed threshold keep the stream portable;
  // distribution adapters are implementation-defined.
  const unsigned long long threshold =
      static_cast<unsigned long long>(density * 4294967296.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (static_cast<unsigned long long>(gen()) < threshold) e.set(i, j, true);
    }
  e.close();
  return e;
}

EpsilonMatrix parse_epsilon(std::istream& in, std::vector<std::string>* warnings) {
  std::string cells;
  char c;
  while (in.get(c)) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string("epsilon grid: unexpected character '") +
                                  c + "'");
    cells.push_back(c);
  }
  if (cells.empty()) throw std::invalid_argument("epsilon grid: empty input");
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(cells.size()))));
  if (static_cast<size_t>(n) * n != cells.size())
    throw std::invalid_argument("epsilon grid: " + std::to_string(cells.size()) +
                                " cells do not form a square matrix");
  EpsilonMatrix e(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool v = cells[static_cast<size_t>(i) * n + j] == '1';
      if (i == j && !v && warnings)
        warnings->push_back("diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") given as 0; normalized to 1 "
                            "(h is stored as h + a)");
      e.set(i, j, i == j ? true : v);
    }
  return e;
}

std::string epsilon_grid(const EpsilonMatrix& h) {
  std::string s;
  for (int i = 0; i < h.n; ++i) {
    for (int j = 0; j < h.n; ++j) s += h.at(i, j) ? '1' : '0';
    s += '\n';
  }
  return s;
}

}  // namespace temperkit

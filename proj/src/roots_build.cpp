#include <algorithm>
#include <cctype>
#include <numeric>

#include "rat_linalg.hpp"
#include "temperkit/roots.hpp"

namespace temperkit {

using detail::RatMat;
using detail::RatVec;
using detail::dot_ll;
using detail::gram_matrix;
using detail::pair_rat;
using detail::primitive_integer;
using detail::rat_to_integer;
using detail::solve_linear;

namespace {

WeightVector unit(int dim, int i, long long c = 1) {
  WeightVector v(dim, 0);
  v[i] = c;
  return v;
}

struct RawRoot {
  WeightVector v;
  long long mult;
};

// Fills alpha coordinates, Cartan matrix and coweights from the ambient
// realization; every derived quantity is integer-checked.
RootDatum assemble(GroupLabel label, int dim, std::vector<RawRoot> raw,
                   std::vector<WeightVector> simple,
                   std::vector<RatVec> coweights_exact = {}) {
  RootDatum r;
  r.label = label;
  r.dim = dim;
  r.rank = static_cast<int>(simple.size());
  r.simple_roots = std::move(simple);

  const RatMat gram = gram_matrix(r.simple_roots);

  // alpha coordinates: c solves  Gram c = (<alpha_i, root>)_i
  for (auto& rr : raw) {
    RatVec rhs(r.rank);
    for (int i = 0; i < r.rank; ++i) rhs[i] = Rat(dot_ll(r.simple_roots[i], rr.v));
    const RatVec c = solve_linear(gram, rhs);
    Root root;
    root.ambient = std::move(rr.v);
    root.mult = rr.mult;
    root.alpha.resize(r.rank);
    for (int i = 0; i < r.rank; ++i)
      root.alpha[i] = static_cast<int>(rat_to_integer(c[i]));
    r.roots.push_back(std::move(root));
  }

  // Cartan matrix a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  r.cartan.assign(r.rank, std::vector<int>(r.rank, 0));
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < r.rank; ++j) {
      const Rat a = Rat(2 * dot_ll(r.simple_roots[i], r.simple_roots[j]),
                        dot_ll(r.simple_roots[j], r.simple_roots[j]));
      r.cartan[i][j] = static_cast<int>(rat_to_integer(a));
    }

  // Fundamental coweights: exact duals with <alpha_i, d_j> = delta_ij,
  // either supplied (integer-friendly picks) or solved inside span(simple).
  if (coweights_exact.empty()) {
    for (int j = 0; j < r.rank; ++j) {
      RatVec e(r.rank, Rat(0));
      e[j] = Rat(1);
      const RatVec c = solve_linear(gram, e);
      RatVec d(dim, Rat(0));
      for (int k = 0; k < r.rank; ++k)
        for (int x = 0; x < dim; ++x) d[x] += c[k] * Rat(r.simple_roots[k][x]);
      coweights_exact.push_back(std::move(d));
    }
  }
  r.coweights_exact = std::move(coweights_exact);
  for (const auto& d : r.coweights_exact) r.coweights.push_back(primitive_integer(d));

  r.validate();
  return r;
}

std::vector<RawRoot> type_a_roots(int n_coords, long long mult) {
  std::vector<RawRoot> roots;
  for (int i = 0; i < n_coords; ++i)
    for (int j = 0; j < n_coords; ++j) {
      if (i == j) continue;
      WeightVector v(n_coords, 0);
      v[i] = 1;
      v[j] = -1;
      roots.push_back({std::move(v), mult});
    }
  return roots;
}

std::vector<WeightVector> chain_simple_roots(int n_coords) {
  std::vector<WeightVector> simple;
  for (int i = 0; i + 1 < n_coords; ++i) {
    WeightVector v(n_coords, 0);
    v[i] = 1;
    v[i + 1] = -1;
    simple.push_back(std::move(v));
  }
  return simple;
}

std::vector<RatVec> prefix_coweights(int rank, int dim) {
  std::vector<RatVec> cw;
  for (int j = 1; j <= rank; ++j) {
    RatVec d(dim, Rat(0));
    for (int i = 0; i < j; ++i) d[i] = Rat(1);
    cw.push_back(std::move(d));
  }
  return cw;
}

// B/C/D-style pair roots +-e_i +- e_j, i < j.
void add_pair_roots(std::vector<RawRoot>& roots, int n, long long mult) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          WeightVector v(n, 0);
          v[i] = si;
          v[j] = sj;
          roots.push_back({std::move(v), mult});
        }
}

void add_axis_roots(std::vector<RawRoot>& roots, int n, long long scale,
                    long long mult) {
  for (int i = 0; i < n; ++i)
    for (int s : {1, -1}) roots.push_back({unit(n, i, s * scale), mult});
}

enum class BcdKind { B, C, D, BC };

// Shared skeleton of the classical families; multiplicities per root class.
RootDatum build_bcd(GroupLabel label, int q, BcdKind kind, long long m_pair,
                    long long m_short, long long m_long) {
  std::vector<RawRoot> roots;
  if (q >= 2) add_pair_roots(roots, q, m_pair);
  if (kind == BcdKind::B || kind == BcdKind::BC) add_axis_roots(roots, q, 1, m_short);
  if (kind == BcdKind::C || kind == BcdKind::BC) add_axis_roots(roots, q, 2, m_long);

  std::vector<WeightVector> simple = chain_simple_roots(q);
  // chain_simple_roots on q coords yields q-1 roots e_i - e_{i+1}
  std::vector<RatVec> cw = prefix_coweights(q - 1, q);
  switch (kind) {
    case BcdKind::B:
    case BcdKind::BC:
      simple.push_back(unit(q, q - 1));
      cw.push_back(RatVec(q, Rat(1)));
      break;
    case BcdKind::C: {
      simple.push_back(unit(q, q - 1, 2));
      cw.push_back(RatVec(q, Rat(1, 2)));
      break;
    }
    case BcdKind::D: {
      if (q < 3)
        throw std::invalid_argument("type D needs rank >= 3");
      // the chain already ends with e_{q-1} - e_q; add the fork root
      WeightVector fork_root(q, 0);
      fork_root[q - 2] = 1;
      fork_root[q - 1] = 1;
      simple.push_back(std::move(fork_root));
      cw.pop_back();  // the last prefix vector is not the dual of the D fork
      RatVec fork1(q, Rat(1, 2)), fork2(q, Rat(1, 2));
      fork1[q - 1] = Rat(-1, 2);
      cw.push_back(std::move(fork1));
      cw.push_back(std::move(fork2));
      break;
    }
  }
  return assemble(label, q, std::move(roots), std::move(simple), std::move(cw));
}

RootDatum build_g2(GroupLabel label) {
  std::vector<RawRoot> roots;
  for (auto& rr : type_a_roots(3, 1)) roots.push_back(std::move(rr));
  // +-(2e_i - e_j - e_k)
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      WeightVector v(3, -s);
      v[i] = 2 * s;
      roots.push_back({std::move(v), 1});
    }
  std::vector<WeightVector> simple = {
      {1, -1, 0},   // short
      {-2, 1, 1},   // long
  };
  return assemble(label, 3, std::move(roots), std::move(simple));
}

RootDatum build_f4(GroupLabel label) {
  // Doubled realization keeps every coordinate an integer.
  std::vector<RawRoot> roots;
  add_axis_roots(roots, 4, 2, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          WeightVector v(4, 0);
          v[i] = 2 * si;
          v[j] = 2 * sj;
          roots.push_back({std::move(v), 1});
        }
  for (int mask = 0; mask < 16; ++mask) {
    WeightVector v(4);
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    roots.push_back({std::move(v), 1});
  }
  std::vector<WeightVector> simple = {
      {0, 2, -2, 0},
      {0, 0, 2, -2},
      {0, 0, 0, 2},
      {1, -1, -1, -1},
  };
  return assemble(label, 4, std::move(roots), std::move(simple));
}

std::vector<RawRoot> e8_roots() {
  // Doubled realization: 2(+-e_i +- e_j) and {+-1}^8 with an even number of
  // minus signs.
  std::vector<RawRoot> roots;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          WeightVector v(8, 0);
          v[i] = 2 * si;
          v[j] = 2 * sj;
          roots.push_back({std::move(v), 1});
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    WeightVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    roots.push_back({std::move(v), 1});
  }
  return roots;
}

std::vector<WeightVector> e8_simple_roots() {
  return {
      {1, -1, -1, -1, -1, -1, -1, 1},
      {2, 2, 0, 0, 0, 0, 0, 0},
      {-2, 2, 0, 0, 0, 0, 0, 0},
      {0, -2, 2, 0, 0, 0, 0, 0},
      {0, 0, -2, 2, 0, 0, 0, 0},
      {0, 0, 0, -2, 2, 0, 0, 0},
      {0, 0, 0, 0, -2, 2, 0, 0},
      {0, 0, 0, 0, 0, -2, 2, 0},
  };
}

RootDatum build_e(GroupLabel label, int rank) {
  // E6 and E7 are carved out of E8: keep the roots supported on the first
  // `rank` Bourbaki simple roots.
  RootDatum e8 = assemble(GroupLabel::split(SplitType::E, 8), 8, e8_roots(),
                          e8_simple_roots());
  if (rank == 8) {
    e8.label = label;
    return e8;
  }
  std::vector<RawRoot> roots;
  for (const auto& root : e8.roots) {
    bool inside = true;
    for (int i = rank; i < 8; ++i)
      if (root.alpha[i] != 0) inside = false;
    if (inside) roots.push_back({root.ambient, root.mult});
  }
  std::vector<WeightVector> simple(e8.simple_roots.begin(),
                                   e8.simple_roots.begin() + rank);
  return assemble(label, 8, std::move(roots), std::move(simple));
}

long long expected_split_count(SplitType t, int rank) {
  switch (t) {
    case SplitType::A: return static_cast<long long>(rank) * (rank + 1);
    case SplitType::B:
    case SplitType::C: return 2LL * rank * rank;
    case SplitType::D: return 2LL * rank * (rank - 1);
    case SplitType::E: return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case SplitType::F: return 48;
    case SplitType::G: return 12;
  }
  return -1;
}

}  // namespace

WeightMultiset RootDatum::root_multiset() const {
  WeightMultiset m;
  m.rank = dim;
  for (const auto& r : roots) m.add(r.ambient, r.mult);
  return m;
}

WeightMultiset RootDatum::root_multiset_alpha() const {
  WeightMultiset m;
  m.rank = rank;
  for (const auto& r : roots) {
    WeightVector w(r.alpha.begin(), r.alpha.end());
    m.add(std::move(w), r.mult);
  }
  return m;
}

long long RootDatum::total_multiplicity() const {
  long long t = 0;
  for (const auto& r : roots) t += r.mult;
  return t;
}

void RootDatum::validate() const {
  if (rank < 1 || dim < rank)
    throw std::logic_error("root datum: bad rank/dim");
  // negation closure with equal multiplicities
  for (const auto& r : roots) {
    WeightVector neg(r.ambient.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -r.ambient[i];
    bool found = false;
    for (const auto& s : roots)
      if (s.ambient == neg && s.mult == r.mult) {
        found = true;
        break;
      }
    if (!found)
      throw std::logic_error("root datum: roots are not closed under negation");
  }
  // alpha coordinates reproduce the root and have a consistent sign
  for (const auto& r : roots) {
    WeightVector rebuilt(dim, 0);
    bool pos = false, neg = false;
    for (int i = 0; i < rank; ++i) {
      if (r.alpha[i] > 0) pos = true;
      if (r.alpha[i] < 0) neg = true;
      for (int x = 0; x < dim; ++x) rebuilt[x] += r.alpha[i] * simple_roots[i][x];
    }
    if (rebuilt != r.ambient)
      throw std::logic_error("root datum: alpha coordinates do not rebuild root");
    if (pos == neg)  // both (mixed sign) or neither (zero root)
      throw std::logic_error("root datum: root is not one-signed in the simple basis");
  }
  // Cartan sanity
  for (int i = 0; i < rank; ++i) {
    if (cartan[i][i] != 2) throw std::logic_error("root datum: Cartan diagonal != 2");
    for (int j = 0; j < rank; ++j) {
      if (i != j && cartan[i][j] > 0)
        throw std::logic_error("root datum: positive off-diagonal Cartan entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw std::logic_error("root datum: Cartan zero pattern not symmetric");
    }
  }
  // exact duals pair to delta_ij; primitive coweights keep the sign pattern
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < rank; ++i) {
      const Rat have = pair_rat(simple_roots[i], coweights_exact[j]);
      if (have != (i == j ? Rat(1) : Rat(0)))
        throw std::logic_error("root datum: coweight pairing is not delta_ij");
      const long long prim = dot_ll(simple_roots[i], coweights[j]);
      if (i == j ? prim <= 0 : prim != 0)
        throw std::logic_error("root datum: primitive coweight pairing pattern broken");
    }
  }
}

RootDatum build_split(SplitType t, int rank) {
  const GroupLabel label = GroupLabel::split(t, rank);
  RootDatum r;
  switch (t) {
    case SplitType::A: {
      if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
      const int dim = rank + 1;
      r = assemble(label, dim, type_a_roots(dim, 1), chain_simple_roots(dim),
                   prefix_coweights(rank, dim));
      break;
    }
    case SplitType::B:
      if (rank < 2) throw std::invalid_argument("B_n needs n >= 2");
      r = build_bcd(label, rank, BcdKind::B, 1, 1, 0);
      break;
    case SplitType::C:
      if (rank < 2) throw std::invalid_argument("C_n needs n >= 2");
      r = build_bcd(label, rank, BcdKind::C, 1, 0, 1);
      break;
    case SplitType::D:
      if (rank < 3) throw std::invalid_argument("D_n needs n >= 3 (n = 3 is a_3)");
      r = build_bcd(label, rank, BcdKind::D, 1, 0, 0);
      break;
    case SplitType::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
      r = build_e(label, rank);
      break;
    case SplitType::F:
      if (rank != 4) throw std::invalid_argument("F_n needs n = 4");
      r = build_f4(label);
      break;
    case SplitType::G:
      if (rank != 2) throw std::invalid_argument("G_n needs n = 2");
      r = build_g2(label);
      break;
  }
  if (static_cast<long long>(r.roots.size()) != expected_split_count(t, rank))
    throw std::logic_error("build_split: root count self-check failed");
  return r;
}

RootDatum build_complex(SplitType t, int rank) {
  RootDatum r = scale_multiplicities(build_split(t, rank), 2);
  r.label = GroupLabel::complexified(t, rank);
  return r;
}

RootDatum scale_multiplicities(RootDatum datum, long long factor) {
  if (factor < 1)
    throw std::invalid_argument("scale_multiplicities: factor must be >= 1");
  for (auto& r : datum.roots) r.mult *= factor;
  return datum;
}

RealFormDims real_form_dims(const GroupLabel& label) {
  if (label.kind != GroupLabel::Kind::real_form)
    throw std::invalid_argument("real_form_dims: not a real form label");
  const long long p = label.p, q = label.q;
  RealFormDims d;
  switch (label.family) {
    case RealFamily::su:
      d.dim_g = (p + q) * (p + q) - 1;
      d.dim_centralizer = (p - q) * (p - q) + 2 * q - 1;
      break;
    case RealFamily::so:
      d.dim_g = (p + q) * (p + q - 1) / 2;
      d.dim_centralizer = (p - q) * (p - q - 1) / 2 + q;
      break;
    case RealFamily::sp:
      d.dim_g = (p + q) * (2 * (p + q) + 1);
      d.dim_centralizer = (p - q) * (2 * (p - q) + 1) + 4 * q;
      break;
    case RealFamily::su_star:
      d.dim_g = 4 * p * p - 1;
      d.dim_centralizer = 4 * p - 1;
      break;
    case RealFamily::so_star:
      d.dim_g = p * (2 * p - 1);
      d.dim_centralizer = p % 2 == 0 ? 2 * p : 2 * p - 1;
      break;
  }
  return d;
}

RootDatum build_restricted(const GroupLabel& label) {
  if (label.kind != GroupLabel::Kind::real_form)
    throw std::invalid_argument("build_restricted: not a real form label");
  const int p = label.p, q = label.q;
  RootDatum r;
  switch (label.family) {
    case RealFamily::su: {
      if (q < 1 || p < q)
        throw std::invalid_argument("su(p,q) needs p >= q >= 1");
      if (p == q)
        r = build_bcd(label, q, BcdKind::C, 2, 0, 1);
      else
        r = build_bcd(label, q, BcdKind::BC, 2, 2 * (p - q), 1);
      break;
    }
    case RealFamily::so: {
      if (q < 1 || p < q || p + q < 3)
        throw std::invalid_argument("so(p,q) needs p >= q >= 1, p + q >= 3");
      if (p == q && q == 2)
        throw std::invalid_argument("so(2,2) is not simple");
      if (p == q)
        r = build_bcd(label, q, BcdKind::D, 1, 0, 0);
      else
        r = build_bcd(label, q, BcdKind::B, 1, p - q, 0);
      break;
    }
    case RealFamily::sp: {
      if (q < 1 || p < q)
        throw std::invalid_argument("sp(p,q) needs p >= q >= 1");
      if (p == q)
        r = build_bcd(label, q, BcdKind::C, 4, 0, 3);
      else
        r = build_bcd(label, q, BcdKind::BC, 4, 4 * (p - q), 3);
      break;
    }
    case RealFamily::su_star: {
      const int n = p;
      if (n < 2) throw std::invalid_argument("su*(2n) needs n >= 2");
      r = assemble(label, n, type_a_roots(n, 4), chain_simple_roots(n),
                   prefix_coweights(n - 1, n));
      break;
    }
    case RealFamily::so_star: {
      const int n = p;
      if (n < 3) throw std::invalid_argument("so*(2n) needs n >= 3");
      if (n % 2 == 0)
        r = build_bcd(label, n / 2, BcdKind::C, 4, 0, 1);
      else
        r = build_bcd(label, (n - 1) / 2, BcdKind::BC, 4, 4, 1);
      break;
    }
  }
  const RealFormDims dims = real_form_dims(label);
  if (r.total_multiplicity() != dims.dim_g - dims.dim_centralizer)
    throw std::logic_error("build_restricted: dimension bookkeeping failed for " +
                           label.str());
  return r;
}

RootDatum build_datum(const GroupLabel& label) {
  switch (label.kind) {
    case GroupLabel::Kind::split: return build_split(label.type, label.rank);
    case GroupLabel::Kind::complex_simple: return build_complex(label.type, label.rank);
    case GroupLabel::Kind::real_form: return build_restricted(label);
  }
  throw std::invalid_argument("build_datum: bad label");
}

namespace {

char split_letter(SplitType t) {
  switch (t) {
    case SplitType::A: return 'a';
    case SplitType::B: return 'b';
    case SplitType::C: return 'c';
    case SplitType::D: return 'd';
    case SplitType::E: return 'e';
    case SplitType::F: return 'f';
    case SplitType::G: return 'g';
  }
  return '?';
}

std::string family_name(RealFamily f) {
  switch (f) {
    case RealFamily::su: return "su";
    case RealFamily::so: return "so";
    case RealFamily::sp: return "sp";
    case RealFamily::su_star: return "su*";
    case RealFamily::so_star: return "so*";
  }
  return "?";
}

}  // namespace

std::string GroupLabel::str() const {
  switch (kind) {
    case Kind::split:
      return std::string(1, split_letter(type)) + std::to_string(rank);
    case Kind::complex_simple:
      return std::string(1, split_letter(type)) + std::to_string(rank) + "(C)";
    case Kind::real_form:
      if (family == RealFamily::su_star || family == RealFamily::so_star)
        return family_name(family) + "(" + std::to_string(2 * p) + ")";
      return family_name(family) + "(" + std::to_string(p) + "," +
             std::to_string(q) + ")";
  }
  return "?";
}

GroupLabel GroupLabel::split(SplitType t, int rank) {
  GroupLabel l;
  l.kind = Kind::split;
  l.type = t;
  l.rank = rank;
  return l;
}

GroupLabel GroupLabel::complexified(SplitType t, int rank) {
  GroupLabel l = split(t, rank);
  l.kind = Kind::complex_simple;
  return l;
}

GroupLabel GroupLabel::real(RealFamily f, int p, int q) {
  GroupLabel l;
  l.kind = Kind::real_form;
  l.family = f;
  l.p = p;
  l.q = q;
  return l;
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " in '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("trailing characters after " + what + " in '" + s + "'");
  return v;
}

}  // namespace

GroupLabel GroupLabel::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s.empty()) throw std::invalid_argument("empty group label");

  const size_t open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')')
      throw std::invalid_argument("unbalanced parentheses in label '" + text + "'");
    const std::string head = s.substr(0, open);
    const std::string args = s.substr(open + 1, s.size() - open - 2);

    if (head == "su*" || head == "so*") {
      const int two_n = parse_int(args, "rank argument");
      if (two_n % 2 != 0)
        throw std::invalid_argument(head + "(2n) needs an even argument");
      return real(head == "su*" ? RealFamily::su_star : RealFamily::so_star,
                  two_n / 2);
    }
    if (head == "su" || head == "so" || head == "sp") {
      const size_t comma = args.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument(head + "(p,q) needs two arguments");
      int p = parse_int(args.substr(0, comma), "p");
      int q = parse_int(args.substr(comma + 1), "q");
      if (p < q) std::swap(p, q);
      const RealFamily fam = head == "su"   ? RealFamily::su
                             : head == "so" ? RealFamily::so
                                            : RealFamily::sp;
      return real(fam, p, q);
    }
    // exceptional real-form names: the split ones map to their split data,
    // the non-split ones have no multiplicity data here
    if (head == "e6" && (args == "2" || args == "-14" || args == "-26"))
      throw UnsupportedForm("restricted-root data for " + text + " is not available");
    if (head == "e7" && (args == "-5" || args == "-25"))
      throw UnsupportedForm("restricted-root data for " + text + " is not available");
    if (head == "e8" && args == "-24")
      throw UnsupportedForm("restricted-root data for " + text + " is not available");
    if (args == "c") {
      GroupLabel inner = GroupLabel::parse(head);
      if (inner.kind != Kind::split)
        throw std::invalid_argument("cannot complexify '" + head + "'");
      return complexified(inner.type, inner.rank);
    }
    if ((head == "e6" && args == "6") || (head == "e7" && args == "7") ||
        (head == "e8" && args == "8") || (head == "f4" && args == "4") ||
        (head == "g2" && args == "2")) {
      GroupLabel inner = GroupLabel::parse(head);
      return inner;  // the split real form
    }
    throw std::invalid_argument("unrecognized label '" + text + "'");
  }

  const char letter = s[0];
  if (letter < 'a' || letter > 'g' || s.size() < 2)
    throw std::invalid_argument("unrecognized label '" + text + "'");
  static const SplitType types[] = {SplitType::A, SplitType::B, SplitType::C,
                                    SplitType::D, SplitType::E, SplitType::F,
                                    SplitType::G};
  const int rank = parse_int(s.substr(1), "rank");
  return split(types[letter - 'a'], rank);
}

}  // namespace temperkit

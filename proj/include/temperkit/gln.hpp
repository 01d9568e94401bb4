#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "temperkit/rho.hpp"

namespace temperkit {

/// Ordered positive block sizes of a parabolic Levi of gl_n.
struct Composition {
  std::vector<int> parts;

  int n() const;
  void validate() const;
  /// Parses "3,1" style comma-separated positive integers.
  static Composition parse(const std::string& text);
  std::string str() const;
};

/// d(P) = max block size. d(P)=1 iff P is a Borel, d(P)=n iff P=G.
int d_value(const Composition& p);

/// Tensor-product temperedness of Ind_P(sigma) (x) Ind_Q(tau):
/// true iff d(P) + d(Q) <= n + 1. Throws when P, Q have different n.
bool tensor_tempered(const Composition& p, const Composition& q);

struct ClosureViolation : std::runtime_error {
  int i, j, k;  // 1-based: E_ij, E_jk present but E_ik missing
  ClosureViolation(int i_, int j_, int k_);
};

/// Incidence matrix of an a-stable subalgebra h of gl_n: eps(i,j)=1 encodes
/// E_ij in h for i != j. The diagonal is identically 1 (h is stored as h+a,
/// which changes none of the criteria). Bracket closure is required:
/// eps(i,j)=eps(j,k)=1 with i != k forces eps(i,k)=1.
struct EpsilonMatrix {
  int n = 0;
  std::vector<std::uint8_t> bits;  // row-major

  EpsilonMatrix() = default;
  explicit EpsilonMatrix(int n_);

  bool at(int i, int j) const { return bits[static_cast<size_t>(i) * n + j] != 0; }
  void set(int i, int j, bool v) { bits[static_cast<size_t>(i) * n + j] = v ? 1 : 0; }

  static EpsilonMatrix identity(int n);
  static EpsilonMatrix all_ones(int n);

  /// Throws ClosureViolation with the offending triple.
  void validate_closure() const;
  bool is_closed() const;
  /// In-place transitive closure to a fixpoint.
  void close();

  bool operator==(const EpsilonMatrix&) const = default;
};

enum class Orientation { upper, lower };

/// Epsilon matrix of the standard block-triangular parabolic with Levi
/// blocks = parts: E_ij in p iff N(a(i)-1) < j (upper) resp. j <= N(a(i)) (lower).
EpsilonMatrix epsilon_from_parabolic(const Composition& p, Orientation o);

/// h = p  ∩ q^o where q^o is the longest-Weyl-element conjugate of q
/// (blocks of Q reversed, lower orientation); entrywise AND.
EpsilonMatrix epsilon_intersection(const Composition& p, const Composition& q);

/// Block-diagonal epsilon of the given parts, padded with 1x1 blocks to n.
EpsilonMatrix block_diagonal_epsilon(const Composition& parts, int n);

/// Adjoint weight multiset {e_i - e_j : i != j, eps(i,j)=1}; field_mult=2
/// gives the GL_n(C) weights (every multiplicity doubled). Validates closure.
WeightMultiset adjoint_weights(const EpsilonMatrix& h, long long field_mult = 1);

/// Full gl_n adjoint weights {e_i - e_j : i != j}.
WeightMultiset gl_adjoint_weights(int n, long long field_mult = 1);

/// dim Image(ad(E_ii): h -> h) = sum_{j != i} (eps_ij + eps_ji) = 2 rho_h(E_ii).
/// 0-based index i.
int ad_image_dim(const EpsilonMatrix& h, int i);

/// Temperedness of L^2(GL_n/H) through the n singleton inequalities:
/// ad_image_dim(h, i) <= n-1 for every i.
bool tempered_fast(const EpsilonMatrix& h);

struct TemperednessReport {
  bool tempered = true;
  /// Violating subset I (sorted, 1-based), smallest by cardinality then lex.
  std::optional<std::vector<int>> witness;
  /// Exact max of rho_h/rho_g over proper nonempty E_I; tempered iff <= 1/2.
  Rat extremal_ratio{0};
};

/// Checks 2 rho_h(E_I) <= rho_g(E_I) at every proper nonempty subset I.
/// Throws std::length_error when n exceeds the exhaustive cap.
TemperednessReport tempered_bruteforce(const EpsilonMatrix& h, int max_n = 20,
                                       long long field_mult = 1);

enum class SubsetMode { singletons, all_subsets };

struct LpCheck {
  bool holds = true;
  std::optional<std::vector<int>> witness;
};

/// p rho_h(E_I) <= (p-1) rho_g(E_I) over the selected subset family.
/// Any integer p >= 2 is accepted here (the p = 3 failure of the
/// singleton reduction is itself of interest).
LpCheck lp_criterion(const EpsilonMatrix& h, int p, SubsetMode mode,
                     long long field_mult = 1, int max_n = 20);

/// Symmetric integer form with unit diagonal and nonpositive off-diagonal
/// entries, evaluated as f(m) = sum_{k,l} a_kl m_k (n_l - m_l) on the box
/// 0 <= m <= n_vec.
struct QuadForm {
  int r = 0;
  std::vector<std::vector<long long>> a;
  std::vector<long long> n_vec;
  void validate() const;
};

long long quad_f(const QuadForm& q, const std::vector<long long>& m);

enum class QuadOutcome { holds, premise_failed, violated };

struct QuadCheckResult {
  QuadOutcome outcome = QuadOutcome::holds;
  std::optional<std::vector<long long>> witness;
};

/// If some f(e_l) > 0: premise_failed. Otherwise exhaustively verifies
/// f <= 0 on the whole box (a violator would falsify the underlying lemma).
/// Throws std::length_error when the box exceeds max_points.
QuadCheckResult quad_lemma_check(const QuadForm& q,
                                 long long max_points = 4'000'000);

/// p_{g/h} for h = block-diagonal(parts) + abelian padding inside gl_n:
/// exact max over proper nonempty I of rho_h(E_I)/rho_{g/h}(E_I).
/// nullopt means unbounded (some direction has rho_h > 0 = rho_{g/h}).
std::optional<Rat> lp_exponent(const Composition& parts, int n);

/// Almost-L^p verdict (p even >= 2): p_{g/h} <= p-1. Throws
/// std::invalid_argument for odd p.
bool almost_lp(const Composition& parts, int n, int p);

/// Closed form m <= n - (n-1)/p with m = max part (exact rational compare).
bool almost_lp_closed_form(const Composition& parts, int n, int p);

/// c(h) = 2(n-1) / max_i ad_image_dim(h,i); nullopt means infinite (h = a).
std::optional<Rat> c_value(const EpsilonMatrix& h);

/// Deterministic in (n, seed, density): samples off-diagonal entries, sets
/// the diagonal, then closes transitively. density in [0,1].
EpsilonMatrix random_closed_epsilon(int n, unsigned long long seed,
                                    double density);

/// Reads the 0/1-grid format: n lines of n characters from {0,1}, all
/// whitespace ignored. A zero diagonal entry is normalized to 1 and noted in
/// warnings. Throws std::invalid_argument on malformed input.
EpsilonMatrix parse_epsilon(std::istream& in, std::vector<std::string>* warnings);

std::string epsilon_grid(const EpsilonMatrix& h);

}  // namespace temperkit

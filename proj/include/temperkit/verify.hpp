#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "temperkit/gln.hpp"

namespace temperkit {

struct VerificationReport {
  std::string suite;
  long long cases = 0;
  std::vector<std::string> mismatches;  // one line each, inputs reconstructible
  double wall_ms = 0.0;

  bool pass() const { return mismatches.empty(); }
};

struct VerifyConfig {
  int max_n = 8;               // gl_n sweeps
  int random_per_n = 10000;    // random epsilon corpus size per n
  std::uint64_t seed = 0;
  int quad_r = 3;
  long long quad_max_nk = 4;
  long long quad_min_offdiag = -2;
  long long rho_samples = 100000;
  int table1_max_a = 7;
  int table1_max_bc = 6;
  int table1_max_d = 6;
  bool table1_exceptional = true;  // e6/e7/e8/f4/g2 (e7, e8 dominate runtime)
  int table2_max_pq = 10;
  int table2_max_su_star = 6;
  int table2_max_so_star = 6;
};

/// Deterministic epsilon corpus: all parabolic and parabolic-intersection
/// matrices of size n plus random_per_n seeded random bracket-closed ones.
std::vector<EpsilonMatrix> epsilon_corpus(int n, int random_per_n,
                                          std::uint64_t seed);

/// Tensor-product criterion vs the brute-force oracle over all composition
/// pairs of every n <= max_n.
VerificationReport verify_thm_tensor(int max_n);

/// Singleton criterion vs the 2^n-subset oracle over the epsilon corpus.
VerificationReport verify_thm_fast(int max_n, int random_per_n, std::uint64_t seed);

/// Singleton => all-subsets for even p in {2,4,6} over the epsilon corpus,
/// plus the bit-exact p=3 counterexample on the (2,2) parabolic of gl_4.
VerificationReport verify_bp(int max_n, int random_per_n, std::uint64_t seed);

/// The p=3 counterexample alone.
VerificationReport verify_bp_counterexample();

/// Quadratic-form lemma by exhaustion plus the recursion identity on every
/// box point.
VerificationReport verify_quad(int max_r, long long max_nk, long long min_offdiag);

/// lp_exponent vs the (m-1)/(n-m) closed form and the almost-L^p equivalence.
VerificationReport verify_lp(int max_n);

/// Split and complex table regeneration (classification vs table predicate).
VerificationReport verify_table1(const VerifyConfig& cfg);

/// Classical real-form table regeneration.
VerificationReport verify_table2(const VerifyConfig& cfg);

/// Rank-1 forms and the small-rank all-tempered families.
VerificationReport verify_cases_ab();

/// rho properties, Weyl invariance, multiplicity scaling, monotonicity in J,
/// and the gl-vs-root-system cross check.
VerificationReport verify_invariants(std::uint64_t seed, long long rho_samples);

std::vector<std::string> verification_suite_names();

/// Runs one suite by name ("thm-tensor", "thm-fast", "bp",
/// "bp-counterexample", "quad", "lp", "table1", "table2", "cases",
/// "invariants"). Throws std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace temperkit

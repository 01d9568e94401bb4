#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "temperkit/rho.hpp"

namespace temperkit {

enum class SplitType { A, B, C, D, E, F, G };

enum class RealFamily { su, so, sp, su_star, so_star };

struct UnsupportedForm : std::runtime_error {
  explicit UnsupportedForm(const std::string& what) : std::runtime_error(what) {}
};

/// Structured name of a group: split simple type, complex simple type, or a
/// classical real form su(p,q) / so(p,q) / sp(p,q) / su*(2n) / so*(2n).
struct GroupLabel {
  enum class Kind { split, complex_simple, real_form };
  Kind kind = Kind::split;
  SplitType type = SplitType::A;  // split / complex_simple
  int rank = 0;                   // split / complex_simple
  RealFamily family = RealFamily::su;  // real_form
  int p = 0, q = 0;               // su/so/sp(p,q); su*(2n)/so*(2n) use p=n

  std::string str() const;
  /// Accepts "a3", "A3", "e6", "f4(4)", "g2(2)", "su(3,2)", "su*(8)",
  /// "so*(10)". Exceptional real forms (e6(2), e6(-14), e6(-26), e7(-5),
  /// e7(-25), e8(-24)) are recognized and rejected with UnsupportedForm.
  static GroupLabel parse(const std::string& text);

  static GroupLabel split(SplitType t, int rank);
  static GroupLabel complexified(SplitType t, int rank);
  static GroupLabel real(RealFamily f, int p, int q = 0);
};

struct Root {
  WeightVector ambient;    // integer coordinates in the ambient basis
  std::vector<int> alpha;  // integer coordinates in the simple-root basis
  long long mult = 1;
};

/// A (possibly restricted) root system with multiplicities, realized with
/// integer ambient coordinates. rank = number of simple roots; dim = ambient
/// coordinate length (they differ for type A and the E-family realizations).
struct RootDatum {
  GroupLabel label;
  int rank = 0;
  int dim = 0;
  std::vector<Root> roots;
  std::vector<WeightVector> simple_roots;        // ambient
  std::vector<std::vector<int>> cartan;          // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<TestVector> coweights;             // primitive integer vectors
  std::vector<std::vector<Rat>> coweights_exact; // exact duals in span(simple roots)

  WeightMultiset root_multiset() const;        // ambient coordinates
  WeightMultiset root_multiset_alpha() const;  // simple-root coordinates
  long long total_multiplicity() const;

  /// Construction self-checks: root counts, negation closure, simple-root
  /// decompositions with a consistent sign, coweight pairings.
  void validate() const;
};

RootDatum build_split(SplitType t, int rank);
/// Same datum with every multiplicity doubled (a complex simple algebra seen
/// as a real one restricts to its own roots with multiplicity 2).
RootDatum build_complex(SplitType t, int rank);
/// Restricted root data of the classical real forms, from the standard
/// multiplicity catalog. Rejects non-simple and out-of-range parameters.
RootDatum build_restricted(const GroupLabel& label);
/// Dispatch on label kind.
RootDatum build_datum(const GroupLabel& label);

/// Uniformly scales all multiplicities (invariance testing hook).
RootDatum scale_multiplicities(RootDatum datum, long long factor);

/// Closed-form dim_R(g) and dim_R(Z_g(a)) for the restricted catalog; the
/// identity total multiplicity = dim g - dim z is a bookkeeping oracle.
struct RealFormDims {
  long long dim_g = 0;
  long long dim_centralizer = 0;
};
RealFormDims real_form_dims(const GroupLabel& label);

/// Orbit of an ambient integer vector under the simple reflections,
/// breadth-first. Computed with exact rational arithmetic; if the orbit
/// leaves the integer lattice the whole orbit is scaled by the least common
/// denominator (harmless for every rho ratio by homogeneity).
std::vector<TestVector> weyl_orbit(const RootDatum& r, const TestVector& v);

/// Candidates in coweight-basis coordinates: concatenated Weyl orbits of the
/// fundamental coweights e_1, ..., e_rank, each in breadth-first order.
/// Orbits of distinct fundamental coweights are disjoint, so the
/// concatenation is already deduplicated. Pairing with a root is the integer
/// dot product against the root's simple-root coordinates.
std::vector<TestVector> edge_candidates_y(const RootDatum& r);

/// The same candidates as ambient vectors, each scaled to a primitive
/// integer vector.
std::vector<TestVector> edge_candidates(const RootDatum& r);

/// Converts coweight-basis coordinates to a primitive ambient vector.
TestVector y_to_ambient_primitive(const RootDatum& r, const TestVector& y);

/// Subset of simple-root indices (sorted, 1-based) selecting a Levi.
struct LeviSpec {
  std::vector<int> j;

  unsigned mask() const;
  static LeviSpec from_mask(unsigned mask, int rank);
  std::string str() const;  // "{1,3}"
};

struct LeviComponent {
  std::string type_name;   // "a2", "b3", "bc1", "d5", "e6", "f4", "g2"
  int rank = 0;
  std::vector<int> nodes;  // sorted simple-root indices
};

/// Roots of the Levi subsystem: sub-multiset supported on J.
WeightMultiset levi_roots(const RootDatum& r, const LeviSpec& j);
/// Same, in simple-root coordinates.
WeightMultiset levi_roots_alpha(const RootDatum& r, const LeviSpec& j);

/// Irreducible components of the J-subsystem with Cartan types identified
/// from root counts and lengths (b1/c1 reported as a1, d3 as a3).
std::vector<LeviComponent> levi_components(const RootDatum& r, const LeviSpec& j);

std::string levi_type_string(const std::vector<LeviComponent>& components);

struct LeviVerdict {
  bool tempered = true;
  std::optional<TestVector> witness;  // ambient, primitive
  Rat extremal_ratio{0};
  std::vector<LeviComponent> components;
  std::string levi_type;
};

/// Temperedness of L^2(G/L): 2 rho_l <= rho_g over the edge candidates,
/// with exact extremal ratio and first violating candidate as witness.
LeviVerdict levi_tempered(const RootDatum& r, const LeviSpec& j);

struct ClassifiedLevi {
  LeviSpec j;
  LeviVerdict verdict;
};

/// All 2^rank Levi subsets in binary-counting order on J. Throws
/// std::length_error above max_rank.
std::vector<ClassifiedLevi> classify_levis(const RootDatum& r, int max_rank = 8);

}  // namespace temperkit

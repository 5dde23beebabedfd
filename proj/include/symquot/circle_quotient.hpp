#pragma once

#include "symquot/power_series.hpp"
#include "symquot/rational_function.hpp"
#include "symquot/weight_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symquot {

/// One orbit type of the circle action that meets the zero level of the
/// moment map: the points whose nonzero coordinates are exactly `support`.
struct OrbitTypeNode {
  std::vector<std::size_t> support;  // 0-based indices
  std::int64_t isotropy_order = 0;   // gcd of the supported alphas; 0 for the origin
  int complex_dimension = 0;         // |support| - 1, or 0 for the origin
  bool meets_shell = false;
  std::int64_t cyclic_order = 0;     // (alpha_i + alpha_j) / gcd_ij for two-element supports
};

struct OrbitTypeLattice {
  std::vector<OrbitTypeNode> nodes;
  /// Set when the vector has more than one negative weight.
  bool unsupported_by_audit = false;

  /// Nodes with |support| = n - 1 and nontrivial isotropy.
  std::vector<OrbitTypeNode> codim1_nodes(std::size_t n) const;
};

OrbitTypeLattice orbit_type_lattice(const WeightVector& a);

/// Number of monomials in z, conj(z) of the given total degree that are
/// invariant under the circle action.
Integer count_invariant_monomials(const WeightVector& a, std::size_t degree);

/// Invariant monomial counts b_0 .. b_D.
std::vector<Integer> invariant_monomial_counts(const WeightVector& a, std::size_t max_degree);

/// Hilbert series of the invariant ring of C^n through degree D.
PowerSeries hilb_off_series(const WeightVector& a, std::size_t max_degree);

/// (1 - x^2) times the off-shell series. A single-sign vector gives the
/// constant series 1 and sets `warning` when provided.
PowerSeries hilb_on_series(const WeightVector& a, std::size_t max_degree, std::string* warning = nullptr);

struct HilbertReconstruction {
  RationalFunction series;
  IntPoly ansatz;             // the denominator multiple that succeeded
  int stage = 0;              // 0: opposite-sign pairs, 1: all pairs, 2: ray bound
  std::size_t series_degree = 0;
};

/// Exact on-shell Hilbert series as a rational function. Requires both signs.
/// Tries increasingly generous denominator multiples and verifies each fit on
/// a margin of extra coefficients; the pole order at 1 must be 2n - 2.
HilbertReconstruction hilb_on_reconstruction(const WeightVector& a);
inline RationalFunction hilb_on_rational(const WeightVector& a) { return hilb_on_reconstruction(a).series; }

/// The denominator multiple tried at a given stage.
IntPoly hilbert_ansatz(const WeightVector& a, int stage);

enum class GammaSource { closed_form_n3, laurent_extraction };

struct GammaData {
  Rational gamma0, gamma1, gamma2, gamma3;
  GammaSource source = GammaSource::closed_form_n3;
};

/// gamma_0 = e2 / (e1 e2 - e3).
Rational gamma0_closed_form_n3(const WeightVector& a);
/// gamma_2 as the sum of a symmetric term and one gcd correction per pair.
Rational gamma2_closed_form_sum(const WeightVector& a);
/// gamma_2 as a single bracket over 12 (e1 e2 - e3).
Rational gamma2_closed_form_bracket(const WeightVector& a);

/// Closed forms for n = 3 with nonzero weights. Throws std::invalid_argument otherwise.
GammaData gamma_closed_form_n3(const WeightVector& a);
/// gamma_0 .. gamma_3 from the Laurent expansion of hilb_on_rational.
GammaData gamma_from_laurent(const WeightVector& a);

enum class Flag { pass, fail, not_applicable };
std::string to_string(Flag f);

struct Predicate {
  Flag flag = Flag::not_applicable;
  std::string reason;
  bool failed() const { return flag == Flag::fail; }
};

struct PredicateRecord {
  Predicate diophantine;
  Predicate rhm;
  Predicate codim1_chain;
  Predicate nondegenerate;
  Predicate ratio_ok;
  Predicate quadratic_count_ok;

  /// Name of the first failing predicate in the order above, if any.
  std::optional<std::string> first_failure() const;
};

/// Necessary conditions for the quotient to be a finite unitary quotient.
/// `gamma0` may be supplied to skip recomputation for n != 3.
PredicateRecord predicates(const WeightVector& a, std::optional<Rational> gamma0 = std::nullopt);

/// Whether some ordering of the positive weights makes every prefix gcd
/// (starting from the negative weight) fail to divide all later weights.
bool codim1_chain_exists(const WeightVector& a);

}  // namespace symquot

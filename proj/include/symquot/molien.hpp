#pragma once

#include "symquot/rational_function.hpp"
#include "symquot/u2_catalog.hpp"

namespace symquot {

/// Hilbert series of the real invariants of G acting on C^2 x conj(C^2).
struct MolienData {
  RationalFunction series;
  Rational gamma0;
  Rational gamma2;
  Integer quadratic_dimension;
};

/// Molien average of 1 / det(I - x blockdiag(g, conj g)), exact.
/// Throws std::logic_error if the averaged coefficients are not integers or
/// disagree with a direct evaluation in the field.
MolienData molien_real(const FiniteU2Group& G);

/// Taylor coefficients of the Molien series through `degree`.
std::vector<Integer> molien_coefficients(const FiniteU2Group& G, std::size_t degree);

/// Degree-k coefficient for k <= 2 by the trace formula, evaluated directly
/// in the cyclotomic field.
Rational molien_coefficient_in_field(const FiniteU2Group& G, unsigned k);

/// A multiple of the Molien denominator: prod Phi_d^e_d, e_d the largest
/// number of primitive d-th roots among the four eigenvalues of one element.
IntPoly molien_denominator(const FiniteU2Group& G);

}  // namespace symquot

#pragma once

#include "symquot/polynomial.hpp"
#include "symquot/power_series.hpp"
#include "symquot/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace symquot {

/// Coefficients of f(x) = sum_j gamma_j / (1 - x)^(d - j) around x = 1.
/// A function without a pole at 1 reports pole_order 0 and its Taylor
/// coefficients in powers of (1 - x).
struct LaurentCoefficients {
  int pole_order = 0;
  std::vector<Rational> coefficients;

  const Rational& gamma(std::size_t j) const { return coefficients.at(j); }
};

/// Quotient of integer polynomials in canonical form: common factors and the
/// joint content divided out, denominator with positive leading coefficient
/// and nonzero constant term. Equality is exact structural equality.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPoly{1}) {}
  RationalFunction(IntPoly num, IntPoly den);

  /// Builds num/den assuming every common factor of num and den is among
  /// `factors` (typically cyclotomic polynomials). Avoids a general gcd.
  static RationalFunction reduced_over(IntPoly num, IntPoly den, const std::vector<IntPoly>& factors);

  static RationalFunction from_rational(const std::vector<Rational>& num, const std::vector<Rational>& den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }

  /// Exact Taylor coefficients at x = 0 through `degree`.
  PowerSeries taylor(std::size_t degree) const;

  /// Laurent expansion at x = 1 by the substitution x = 1 - t followed by
  /// exact series division. Throws std::invalid_argument for k_max < 0.
  LaurentCoefficients laurent_at_one(int k_max) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rational& s);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(IntPoly num, IntPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction normalize_content_and_sign(IntPoly num, IntPoly den);

  IntPoly num_;
  IntPoly den_;
};

inline PowerSeries taylor_coefficients(const RationalFunction& f, std::size_t degree) { return f.taylor(degree); }
inline LaurentCoefficients laurent_at_one(const RationalFunction& f, int k_max) { return f.laurent_at_one(k_max); }

class ReconstructionError : public std::runtime_error {
 public:
  enum class Kind { failed, unverified };
  ReconstructionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Finds the rational function with numerator degree <= num_bound and
/// denominator degree <= den_bound whose expansion agrees with `s` through
/// x^(num_bound + den_bound), then checks it against up to den_bound further
/// coefficients. Solved by exact Gaussian elimination over Q.
///
/// Throws ReconstructionError::failed when nothing within the bounds fits, and
/// ReconstructionError::unverified when a fit exists but disagrees with the
/// margin coefficients. Requires at least one margin coefficient.
RationalFunction reconstruct_rational(const PowerSeries& s, std::size_t num_bound, std::size_t den_bound);

/// Reconstruction when a multiple `den` of the true denominator is known:
/// the numerator is the truncation of s * den at num_bound, and the next
/// `margin` coefficients of s * den must vanish. `factors` lists the possible
/// common factors of numerator and den (empty means use a general gcd).
RationalFunction reconstruct_with_denominator(const PowerSeries& s, const IntPoly& den, std::size_t num_bound,
                                              std::size_t margin, const std::vector<IntPoly>& factors = {});

}  // namespace symquot

#pragma once

#include "symquot/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient i multiplies x^i; trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  /// 1 - x^k
  static IntPoly one_minus_x_pow(std::size_t k);
  /// The d-th cyclotomic polynomial.
  static IntPoly cyclotomic(unsigned d);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coefficients() const { return c_; }
  Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& leading() const { return c_.back(); }

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly pow(unsigned e) const;

  /// Exact quotient by `d` over Z, or nullopt when `d` does not divide.
  std::optional<IntPoly> divide_exact(const IntPoly& d) const;
  /// Divides every coefficient by `s`; `s` must divide the content.
  IntPoly divide_exact(const Integer& s) const;

  /// p(1 - t) as a polynomial in t.
  IntPoly shifted_one_minus() const;
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;
  /// p(x) / x^k; the low coefficients being dropped must be zero.
  IntPoly drop_low(std::size_t k) const;

  Rational evaluate(const Rational& x) const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor over Z[x] (primitive PRS), normalized to a
/// positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace symquot

#pragma once

#include "symquot/polynomial.hpp"
#include "symquot/rational.hpp"

#include <cstddef>
#include <vector>

namespace symquot {

/// Truncated power series sum_{k <= D} c_k x^k with exact rational
/// coefficients. D is the truncation order; binary operations truncate to the
/// smaller of the two orders.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs);
  /// Series of a polynomial truncated at `order` (zero padded).
  PowerSeries(const IntPoly& p, std::size_t order);

  std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_.at(k); }

  PowerSeries truncated(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& s);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  /// Requires an invertible constant term in `b`; throws std::domain_error.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

}  // namespace symquot

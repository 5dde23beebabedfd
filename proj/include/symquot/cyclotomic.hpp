#pragma once

#include "symquot/polynomial.hpp"
#include "symquot/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symquot {

/// Q(zeta_N) presented as Q[x] / Phi_N(x). Holds the reduction table for
/// x^k, 0 <= k < 2 phi(N) - 1, and the powers zeta^k for 0 <= k < N.
class CyclotomicField {
 public:
  explicit CyclotomicField(unsigned conductor);

  static std::shared_ptr<const CyclotomicField> make(unsigned conductor) {
    return std::make_shared<const CyclotomicField>(conductor);
  }

  unsigned conductor() const { return n_; }
  unsigned degree() const { return phi_; }
  const IntPoly& modulus() const { return modulus_; }
  /// Coordinates of x^k in the power basis, for k < 2 phi - 1.
  const std::vector<Integer>& reduced_power(std::size_t k) const { return reduced_.at(k); }

 private:
  unsigned n_;
  unsigned phi_;
  IntPoly modulus_;
  std::vector<std::vector<Integer>> reduced_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

class CyclotomicElement {
 public:
  CyclotomicElement() = default;
  /// The rational constant q in the field.
  CyclotomicElement(FieldPtr field, const Rational& q);

  static CyclotomicElement zeta(FieldPtr field, long k);
  static CyclotomicElement from_coords(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  unsigned conductor() const { return field_ ? field_->conductor() : 1; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;

  CyclotomicElement operator-() const;
  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const Rational& q);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator<(const CyclotomicElement& a, const CyclotomicElement& b);

  /// Multiplicative inverse; throws std::domain_error on zero.
  CyclotomicElement inverse() const;
  /// Complex conjugation zeta -> zeta^(N-1).
  CyclotomicElement conj() const;
  CyclotomicElement pow(long e) const;
  /// The same number in Q(zeta_M) for a multiple M of the conductor.
  CyclotomicElement embed(FieldPtr target) const;

  /// Smallest k >= 1 with a^k = 1 and k <= N^2, or 0 if none.
  unsigned root_of_unity_order() const;
  bool is_root_of_unity() const { return root_of_unity_order() != 0; }

  std::string to_string() const;

 private:
  CyclotomicElement(FieldPtr field, std::vector<Rational> coords, bool) : field_(std::move(field)), c_(std::move(coords)) {}
  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Brings a and b into Q(zeta_lcm) when their conductors differ.
void unify_fields(CyclotomicElement& a, CyclotomicElement& b);

enum class CyclotomicOp { add, mul, inv, conj };

/// Field operation with conductor merging. For inv and conj, b is ignored.
CyclotomicElement cyclotomic_arith(const CyclotomicElement& a, const CyclotomicElement& b, CyclotomicOp op);

}  // namespace symquot

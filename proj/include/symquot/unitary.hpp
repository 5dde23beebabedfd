#pragma once

#include "symquot/cyclotomic.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symquot {

/// A 2x2 matrix over Q(zeta_M). All four entries live in the same field.
class UnitaryMatrix2 {
 public:
  UnitaryMatrix2() = default;
  /// Row-major entries; all must share the field.
  UnitaryMatrix2(CyclotomicElement a, CyclotomicElement b, CyclotomicElement c, CyclotomicElement d);

  static UnitaryMatrix2 identity(FieldPtr field);
  /// zeta^k times the identity.
  static UnitaryMatrix2 scalar(FieldPtr field, long k);
  /// diag(zeta^k1, zeta^k2).
  static UnitaryMatrix2 diag(FieldPtr field, long k1, long k2);
  /// [[0, 1], [-1, 0]]
  static UnitaryMatrix2 b(FieldPtr field);

  const FieldPtr& field() const { return e_[0].field(); }
  const CyclotomicElement& operator()(int i, int j) const { return e_[static_cast<std::size_t>(2 * i + j)]; }

  CyclotomicElement trace() const;
  CyclotomicElement det() const;
  /// Entrywise complex conjugate.
  UnitaryMatrix2 conj() const;
  UnitaryMatrix2 conj_transpose() const;
  UnitaryMatrix2 pow(unsigned k) const;
  bool is_identity() const;
  bool is_unitary() const;
  /// The same matrix over a field whose conductor is a multiple of ours.
  UnitaryMatrix2 embed(FieldPtr target) const;

  friend UnitaryMatrix2 operator*(const UnitaryMatrix2& x, const UnitaryMatrix2& y);
  friend UnitaryMatrix2 operator*(const CyclotomicElement& s, const UnitaryMatrix2& x);
  friend bool operator==(const UnitaryMatrix2& x, const UnitaryMatrix2& y) { return x.e_ == y.e_; }
  friend bool operator<(const UnitaryMatrix2& x, const UnitaryMatrix2& y) { return x.e_ < y.e_; }

  std::string to_string() const;

 private:
  std::array<CyclotomicElement, 4> e_;
};

/// Looks up k with zeta^k equal to a given element.
class RootTable {
 public:
  explicit RootTable(FieldPtr field);
  unsigned conductor() const { return n_; }
  const CyclotomicElement& power(long k) const;
  std::optional<unsigned> exponent_of(const CyclotomicElement& x) const;

 private:
  FieldPtr field_;
  unsigned n_;
  std::vector<CyclotomicElement> powers_;
  std::map<std::vector<Rational>, unsigned> index_;
};

/// Eigenvalues zeta^e1, zeta^e2 with 0 <= e1 <= e2 < M.
struct EigenExponents {
  unsigned e1 = 0;
  unsigned e2 = 0;
  friend bool operator==(const EigenExponents& a, const EigenExponents& b) { return a.e1 == b.e1 && a.e2 == b.e2; }
  friend bool operator<(const EigenExponents& a, const EigenExponents& b) {
    return a.e1 != b.e1 ? a.e1 < b.e1 : a.e2 < b.e2;
  }
};

/// Throws std::invalid_argument when an eigenvalue is not a power of zeta_M.
EigenExponents eigen_exponents(const UnitaryMatrix2& g, const RootTable& roots);

/// Multiplicative order, read off the eigenvalues.
unsigned element_order(const EigenExponents& e, unsigned conductor);

/// g != I and 1 is an eigenvalue: det(g) - tr(g) + 1 = 0.
bool is_pseudoreflection(const UnitaryMatrix2& g);

/// Whether blockdiag(g, conj(g)) fixes a hyperplane of C^4 pointwise.
bool block_is_pseudoreflection(const UnitaryMatrix2& g);

/// Fixed line of a pseudoreflection, scaled so that its first nonzero
/// coordinate is 1.
std::array<CyclotomicElement, 2> fixed_line(const UnitaryMatrix2& g);

/// Rank of a square matrix over one cyclotomic field.
std::size_t matrix_rank(std::vector<std::vector<CyclotomicElement>> rows);

}  // namespace symquot

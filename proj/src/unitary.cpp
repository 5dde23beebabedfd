#include "symquot/unitary.hpp"

#include <sstream>
#include <stdexcept>

namespace symquot {

UnitaryMatrix2::UnitaryMatrix2(CyclotomicElement a, CyclotomicElement b, CyclotomicElement c, CyclotomicElement d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (const auto& x : e_)
    if (x.conductor() != e_[0].conductor()) throw std::invalid_argument("matrix entries from different fields");
}

UnitaryMatrix2 UnitaryMatrix2::identity(FieldPtr field) { return scalar(std::move(field), 0); }

UnitaryMatrix2 UnitaryMatrix2::scalar(FieldPtr field, long k) { return diag(std::move(field), k, k); }

UnitaryMatrix2 UnitaryMatrix2::diag(FieldPtr field, long k1, long k2) {
  CyclotomicElement zero(field, 0);
  return UnitaryMatrix2(CyclotomicElement::zeta(field, k1), zero, zero, CyclotomicElement::zeta(field, k2));
}

UnitaryMatrix2 UnitaryMatrix2::b(FieldPtr field) {
  CyclotomicElement zero(field, 0), one(field, 1);
  return UnitaryMatrix2(zero, one, -one, zero);
}

CyclotomicElement UnitaryMatrix2::trace() const { return e_[0] + e_[3]; }

CyclotomicElement UnitaryMatrix2::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

UnitaryMatrix2 UnitaryMatrix2::conj() const {
  return UnitaryMatrix2(e_[0].conj(), e_[1].conj(), e_[2].conj(), e_[3].conj());
}

UnitaryMatrix2 UnitaryMatrix2::conj_transpose() const {
  return UnitaryMatrix2(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj());
}

UnitaryMatrix2 UnitaryMatrix2::pow(unsigned k) const {
  UnitaryMatrix2 r = identity(field()), base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool UnitaryMatrix2::is_identity() const {
  return e_[1].is_zero() && e_[2].is_zero() && e_[0].is_rational() && e_[0].rational_value() == 1 &&
         e_[3].is_rational() && e_[3].rational_value() == 1;
}

bool UnitaryMatrix2::is_unitary() const { return (conj_transpose() * *this).is_identity(); }

UnitaryMatrix2 UnitaryMatrix2::embed(FieldPtr target) const {
  return UnitaryMatrix2(e_[0].embed(target), e_[1].embed(target), e_[2].embed(target), e_[3].embed(target));
}

UnitaryMatrix2 operator*(const UnitaryMatrix2& x, const UnitaryMatrix2& y) {
  return UnitaryMatrix2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                        x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
}

UnitaryMatrix2 operator*(const CyclotomicElement& s, const UnitaryMatrix2& x) {
  return UnitaryMatrix2(s * x.e_[0], s * x.e_[1], s * x.e_[2], s * x.e_[3]);
}

std::string UnitaryMatrix2::to_string() const {
  std::ostringstream out;
  out << "[[" << e_[0].to_string() << ", " << e_[1].to_string() << "], [" << e_[2].to_string() << ", "
      << e_[3].to_string() << "]]";
  return out.str();
}

RootTable::RootTable(FieldPtr field) : field_(std::move(field)), n_(field_->conductor()) {
  powers_.reserve(n_);
  for (unsigned k = 0; k < n_; ++k) {
    powers_.push_back(CyclotomicElement::zeta(field_, k));
    index_.emplace(powers_.back().coords(), k);
  }
}

const CyclotomicElement& RootTable::power(long k) const {
  long r = k % static_cast<long>(n_);
  if (r < 0) r += n_;
  return powers_[static_cast<std::size_t>(r)];
}

std::optional<unsigned> RootTable::exponent_of(const CyclotomicElement& x) const {
  if (x.conductor() != n_) return std::nullopt;
  auto it = index_.find(x.coords());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EigenExponents eigen_exponents(const UnitaryMatrix2& g, const RootTable& roots) {
  auto s = roots.exponent_of(g.det());
  if (!s) throw std::invalid_argument("determinant is not a root of unity in Q(zeta_" +
                                      std::to_string(roots.conductor()) + ")");
  const CyclotomicElement tr = g.trace();
  const long n = roots.conductor();
  for (long e = 0; e < n; ++e) {
    long f = ((static_cast<long>(*s) - e) % n + n) % n;
    if (f < e) continue;
    if (roots.power(e) + roots.power(f) == tr) return {static_cast<unsigned>(e), static_cast<unsigned>(f)};
  }
  throw std::invalid_argument("eigenvalues are not roots of unity in Q(zeta_" + std::to_string(n) + ")");
}

unsigned element_order(const EigenExponents& e, unsigned conductor) {
  std::int64_t g = gcd64(gcd64(conductor, e.e1), e.e2);
  return static_cast<unsigned>(conductor / g);
}

bool is_pseudoreflection(const UnitaryMatrix2& g) {
  if (g.is_identity()) return false;
  CyclotomicElement one(g.field(), 1);
  return (g.det() - g.trace() + one).is_zero();
}

std::size_t matrix_rank(std::vector<std::vector<CyclotomicElement>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    CyclotomicElement inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      CyclotomicElement f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool block_is_pseudoreflection(const UnitaryMatrix2& g) {
  const FieldPtr& f = g.field();
  CyclotomicElement zero(f, 0), one(f, 1);
  UnitaryMatrix2 h = g.conj();
  std::vector<std::vector<CyclotomicElement>> m(4, std::vector<CyclotomicElement>(4, zero));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m[i][j] = g(i, j) - (i == j ? one : zero);
      m[i + 2][j + 2] = h(i, j) - (i == j ? one : zero);
    }
  return matrix_rank(std::move(m)) == 1;
}

std::array<CyclotomicElement, 2> fixed_line(const UnitaryMatrix2& g) {
  CyclotomicElement one(g.field(), 1);
  CyclotomicElement a = g(0, 0) - one, b = g(0, 1), c = g(1, 0), d = g(1, 1) - one;
  // Kernel of [[a, b], [c, d]], which has rank one.
  CyclotomicElement x, y;
  if (!a.is_zero() || !b.is_zero()) {
    x = b;
    y = -a;
  } else {
    x = d;
    y = -c;
  }
  if (!x.is_zero()) return {one, y * x.inverse()};
  return {CyclotomicElement(g.field(), 0), one};
}

}  // namespace symquot

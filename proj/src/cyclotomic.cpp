#include "symquot/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symquot {

namespace {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned conductor) : n_(conductor) {
  if (conductor == 0) throw std::invalid_argument("cyclotomic field of conductor 0");
  phi_ = euler_phi(conductor);
  modulus_ = IntPoly::cyclotomic(conductor);
  // x^k mod Phi_N for k < N: the zeta powers, which also serve as the
  // reduction table since x^N = 1 in the quotient.
  reduced_.reserve(n_);
  std::vector<Integer> cur(phi_);
  cur[0] = 1;
  const auto& m = modulus_.coefficients();
  for (unsigned k = 0; k < n_; ++k) {
    reduced_.push_back(cur);
    Integer top = cur[phi_ - 1];
    for (unsigned i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < phi_; ++i) cur[i] -= top * m[i];
  }
}

CyclotomicElement::CyclotomicElement(FieldPtr field, const Rational& q) : field_(std::move(field)) {
  c_.assign(field_->degree(), Rational(0));
  c_[0] = q;
}

CyclotomicElement CyclotomicElement::zeta(FieldPtr field, long k) {
  const long n = field->conductor();
  const auto& row = field->reduced_power(static_cast<std::size_t>(((k % n) + n) % n));
  std::vector<Rational> c(row.begin(), row.end());
  return CyclotomicElement(std::move(field), std::move(c), true);
}

CyclotomicElement CyclotomicElement::from_coords(FieldPtr field, std::vector<Rational> coords) {
  if (coords.size() != field->degree()) throw std::invalid_argument("coordinate vector length must equal phi(N)");
  return CyclotomicElement(std::move(field), std::move(coords), true);
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CyclotomicElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

void unify_fields(CyclotomicElement& a, CyclotomicElement& b) {
  if (a.conductor() == b.conductor()) return;
  const unsigned l = std::lcm(a.conductor(), b.conductor());
  auto f = (l == a.conductor()) ? a.field() : (l == b.conductor()) ? b.field() : CyclotomicField::make(l);
  a = a.embed(f);
  b = b.embed(f);
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.conductor() != b.conductor()) {
    CyclotomicElement x = a, y = b;
    unify_fields(x, y);
    return x + y;
  }
  CyclotomicElement r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) { return a + (-b); }

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.conductor() != b.conductor()) {
    CyclotomicElement x = a, y = b;
    unify_fields(x, y);
    return x * y;
  }
  const auto& f = *a.field_;
  const std::size_t d = f.degree();
  const std::size_t n = f.conductor();
  std::vector<Rational> r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      const Rational p = a.c_[i] * b.c_[j];
      const std::size_t k = (i + j) % n;
      if (k < d) {
        r[k] += p;
        continue;
      }
      const auto& row = f.reduced_power(k);
      for (std::size_t t = 0; t < d; ++t)
        if (row[t] != 0) r[t] += p * row[t];
    }
  }
  return CyclotomicElement(a.field_, std::move(r), true);
}

CyclotomicElement operator*(const CyclotomicElement& a, const Rational& q) {
  CyclotomicElement r = a;
  for (auto& c : r.c_) c *= q;
  return r;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.conductor() != b.conductor()) {
    CyclotomicElement x = a, y = b;
    unify_fields(x, y);
    return x.c_ == y.c_;
  }
  return a.c_ == b.c_;
}

bool operator<(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int s = cmp(a.c_[i], b.c_[i]);
    if (s) return s < 0;
  }
  return false;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  // Solve (multiplication by a) * x = 1 column by column of the basis.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    CyclotomicElement col = *this * zeta(field_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) throw std::domain_error("singular multiplication matrix in cyclotomic field");
    std::swap(m[p], m[c]);
    const Rational inv = 1 / m[c][c];
    for (std::size_t j = c; j <= d; ++j) m[c][j] *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
  return CyclotomicElement(field_, std::move(x), true);
}

CyclotomicElement CyclotomicElement::conj() const {
  const auto& f = *field_;
  const std::size_t d = f.degree();
  const std::size_t n = f.conductor();
  std::vector<Rational> r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    const auto& row = f.reduced_power((n - i) % n);
    for (std::size_t t = 0; t < d; ++t)
      if (row[t] != 0) r[t] += c_[i] * row[t];
  }
  return CyclotomicElement(field_, std::move(r), true);
}

CyclotomicElement CyclotomicElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicElement result(field_, Rational(1));
  CyclotomicElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::embed(FieldPtr target) const {
  if (target->conductor() == conductor()) return *this;
  if (target->conductor() % conductor() != 0)
    throw std::invalid_argument("embedding target conductor must be a multiple of the source conductor");
  const std::size_t t = target->conductor() / conductor();
  const std::size_t d = target->degree();
  std::vector<Rational> r(d);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& row = target->reduced_power((i * t) % target->conductor());
    for (std::size_t k = 0; k < d; ++k)
      if (row[k] != 0) r[k] += c_[i] * row[k];
  }
  return CyclotomicElement(std::move(target), std::move(r), true);
}

unsigned CyclotomicElement::root_of_unity_order() const {
  if (is_zero()) return 0;
  // Roots of unity in Q(zeta_N) are the 2N-th roots of unity (or N-th for N even).
  const unsigned bound = 2 * conductor();
  CyclotomicElement one(field_, Rational(1));
  CyclotomicElement p = *this;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == one) return k;
    p = p * *this;
  }
  return 0;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << symquot::to_string(c_[i]) << ")";
    if (i > 0) out << "*z" << conductor() << "^" << i;
  }
  return first ? "0" : out.str();
}

CyclotomicElement cyclotomic_arith(const CyclotomicElement& a, const CyclotomicElement& b, CyclotomicOp op) {
  switch (op) {
    case CyclotomicOp::add: return a + b;
    case CyclotomicOp::mul: return a * b;
    case CyclotomicOp::inv: return a.inverse();
    case CyclotomicOp::conj: return a.conj();
  }
  throw std::invalid_argument("unknown cyclotomic operation");
}

}  // namespace symquot

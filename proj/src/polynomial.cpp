#include "symquot/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symquot {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_x_pow(std::size_t k) {
  if (k == 0) return IntPoly();
  std::vector<Integer> v(k + 1);
  v[0] = 1;
  v[k] = -1;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  // x^d - 1 = prod_{e | d} Phi_e
  IntPoly p = -one_minus_x_pow(d);
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = p.divide_exact(cyclotomic(e));
    p = std::move(*q);
  }
  return p;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (c_.back() < 0) g = -g;
  return divide_exact(g);
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<Integer> rem = c_;
  std::vector<Integer> q(c_.size() - d.c_.size() + 1);
  const Integer& lead = d.c_.back();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j)
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), d.c_[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < dd && i < rem.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly IntPoly::divide_exact(const Integer& s) const {
  IntPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return r;
}

IntPoly IntPoly::shifted_one_minus() const {
  // Horner in (1 - t).
  std::vector<Integer> r;
  for (std::size_t k = c_.size(); k-- > 0;) {
    // r <- r * (1 - t) + c_k
    r.emplace_back(0);
    for (std::size_t i = r.size() - 1; i > 0; --i) r[i] -= r[i - 1];
    r[0] += c_[k];
  }
  return IntPoly(std::move(r));
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

IntPoly IntPoly::drop_low(std::size_t k) const {
  if (k >= c_.size()) return IntPoly();
  return IntPoly(std::vector<Integer>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Rational IntPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + Rational(c_[k]);
  return acc;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const Integer& lead = bc.back();
  int steps = a.degree() - b.degree() + 1;
  for (std::size_t top = r.size(); top-- > db;) {
    Integer t = r[top];
    for (auto& c : r) c *= lead;
    --steps;
    if (t != 0) {
      std::size_t shift = top - db;
      for (std::size_t j = 0; j <= db; ++j)
        mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
    }
    r.pop_back();
  }
  IntPoly out(std::move(r));
  // Make up the remaining powers of lc(b) so the result is the textbook prem.
  for (; steps > 0; --steps) out *= lead;
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPoly p = a.primitive_part();
  IntPoly q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    IntPoly r = pseudo_remainder(p, q);
    p = std::move(q);
    q = r.primitive_part();
  }
  return p.primitive_part() * cont;
}

}  // namespace symquot

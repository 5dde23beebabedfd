#include "symquot/rational_function.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace symquot {

namespace {

void clear_denominators(const std::vector<Rational>& v, Integer& l) {
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
}

IntPoly scaled_to_integer(const std::vector<Rational>& v, const Integer& l) {
  std::vector<Integer> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer t = l / v[i].get_den();
    out[i] = v[i].get_num() * t;
  }
  return IntPoly(std::move(out));
}

// Solves the (possibly overdetermined) system A x = b over Q. Free variables
// are set to zero. Returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace

RationalFunction RationalFunction::normalize_content_and_sign(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction(IntPoly(), IntPoly{1}, Canonical{});
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (den.leading() < 0) g = -g;
  if (g != 1) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  if (den.coefficient(0) == 0)
    throw std::invalid_argument("rational function has a pole at x = 0");
  return RationalFunction(std::move(num), std::move(den), Canonical{});
}

RationalFunction::RationalFunction(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (!num.is_zero()) {
    IntPoly g = gcd(num, den).primitive_part();
    if (g.degree() > 0) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
  }
  *this = normalize_content_and_sign(std::move(num), std::move(den));
}

RationalFunction RationalFunction::reduced_over(IntPoly num, IntPoly den, const std::vector<IntPoly>& factors) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (!num.is_zero()) {
    for (const auto& f : factors) {
      if (f.degree() <= 0) continue;
      while (true) {
        auto qd = den.divide_exact(f);
        if (!qd) break;
        auto qn = num.divide_exact(f);
        if (!qn) break;
        num = std::move(*qn);
        den = std::move(*qd);
      }
    }
  }
  return normalize_content_and_sign(std::move(num), std::move(den));
}

RationalFunction RationalFunction::from_rational(const std::vector<Rational>& num, const std::vector<Rational>& den) {
  Integer l = 1;
  clear_denominators(num, l);
  clear_denominators(den, l);
  return RationalFunction(scaled_to_integer(num, l), scaled_to_integer(den, l));
}

PowerSeries RationalFunction::taylor(std::size_t degree) const {
  return PowerSeries(num_, degree) / PowerSeries(den_, degree);
}

LaurentCoefficients RationalFunction::laurent_at_one(int k_max) const {
  if (k_max < 0) throw std::invalid_argument("laurent_at_one: k_max must be non-negative");
  const std::size_t terms = static_cast<std::size_t>(k_max) + 1;
  LaurentCoefficients out;
  if (num_.is_zero()) {
    out.coefficients.assign(terms, Rational(0));
    return out;
  }
  IntPoly u = den_.shifted_one_minus();
  IntPoly v = num_.shifted_one_minus();
  const std::size_t du = u.valuation();
  const std::size_t dv = v.valuation();
  u = u.drop_low(du);
  v = v.drop_low(dv);
  const long pole = static_cast<long>(du) - static_cast<long>(dv);
  if (pole > 0) {
    out.pole_order = static_cast<int>(pole);
    out.coefficients = (PowerSeries(v, terms - 1) / PowerSeries(u, terms - 1)).coefficients();
    return out;
  }
  // No pole: f = t^(-pole) v/u.
  const std::size_t shift = static_cast<std::size_t>(-pole);
  out.coefficients.assign(terms, Rational(0));
  if (shift < terms) {
    auto q = (PowerSeries(v, terms - 1 - shift) / PowerSeries(u, terms - 1 - shift)).coefficients();
    for (std::size_t j = 0; j < q.size(); ++j) out.coefficients[j + shift] = q[j];
  }
  return out;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Canonical{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const Rational& s) {
  return RationalFunction::normalize_content_and_sign(a.num_ * Integer(s.get_num()), a.den_ * Integer(s.get_den()));
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction reconstruct_rational(const PowerSeries& s, std::size_t num_bound, std::size_t den_bound) {
  const std::size_t fit_end = num_bound + den_bound;  // last index that must be matched
  if (s.size() < fit_end + 2)
    throw std::invalid_argument("reconstruct_rational: need at least num_bound + den_bound + 2 coefficients");
  const std::size_t last = std::min(s.order(), fit_end + std::max<std::size_t>(den_bound, 1));
  const auto& c = s.coefficients();
  bool any_fit = false;
  for (std::size_t m = 0; m <= den_bound; ++m) {
    // Unknowns q_1..q_m with q_0 = 1; equations for k = num_bound+1 .. fit_end:
    // sum_{j=0}^{m} q_j s_{k-j} = 0.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t k = num_bound + 1; k <= fit_end; ++k) {
      std::vector<Rational> row(m);
      for (std::size_t j = 1; j <= m; ++j)
        if (j <= k) row[j - 1] = c[k - j];
      a.push_back(std::move(row));
      b.push_back(-c[k]);
    }
    auto sol = solve_linear(std::move(a), std::move(b), m);
    if (!sol) continue;
    any_fit = true;
    std::vector<Rational> q(m + 1);
    q[0] = 1;
    for (std::size_t j = 1; j <= m; ++j) q[j] = (*sol)[j - 1];
    auto conv = [&](std::size_t k) {
      Rational acc = 0;
      for (std::size_t j = 0; j <= std::min(k, m); ++j)
        if (q[j] != 0) acc += q[j] * c[k - j];
      return acc;
    };
    bool ok = true;
    for (std::size_t k = fit_end + 1; k <= last && ok; ++k) ok = conv(k) == 0;
    if (!ok) continue;
    std::vector<Rational> p(num_bound + 1);
    for (std::size_t k = 0; k <= num_bound; ++k) p[k] = conv(k);
    return RationalFunction::from_rational(p, q);
  }
  if (any_fit)
    throw ReconstructionError(ReconstructionError::Kind::unverified,
                              "reconstruction within the degree bounds disagrees with the verification margin");
  throw ReconstructionError(ReconstructionError::Kind::failed, "no rational function within the degree bounds fits");
}

RationalFunction reconstruct_with_denominator(const PowerSeries& s, const IntPoly& den, std::size_t num_bound,
                                              std::size_t margin, const std::vector<IntPoly>& factors) {
  const std::size_t last = num_bound + margin;
  if (s.order() < last)
    throw std::invalid_argument("reconstruct_with_denominator: series too short for the requested margin");
  const auto& c = s.coefficients();
  const auto& d = den.coefficients();
  std::vector<Rational> prod(last + 1);
  for (std::size_t k = 0; k <= last; ++k) {
    Rational acc = 0;
    for (std::size_t j = 0; j < d.size() && j <= k; ++j)
      if (d[j] != 0 && c[k - j] != 0) acc += Rational(d[j]) * c[k - j];
    prod[k] = acc;
  }
  for (std::size_t k = num_bound + 1; k <= last; ++k)
    if (prod[k] != 0)
      throw ReconstructionError(ReconstructionError::Kind::unverified,
                                "series times the known denominator does not terminate at the numerator bound");
  prod.resize(num_bound + 1);
  Integer l = 1;
  clear_denominators(prod, l);
  IntPoly num = scaled_to_integer(prod, l);
  IntPoly dd = den * l;
  if (factors.empty()) return RationalFunction(std::move(num), std::move(dd));
  return RationalFunction::reduced_over(std::move(num), std::move(dd), factors);
}

}  // namespace symquot

#include "symquot/molien.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace symquot {

namespace {

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

std::array<unsigned, 4> block_exponents(const EigenExponents& e, unsigned M) {
  std::array<unsigned, 4> x{e.e1, e.e2, (M - e.e1) % M, (M - e.e2) % M};
  std::sort(x.begin(), x.end());
  return x;
}

// Multiplicity of each root order among the four block eigenvalues,
// maximised over the group.
std::map<std::int64_t, unsigned> denominator_exponents(const FiniteU2Group& G) {
  const unsigned M = G.field->conductor();
  std::map<std::int64_t, unsigned> best;
  for (const auto& e : G.exponents) {
    std::map<std::int64_t, unsigned> here;
    for (unsigned x : block_exponents(e, M)) ++here[M / gcd64(M, x)];
    for (auto [d, c] : here) best[d] = std::max(best[d], c);
  }
  return best;
}

}  // namespace

std::vector<Integer> molien_coefficients(const FiniteU2Group& G, std::size_t degree) {
  const unsigned M = G.field->conductor();
  const std::size_t D = degree + 1;
  std::map<std::array<unsigned, 4>, std::int64_t> classes;
  for (const auto& e : G.exponents) ++classes[block_exponents(e, M)];

  // total[k * M + r]: weighted number of degree-k monomials whose eigenvalue
  // product is zeta^r.
  std::vector<std::int64_t> total(D * M, 0), dp(D * M);
  for (const auto& [ex, count] : classes) {
    std::fill(dp.begin(), dp.end(), 0);
    dp[0] = 1;
    for (unsigned e : ex)
      for (std::size_t k = 1; k < D; ++k)
        for (unsigned r = 0; r < M; ++r) dp[k * M + r] += dp[(k - 1) * M + (r + M - e) % M];
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += count * dp[i];
  }

  // The average is rational, so it equals its own trace down to Q; the trace
  // of zeta^r depends only on M / gcd(r, M) (Ramanujan sum).
  std::vector<std::int64_t> divisor_of(M);
  for (unsigned r = 0; r < M; ++r) divisor_of[r] = M / gcd64(M, r);
  std::vector<Integer> out(D);
  const Integer order = static_cast<long>(G.order());
  for (std::size_t k = 0; k < D; ++k) {
    std::map<std::int64_t, std::int64_t> by_divisor;
    for (unsigned r = 0; r < M; ++r) by_divisor[divisor_of[r]] += total[k * M + r];
    Rational b = 0;
    for (auto [d, s] : by_divisor) {
      int mu = moebius(d);
      if (mu == 0 || s == 0) continue;
      Rational term(Integer(static_cast<long>(s) * mu), Integer(static_cast<long>(euler_phi(d))));
      term.canonicalize();
      b += term;
    }
    b /= Rational(order);
    b.canonicalize();
    if (!is_integer(b)) throw std::logic_error("Molien coefficient " + std::to_string(k) + " is not an integer");
    out[k] = b.get_num();
  }
  return out;
}

Rational molien_coefficient_in_field(const FiniteU2Group& G, unsigned k) {
  if (k > 2) throw std::invalid_argument("direct evaluation is implemented for degrees 0..2");
  CyclotomicElement sum(G.field, 0);
  for (const auto& g : G.elements) {
    CyclotomicElement t = g.trace();
    CyclotomicElement p1 = t + t.conj();
    if (k == 0) {
      sum = sum + CyclotomicElement(G.field, 1);
    } else if (k == 1) {
      sum = sum + p1;
    } else {
      CyclotomicElement t2 = (g * g).trace();
      sum = sum + (p1 * p1 + t2 + t2.conj()) * Rational(1, 2);
    }
  }
  if (!sum.is_rational()) throw std::logic_error("Molien average is not rational");
  Rational r = sum.rational_value() / Rational(static_cast<long>(G.order()));
  r.canonicalize();
  return r;
}

IntPoly molien_denominator(const FiniteU2Group& G) {
  IntPoly q{1};
  for (auto [d, e] : denominator_exponents(G)) q = q * IntPoly::cyclotomic(static_cast<unsigned>(d)).pow(e);
  return q;
}

MolienData molien_real(const FiniteU2Group& G) {
  std::vector<IntPoly> factors;
  for (auto [d, e] : denominator_exponents(G)) factors.push_back(IntPoly::cyclotomic(static_cast<unsigned>(d)));
  const IntPoly q = molien_denominator(G);
  // Every group term is (degree deg q - 4 polynomial) / q.
  const std::size_t num_bound = static_cast<std::size_t>(q.degree()) - 4;
  const std::size_t margin = 8;
  auto coeffs = molien_coefficients(G, num_bound + margin);
  for (unsigned k = 0; k <= 2; ++k)
    if (Rational(coeffs[k]) != molien_coefficient_in_field(G, k))
      throw std::logic_error("Molien coefficient " + std::to_string(k) + " disagrees with the trace formula");
  std::vector<Rational> s(coeffs.begin(), coeffs.end());
  MolienData out;
  out.series = reconstruct_with_denominator(PowerSeries(std::move(s)), q, num_bound, margin, factors);
  auto lc = out.series.laurent_at_one(2);
  if (lc.pole_order != 4) throw std::logic_error("Molien series does not have a pole of order 4 at 1");
  out.gamma0 = lc.gamma(0);
  out.gamma2 = lc.gamma(2);
  out.quadratic_dimension = coeffs[2];
  return out;
}

}  // namespace symquot

#include "symquot/circle_quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace symquot {

std::vector<OrbitTypeNode> OrbitTypeLattice::codim1_nodes(std::size_t n) const {
  std::vector<OrbitTypeNode> out;
  for (const auto& node : nodes)
    if (node.support.size() + 1 == n && node.isotropy_order > 1) out.push_back(node);
  return out;
}

OrbitTypeLattice orbit_type_lattice(const WeightVector& a) {
  const std::size_t n = a.size();
  if (n > 20) throw std::invalid_argument("orbit type lattice: too many weights");
  OrbitTypeLattice lattice;
  lattice.unsupported_by_audit = a.count_negative() > 1;
  OrbitTypeNode origin;
  origin.meets_shell = true;
  lattice.nodes.push_back(origin);
  std::vector<OrbitTypeNode> rest;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    OrbitTypeNode node;
    bool neg = false, pos = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      node.support.push_back(i);
      neg |= a[i] < 0;
      pos |= a[i] > 0;
    }
    node.meets_shell = neg && pos;
    if (!node.meets_shell) continue;
    node.isotropy_order = a.gcd_of(node.support);
    node.complex_dimension = static_cast<int>(node.support.size()) - 1;
    if (node.support.size() == 2) {
      const auto i = node.support[0], j = node.support[1];
      node.cyclic_order = (a.alpha(i) + a.alpha(j)) / a.pair_gcd(i, j);
    }
    rest.push_back(std::move(node));
  }
  std::sort(rest.begin(), rest.end(), [](const OrbitTypeNode& x, const OrbitTypeNode& y) {
    if (x.support.size() != y.support.size()) return x.support.size() < y.support.size();
    return x.support < y.support;
  });
  lattice.nodes.insert(lattice.nodes.end(), rest.begin(), rest.end());
  return lattice;
}

namespace {

// h[T] = number of t in Z^n with sum a_i t_i = 0 and sum |t_i| = T, T <= D.
std::vector<std::int64_t> norm_histogram(const WeightVector& a, std::size_t max_norm) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> h(max_norm + 1, 0);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && (pivot == n || a.alpha(i) > a.alpha(pivot))) pivot = i;
  std::vector<std::int64_t> free_w;
  for (std::size_t i = 0; i < n; ++i)
    if (i != pivot) free_w.push_back(a[i]);
  const std::int64_t budget = static_cast<std::int64_t>(max_norm);
  const std::int64_t ap = pivot == n ? 0 : a[pivot];
  std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t idx, std::int64_t used,
                                                                         std::int64_t sum) {
    if (idx == free_w.size()) {
      if (pivot == n) {
        if (sum == 0) ++h[static_cast<std::size_t>(used)];
        return;
      }
      if (sum % ap != 0) return;
      std::int64_t t = -sum / ap;
      std::int64_t total = used + (t < 0 ? -t : t);
      if (total <= budget) ++h[static_cast<std::size_t>(total)];
      return;
    }
    const std::int64_t left = budget - used;
    for (std::int64_t t = -left; t <= left; ++t) rec(idx + 1, used + (t < 0 ? -t : t), sum + free_w[idx] * t);
  };
  rec(0, 0, 0);
  return h;
}

}  // namespace

std::vector<Integer> invariant_monomial_counts(const WeightVector& a, std::size_t max_degree) {
  // A monomial z^m conj(z)^k is invariant iff t = m - k solves sum a_i t_i = 0.
  // For fixed t with |t|_1 = T, the degree-D monomials are counted by
  // distributing (D - T)/2 extra z_i conj(z_i) factors over n slots.
  const auto h = norm_histogram(a, max_degree);
  const unsigned long n = a.size();
  std::vector<Integer> b(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Integer acc = 0;
    for (std::size_t t = k % 2; t <= k; t += 2) {
      if (h[t] == 0) continue;
      acc += Integer(static_cast<long>(h[t])) * (n == 0 ? Integer((k - t) == 0 ? 1 : 0)
                                                        : binomial((k - t) / 2 + n - 1, n - 1));
    }
    b[k] = acc;
  }
  return b;
}

Integer count_invariant_monomials(const WeightVector& a, std::size_t degree) {
  return invariant_monomial_counts(a, degree).at(degree);
}

PowerSeries hilb_off_series(const WeightVector& a, std::size_t max_degree) {
  auto b = invariant_monomial_counts(a, max_degree);
  return PowerSeries(std::vector<Rational>(b.begin(), b.end()));
}

PowerSeries hilb_on_series(const WeightVector& a, std::size_t max_degree, std::string* warning) {
  if (!a.both_signs()) {
    if (warning) *warning = "all weights share one sign: the reduced space is a point";
    std::vector<Rational> c(max_degree + 1);
    c[0] = 1;
    return PowerSeries(std::move(c));
  }
  auto b = invariant_monomial_counts(a, max_degree);
  std::vector<Rational> c(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) c[k] = b[k] - (k >= 2 ? b[k - 2] : Integer(0));
  return PowerSeries(std::move(c));
}

namespace {

std::int64_t pair_order(const WeightVector& a, std::size_t i, std::size_t j) {
  return (a.alpha(i) + a.alpha(j)) / a.pair_gcd(i, j);
}

std::set<unsigned> ray_degrees(const WeightVector& a) {
  std::set<unsigned> d = {2};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) d.insert(static_cast<unsigned>(pair_order(a, i, j)));
  return d;
}

std::vector<IntPoly> cyclotomic_factors_for(const std::set<unsigned>& degrees) {
  std::set<unsigned> ds;
  for (unsigned deg : degrees)
    for (unsigned d = 1; d <= deg; ++d)
      if (deg % d == 0) ds.insert(d);
  std::vector<IntPoly> out;
  for (unsigned d : ds) out.push_back(IntPoly::cyclotomic(d));
  return out;
}

}  // namespace

IntPoly hilbert_ansatz(const WeightVector& a, int stage) {
  const std::size_t n = a.size();
  if (stage == 0 || stage == 1) {
    IntPoly q = IntPoly::one_minus_x_pow(2).pow(static_cast<unsigned>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool opposite = (a[i] < 0) != (a[j] < 0);
        if (stage == 1 || opposite) q = q * IntPoly::one_minus_x_pow(static_cast<std::size_t>(pair_order(a, i, j)));
      }
    return q;
  }
  if (stage == 2) {
    // Extreme rays of the invariant cone: z_i conj(z_i) in degree 2 and, for
    // each pair, two binomials of degree (alpha_i + alpha_j) / gcd_ij. The
    // cone has dimension 2n - 1, so Phi_d occurs at most that often.
    std::map<unsigned, unsigned> count;
    auto add_ray = [&](unsigned deg) {
      for (unsigned d = 1; d <= deg; ++d)
        if (deg % d == 0) ++count[d];
    };
    for (std::size_t i = 0; i < n; ++i) add_ray(2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        add_ray(static_cast<unsigned>(pair_order(a, i, j)));
        add_ray(static_cast<unsigned>(pair_order(a, i, j)));
      }
    IntPoly q{1};
    const unsigned cap = static_cast<unsigned>(2 * n - 1);
    for (auto [d, c] : count) q = q * IntPoly::cyclotomic(d).pow(std::min(cap, c));
    // Sign so that q(0) = 1 like the other stages.
    if (q.coefficient(0) < 0) q = -q;
    return q;
  }
  throw std::invalid_argument("hilbert_ansatz: unknown stage");
}

HilbertReconstruction hilb_on_reconstruction(const WeightVector& a) {
  if (!a.both_signs() || a.count_zero() > 0)
    throw std::invalid_argument("hilb_on_rational requires nonzero weights of both signs");
  const auto factors = cyclotomic_factors_for(ray_degrees(a));
  const int expected_pole = static_cast<int>(2 * a.size() - 2);
  std::string last_error;
  for (int stage = 0; stage <= 2; ++stage) {
    IntPoly q = hilbert_ansatz(a, stage);
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    const std::size_t big_d = 2 * dq + 10;
    PowerSeries s = hilb_on_series(a, big_d);
    try {
      RationalFunction f = reconstruct_with_denominator(s, q, dq + 1, big_d - dq - 1, factors);
      const int pole = f.laurent_at_one(0).pole_order;
      if (pole != expected_pole) {
        last_error = "pole order " + std::to_string(pole) + " at x = 1, expected " + std::to_string(expected_pole);
        continue;
      }
      return HilbertReconstruction{std::move(f), std::move(q), stage, big_d};
    } catch (const ReconstructionError& e) {
      last_error = e.what();
    }
  }
  throw std::runtime_error("on-shell Hilbert series reconstruction failed for (" + a.to_string() + "): " + last_error);
}

namespace {

void require_n3(const WeightVector& a) {
  if (a.size() != 3 || a.count_zero() != 0)
    throw std::invalid_argument("closed forms need exactly three nonzero weights");
}

}  // namespace

Rational gamma0_closed_form_n3(const WeightVector& a) {
  require_n3(a);
  Rational g(a.e2(), a.e1() * a.e2() - a.e3());
  g.canonicalize();
  return g;
}

Rational gamma2_closed_form_sum(const WeightVector& a) {
  require_n3(a);
  const Integer a1 = static_cast<long>(a.alpha(0)), a2 = static_cast<long>(a.alpha(1)),
                a3 = static_cast<long>(a.alpha(2));
  const Integer prod = (a1 + a2) * (a1 + a3) * (a2 + a3);
  Rational total(a1 * a1 + a2 * a2 + a3 * a3 + a1 * a2 + a1 * a3 + a2 * a3, 12 * prod);
  total.canonicalize();
  auto corr = [](std::int64_t g, const Integer& s) {
    Rational r(Integer(static_cast<long>(g * g - 1)), 12 * s);
    r.canonicalize();
    return r;
  };
  total += corr(a.pair_gcd(0, 1), a1 + a2);
  total += corr(a.pair_gcd(0, 2), a1 + a3);
  total += corr(a.pair_gcd(1, 2), a2 + a3);
  return total;
}

Rational gamma2_closed_form_bracket(const WeightVector& a) {
  require_n3(a);
  const Integer a1 = static_cast<long>(a.alpha(0)), a2 = static_cast<long>(a.alpha(1)),
                a3 = static_cast<long>(a.alpha(2));
  const Integer g12 = static_cast<long>(a.pair_gcd(0, 1)), g13 = static_cast<long>(a.pair_gcd(0, 2)),
                g23 = static_cast<long>(a.pair_gcd(1, 2));
  const Integer e2 = a.e2();
  Integer bracket = -2 * e2 + e2 * (g12 * g12 + g13 * g13 + g23 * g23) + g12 * g12 * a3 * a3 +
                    g13 * g13 * a2 * a2 + g23 * g23 * a1 * a1;
  Rational r(bracket, 12 * (a.e1() * e2 - a.e3()));
  r.canonicalize();
  return r;
}

GammaData gamma_closed_form_n3(const WeightVector& a) {
  GammaData g;
  g.source = GammaSource::closed_form_n3;
  g.gamma0 = gamma0_closed_form_n3(a);
  g.gamma1 = 0;
  g.gamma2 = gamma2_closed_form_bracket(a);
  if (g.gamma2 != gamma2_closed_form_sum(a))
    throw std::logic_error("the two closed forms for gamma2 disagree on (" + a.to_string() + ")");
  g.gamma3 = g.gamma2;
  return g;
}

GammaData gamma_from_laurent(const WeightVector& a) {
  auto lc = hilb_on_rational(a).laurent_at_one(3);
  GammaData g;
  g.source = GammaSource::laurent_extraction;
  g.gamma0 = lc.gamma(0);
  g.gamma1 = lc.gamma(1);
  g.gamma2 = lc.gamma(2);
  g.gamma3 = lc.gamma(3);
  return g;
}

std::string to_string(Flag f) {
  switch (f) {
    case Flag::pass: return "true";
    case Flag::fail: return "false";
    case Flag::not_applicable: return "n/a";
  }
  return "n/a";
}

std::optional<std::string> PredicateRecord::first_failure() const {
  const std::pair<const char*, const Predicate*> order[] = {
      {"diophantine", &diophantine},     {"rhm", &rhm},           {"codim1_chain", &codim1_chain},
      {"nondegenerate", &nondegenerate}, {"ratio_ok", &ratio_ok}, {"quadratic_count_ok", &quadratic_count_ok}};
  for (auto [name, p] : order)
    if (p->failed()) return std::string(name);
  return std::nullopt;
}

bool codim1_chain_exists(const WeightVector& a) {
  const std::size_t n = a.size();
  std::size_t neg = n;
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 0)
      neg = i;
    else
      pos.push_back(i);
  }
  if (neg == n || a.count_negative() != 1) throw std::invalid_argument("codim1 chain needs exactly one negative weight");
  std::sort(pos.begin(), pos.end());
  do {
    bool ok = true;
    std::int64_t g = a.alpha(neg);
    // Prefix of length i holds the negative weight and i - 1 positive ones.
    for (std::size_t i = 2; i + 1 <= n && ok; ++i) {
      g = gcd64(g, a.alpha(pos[i - 2]));
      for (std::size_t l = i - 1; l < pos.size() && ok; ++l)
        if (a.alpha(pos[l]) % g == 0) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

PredicateRecord predicates(const WeightVector& a, std::optional<Rational> gamma0) {
  PredicateRecord r;
  const std::size_t n = a.size();
  const bool both = a.both_signs() && a.count_zero() == 0;

  const std::size_t neg = a.count_negative(), pos = a.count_positive();
  if (neg >= 2 && pos >= 2) {
    r.rhm = {Flag::fail, "two or more weights of each sign: not a rational homology manifold"};
  } else {
    r.rhm = {Flag::pass, ""};
  }

  if (both && n >= 3 && r.rhm.flag == Flag::pass) {
    Rational g0 = gamma0 ? *gamma0 : (n == 3 ? gamma0_closed_form_n3(a) : gamma_from_laurent(a).gamma0);
    Rational inv = 1 / g0;
    if (is_integer(inv))
      r.diophantine = {Flag::pass, ""};
    else
      r.diophantine = {Flag::fail, "1/gamma0 = " + to_string(inv) + " is not an integer"};
  } else {
    r.diophantine = {Flag::not_applicable, "needs at least three weights with one lone sign"};
  }

  if (both && n >= 3 && neg == 1) {
    if (codim1_chain_exists(a))
      r.codim1_chain = {Flag::pass, ""};
    else
      r.codim1_chain = {Flag::fail, "no ordering of the positive weights gives a chain of codimension-one strata"};
  } else {
    r.codim1_chain = {Flag::not_applicable, "needs n >= 3 with exactly one negative weight"};
  }

  if (n == 3 && both) {
    if (a.alphas_distinct())
      r.nondegenerate = {Flag::pass, ""};
    else
      r.nondegenerate = {Flag::fail, "two absolute weights coincide"};

    GammaData g = gamma_closed_form_n3(a);
    Rational ratio = g.gamma0 / g.gamma2;
    if (ratio < 3 && ratio != 1 && ratio != 2)
      r.ratio_ok = {Flag::pass, ""};
    else
      r.ratio_ok = {Flag::fail, "gamma0/gamma2 = " + to_string(ratio) + (ratio < 3 ? " is 1 or 2" : " is at least 3")};

    PowerSeries head = hilb_on_series(a, 2);
    if (head[0] == 1 && head[1] == 0 && head[2] == 2)
      r.quadratic_count_ok = {Flag::pass, ""};
    else
      r.quadratic_count_ok = {Flag::fail, "on-shell series begins " + to_string(head[0]) + ", " + to_string(head[1]) +
                                              ", " + to_string(head[2]) + " instead of 1, 0, 2"};
  } else {
    r.nondegenerate = {Flag::not_applicable, "defined for three weights"};
    r.ratio_ok = {Flag::not_applicable, "defined for three weights"};
    r.quadratic_count_ok = {Flag::not_applicable, "defined for three weights"};
  }
  return r;
}

}  // namespace symquot

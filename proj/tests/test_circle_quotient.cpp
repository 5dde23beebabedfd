#include "doctest.h"

#include "symquot/circle_quotient.hpp"

#include <functional>
#include <set>

using namespace symquot;

namespace {

// Exhaustive enumeration of monomials prod z_i^m_i conj(z_i)^k_i of total
// degree d with sum a_i (m_i - k_i) = 0.
long naive_invariant_count(const std::vector<std::int64_t>& a, int d) {
  const std::size_t vars = 2 * a.size();
  std::vector<int> e(vars, 0);
  long count = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
    if (idx + 1 == vars) {
      e[idx] = left;
      std::int64_t w = 0;
      for (std::size_t i = 0; i < a.size(); ++i) w += a[i] * (e[2 * i] - e[2 * i + 1]);
      if (w == 0) ++count;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (vars == 0) return d == 0 ? 1 : 0;
  rec(0, d);
  return count;
}

Rational gamma0_product_form(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  Rational r(Integer(static_cast<long>(a1 * a2 + a1 * a3 + a2 * a3)),
             Integer(static_cast<long>((a1 + a2) * (a1 + a3) * (a2 + a3))));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("normalize") {
  auto r = normalize(WeightVector{2, -4, 6});
  // The lone negative weight moves to the front; the others keep their order.
  CHECK(r.vector == WeightVector{-2, 1, 3});
  CHECK(r.log.divided_by == 2);
  CHECK(r.log.reordered);
  CHECK(!r.log.sign_flipped);

  r = normalize(WeightVector{-3, 6, 12, 4});
  CHECK(r.vector == WeightVector{-3, 6, 12, 4});
  CHECK(r.log.entries().empty());

  r = normalize(WeightVector{-1, 1, 0});
  CHECK(r.vector == WeightVector{-1, 1});
  CHECK(r.log.removed_zero_positions == std::vector<std::size_t>{2});

  r = normalize(WeightVector{3, -1, -2});
  CHECK(r.vector == WeightVector{-3, 1, 2});
  CHECK(r.log.sign_flipped);

  r = normalize(WeightVector{0, 0});
  CHECK(r.log.trivial);

  // Two of each sign: no convention applies.
  r = normalize(WeightVector{1, -2, 3, -5});
  CHECK(r.vector == WeightVector{1, -2, 3, -5});
}

TEST_CASE("parse weight vectors") {
  CHECK(WeightVector::parse("-6,10,15") == WeightVector{-6, 10, 15});
  CHECK(WeightVector::parse(" 1, +2 ,3") == WeightVector{1, 2, 3});
  CHECK_THROWS_AS(WeightVector::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector::parse(""), std::invalid_argument);
}

TEST_CASE("shell support") {
  CHECK(shell_support(WeightVector{-1, 2, 3}).empty());
  CHECK(shell_support(WeightVector{1, 2, 3}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(shell_support(WeightVector{-1, 1}).empty());
}

TEST_CASE("orbit type lattice") {
  auto lat = orbit_type_lattice(WeightVector{-3, 6, 12, 4});
  auto c1 = lat.codim1_nodes(4);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].support == std::vector<std::size_t>{0, 1, 2});
  CHECK(c1[0].isotropy_order == 3);

  lat = orbit_type_lattice(WeightVector{-6, 10, 15});
  c1 = lat.codim1_nodes(3);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].support == std::vector<std::size_t>{0, 1});
  CHECK(c1[0].isotropy_order == 2);
  CHECK(c1[1].support == std::vector<std::size_t>{0, 2});
  CHECK(c1[1].isotropy_order == 3);
  CHECK(c1[0].cyclic_order == 8);
  CHECK(c1[1].cyclic_order == 7);

  lat = orbit_type_lattice(WeightVector{-1, 2});
  REQUIRE(lat.nodes.size() == 2);
  CHECK(lat.nodes[1].complex_dimension == 1);
  CHECK(lat.nodes[1].cyclic_order == 3);

  // Shell condition: the negative index plus at least one positive index.
  lat = orbit_type_lattice(WeightVector{-2, 3, 5, 7});
  for (const auto& node : lat.nodes) {
    if (node.support.empty()) continue;
    CHECK(node.support[0] == 0);
    CHECK(node.support.size() >= 2);
  }
  CHECK(lat.nodes.size() == 1 + 7);
  CHECK(orbit_type_lattice(WeightVector{-1, -2, 3, 4}).unsupported_by_audit);
}

TEST_CASE("pairwise coprime negative weight gives no codimension-one node") {
  for (std::int64_t a1 = 1; a1 <= 8; ++a1)
    for (std::int64_t a2 = 1; a2 <= 8; ++a2)
      for (std::int64_t a3 = a2 + 1; a3 <= 9; ++a3) {
        WeightVector a{-a1, a2, a3};
        if (a.gcd_all() != 1) continue;
        if (gcd64(a1, a2) != 1 || gcd64(a1, a3) != 1) continue;
        CHECK(orbit_type_lattice(a).codim1_nodes(3).empty());
      }
}

TEST_CASE("invariant monomial counts") {
  CHECK(count_invariant_monomials(WeightVector{-1, 2, 3}, 2) == 3);
  CHECK(count_invariant_monomials(WeightVector{-1, 1}, 2) == 4);
  CHECK(count_invariant_monomials(WeightVector{-5, 2, 7}, 0) == 1);
  CHECK(naive_invariant_count({-1, 1}, 2) == 4);
}

TEST_CASE("invariant monomial counts match exhaustive enumeration") {
  std::vector<std::vector<std::int64_t>> cases;
  for (std::int64_t a = -6; a <= 6; ++a) cases.push_back({a});
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b) cases.push_back({a, b});
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b)
      for (std::int64_t c = b; c <= 6; c += 2) cases.push_back({a, b, c});
  for (const auto& w : cases) {
    auto counts = invariant_monomial_counts(WeightVector(w), 6);
    for (int d = 0; d <= 6; ++d) CHECK(counts[static_cast<std::size_t>(d)] == naive_invariant_count(w, d));
  }
}

TEST_CASE("on-shell and off-shell series heads") {
  auto on = hilb_on_series(WeightVector{-1, 2, 3}, 2);
  CHECK(on.coefficients() == std::vector<Rational>{1, 0, 2});
  auto off = hilb_off_series(WeightVector{-1, 1}, 2);
  CHECK(off.coefficients() == std::vector<Rational>{1, 0, 4});
  std::string warning;
  auto point = hilb_on_series(WeightVector{1, 2, 3}, 4, &warning);
  CHECK(point.coefficients() == std::vector<Rational>{1, 0, 0, 0, 0});
  CHECK(!warning.empty());
  for (std::int64_t a1 = 1; a1 <= 7; ++a1)
    for (std::int64_t a2 = 1; a2 <= 7; ++a2)
      for (std::int64_t a4 = 1; a4 <= 3; ++a4) {
        auto s = hilb_on_series(WeightVector{-a1, a2, 3, a4}, 1);
        CHECK(s[0] == 1);
        CHECK(s[1] == 0);
      }
}

TEST_CASE("on-shell rational functions") {
  // The on-shell quotient for (-1,1) is C^2/{+-1}; odd degrees vanish.
  auto one = hilb_on_rational(WeightVector{-1, 1});
  CHECK(one == RationalFunction(IntPoly{1, 0, 1}, IntPoly::one_minus_x_pow(2).pow(2)));
  std::vector<Rational> head;
  for (int d = 0; d <= 8; ++d) {
    long on = naive_invariant_count({-1, 1}, d) - (d >= 2 ? naive_invariant_count({-1, 1}, d - 2) : 0);
    head.push_back(on);
  }
  CHECK(one.taylor(8).coefficients() == head);

  auto f = hilb_on_rational(WeightVector{-1, 2, 3});
  auto lc = f.laurent_at_one(2);
  CHECK(lc.pole_order == 4);
  CHECK(lc.gamma(0) == make_rational(11, 60));
  CHECK(lc.gamma(1) == 0);

  auto g = hilb_on_rational(WeightVector{-3, 6, 12, 4});
  lc = g.laurent_at_one(1);
  CHECK(lc.pole_order == 6);
  CHECK(lc.gamma(0) == make_rational(1, 21));
  CHECK(lc.gamma(1) == 0);

  // Taylor expansion of the reconstruction reproduces the counted series.
  CHECK(g.taylor(60) == hilb_on_series(WeightVector{-3, 6, 12, 4}, 60));
}

TEST_CASE("pole order is 2n - 2") {
  for (auto w : {WeightVector{-1, 1}, WeightVector{-2, 3}, WeightVector{-1, 1, 1}, WeightVector{-2, 3, 5},
                 WeightVector{-1, 1, 1, 1}, WeightVector{-1, 2, 3, 5}, WeightVector{-2, -3, 5},
                 WeightVector{-1, -1, 1, 1}})
    CHECK(hilb_on_rational(w).laurent_at_one(0).pole_order == static_cast<int>(2 * w.size() - 2));
}

TEST_CASE("every ansatz stage reconstructs the same function") {
  for (auto w : {WeightVector{-6, 10, 15}, WeightVector{-4, 3, 6}}) {
    auto base = hilb_on_rational(w);
    for (int stage = 0; stage <= 2; ++stage) {
      IntPoly q = hilbert_ansatz(w, stage);
      std::size_t dq = static_cast<std::size_t>(q.degree());
      auto s = hilb_on_series(w, 2 * dq + 10);
      CHECK(reconstruct_with_denominator(s, q, dq + 1, dq + 9) == base);
    }
  }
}

TEST_CASE("gamma closed forms") {
  auto g = gamma_closed_form_n3(WeightVector{1, 1, 1});
  CHECK(g.gamma0 == make_rational(3, 8));
  CHECK(g.gamma2 == make_rational(1, 16));
  g = gamma_closed_form_n3(WeightVector{-6, 10, 15});
  CHECK(g.gamma0 == make_rational(1, 28));
  CHECK(g.gamma2 == make_rational(15, 112));
  CHECK(g.gamma1 == 0);
  CHECK(g.gamma3 == g.gamma2);
  CHECK(gamma_closed_form_n3(WeightVector{1, 2, 3}).gamma0 == make_rational(11, 60));
  CHECK_THROWS_AS(gamma_closed_form_n3(WeightVector{-1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("closed forms agree with Laurent extraction") {
  for (std::int64_t a1 = 1; a1 <= 7; ++a1)
    for (std::int64_t a2 = 1; a2 <= 7; ++a2)
      for (std::int64_t a3 = a2 + 1; a3 <= 7; ++a3) {
        WeightVector a{-a1, a2, a3};
        if (a.gcd_all() != 1) continue;
        auto closed = gamma_closed_form_n3(a);
        auto laurent = gamma_from_laurent(a);
        CHECK(closed.gamma0 == gamma0_product_form(a1, a2, a3));
        CHECK(laurent.gamma0 == closed.gamma0);
        CHECK(laurent.gamma1 == 0);
        CHECK(laurent.gamma2 == closed.gamma2);
        CHECK(laurent.gamma3 == closed.gamma3);
        CHECK(closed.gamma0 > 0);
        CHECK(closed.gamma2 > 0);
      }
}

TEST_CASE("predicates") {
  auto p = predicates(WeightVector{-3, 6, 12, 4});
  CHECK(p.diophantine.flag == Flag::pass);
  CHECK(p.codim1_chain.flag == Flag::fail);
  CHECK(p.nondegenerate.flag == Flag::not_applicable);

  p = predicates(WeightVector{-6, 10, 15});
  CHECK(p.diophantine.flag == Flag::pass);
  CHECK(p.ratio_ok.flag == Flag::pass);
  CHECK(p.codim1_chain.flag == Flag::pass);
  CHECK(p.nondegenerate.flag == Flag::pass);
  CHECK(p.quadratic_count_ok.flag == Flag::pass);
  CHECK(!p.first_failure().has_value());

  p = predicates(WeightVector{-1, 2, 3});
  CHECK(p.diophantine.flag == Flag::fail);
  CHECK(p.diophantine.reason.find("60/11") != std::string::npos);
  CHECK(p.first_failure() == std::optional<std::string>("diophantine"));

  p = predicates(WeightVector{-1, 1, 1});
  CHECK(p.nondegenerate.flag == Flag::fail);
  CHECK(p.diophantine.flag == Flag::fail);

  p = predicates(WeightVector{-1, -2, 3, 5});
  CHECK(p.rhm.flag == Flag::fail);
}

TEST_CASE("chain predicate matches the descent through codimension-one strata") {
  // Independent check for n = 4: the chain exists iff removing some positive
  // weight leaves a gcd > 1 whose effective quotient again has such a weight.
  auto has_codim1 = [](const WeightVector& a) { return !orbit_type_lattice(a).codim1_nodes(a.size()).empty(); };
  for (std::int64_t a1 = 1; a1 <= 6; ++a1)
    for (std::int64_t a2 = 1; a2 <= 6; ++a2)
      for (std::int64_t a3 = a2; a3 <= 6; ++a3)
        for (std::int64_t a4 = a3; a4 <= 6; ++a4) {
          WeightVector a{-a1, a2, a3, a4};
          if (a.gcd_all() != 1) continue;
          bool descent = false;
          for (std::size_t i = 1; i < 4; ++i) {
            WeightVector sub = a.without(i);
            std::int64_t g = sub.gcd_all();
            if (g == 1) continue;
            if (has_codim1(sub.divided_by(g))) descent = true;
          }
          CHECK(codim1_chain_exists(a) == descent);
        }
}

#include "doctest.h"

#include "symquot/cyclotomic.hpp"
#include "symquot/polynomial.hpp"
#include "symquot/power_series.hpp"
#include "symquot/rational_function.hpp"

#include <random>

using namespace symquot;

namespace {

IntPoly one_minus_x_to(unsigned e) { return IntPoly::one_minus_x_pow(1).pow(e); }

RationalFunction random_function(std::mt19937& rng, int max_num_deg, int max_den_deg) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> nd(0, max_num_deg);
  std::uniform_int_distribution<int> dd(0, max_den_deg);
  std::vector<Integer> num(nd(rng) + 1), den(dd(rng) + 1);
  for (auto& c : num) c = coef(rng);
  for (auto& c : den) c = coef(rng);
  den[0] = (coef(rng) >= 0) ? 1 : -1;
  if (IntPoly(num).is_zero()) num[0] = 1;
  return RationalFunction(IntPoly(num), IntPoly(den));
}

// Sum_{j <= k} gamma_j / (1 - x)^(d - j) as a rational function.
RationalFunction laurent_part(const LaurentCoefficients& lc, int k) {
  RationalFunction acc;
  for (int j = 0; j <= k && j < lc.pole_order; ++j) {
    RationalFunction term(IntPoly{1}, one_minus_x_to(static_cast<unsigned>(lc.pole_order - j)));
    acc = acc + term * lc.gamma(static_cast<std::size_t>(j));
  }
  return acc;
}

}  // namespace

TEST_CASE("polynomial basics") {
  CHECK(IntPoly::cyclotomic(1) == IntPoly({-1, 1}));
  CHECK(IntPoly::cyclotomic(4) == IntPoly({1, 0, 1}));
  CHECK(IntPoly::cyclotomic(6) == IntPoly({1, -1, 1}));
  CHECK(IntPoly::cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
  IntPoly a = IntPoly({1, 1}) * IntPoly({-2, 0, 3});
  IntPoly b = IntPoly({1, 1}) * IntPoly({5, 7});
  CHECK(gcd(a, b) == IntPoly({1, 1}));
  CHECK(IntPoly({1, 2, 3}).shifted_one_minus() == IntPoly({6, -8, 3}));
  CHECK(!IntPoly({1, 0, 1}).divide_exact(IntPoly({1, 1})).has_value());
}

TEST_CASE("taylor coefficients") {
  RationalFunction geo(IntPoly{1}, IntPoly{1, -1});
  CHECK(geo.taylor(3).coefficients() == std::vector<Rational>{1, 1, 1, 1});
  RationalFunction sq(IntPoly{1, 1}, one_minus_x_to(3));
  CHECK(sq.taylor(2).coefficients() == std::vector<Rational>{1, 4, 9});
  CHECK_THROWS_AS(RationalFunction(IntPoly{1}, IntPoly{0, 1}), std::invalid_argument);
}

TEST_CASE("laurent expansion at one") {
  auto lc = RationalFunction(IntPoly{1}, one_minus_x_to(2)).laurent_at_one(1);
  CHECK(lc.pole_order == 2);
  CHECK(lc.gamma(0) == 1);
  CHECK(lc.gamma(1) == 0);

  lc = RationalFunction(IntPoly{1, 1}, IntPoly{1, -1}).laurent_at_one(1);
  CHECK(lc.pole_order == 1);
  CHECK(lc.gamma(0) == 2);
  CHECK(lc.gamma(1) == -1);

  // No pole: Taylor values in t = 1 - x. 1 + x = 2 - t.
  lc = RationalFunction(IntPoly{1, 1}, IntPoly{1}).laurent_at_one(2);
  CHECK(lc.pole_order == 0);
  CHECK(lc.coefficients == std::vector<Rational>{2, -1, 0});

  CHECK_THROWS_AS(RationalFunction(IntPoly{1}, IntPoly{1, -1}).laurent_at_one(-1), std::invalid_argument);
}

TEST_CASE("laurent remainder has lower pole order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction f = random_function(rng, 4, 3);
    unsigned extra = 1 + trial % 4;
    f = f * RationalFunction(IntPoly{1}, one_minus_x_to(extra));
    auto lc = f.laurent_at_one(6);
    if (lc.pole_order == 0) continue;
    CHECK(lc.gamma(0) != 0);
    for (int k = 0; k < lc.pole_order; ++k) {
      RationalFunction rest = f - laurent_part(lc, k);
      int rest_pole = rest.laurent_at_one(0).pole_order;
      CHECK(rest_pole <= lc.pole_order - k - 1);
    }
  }
}

TEST_CASE("laurent and taylor are linear") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    RationalFunction f = random_function(rng, 3, 2) * RationalFunction(IntPoly{1}, one_minus_x_to(2));
    RationalFunction g = random_function(rng, 3, 2) * RationalFunction(IntPoly{1}, one_minus_x_to(2));
    Rational s = make_rational(trial - 7, 3);
    CHECK((f + g).taylor(8) == f.taylor(8) + g.taylor(8));
    CHECK((f * s).taylor(8) == f.taylor(8) * s);
    auto lf = f.laurent_at_one(3), lg = g.laurent_at_one(3), lsum = (f + g).laurent_at_one(3);
    // Compare as coefficients of (1 - x)^(-p) at a common pole order.
    int p = std::max(lf.pole_order, lg.pole_order);
    auto at = [](const LaurentCoefficients& l, int p, int power) -> Rational {
      int j = l.pole_order - power;
      if (j < 0 || j >= static_cast<int>(l.coefficients.size()) || l.pole_order == 0) return 0;
      return l.coefficients[static_cast<std::size_t>(j)];
      (void)p;
    };
    for (int power = p; power >= 1 && power > p - 3; --power)
      CHECK(at(lsum, p, power) == at(lf, p, power) + at(lg, p, power));
    auto lscaled = (f * s).laurent_at_one(3);
    if (s != 0 && lf.pole_order > 0) {
      CHECK(lscaled.pole_order == lf.pole_order);
      for (std::size_t j = 0; j < 4; ++j) CHECK(lscaled.gamma(j) == lf.gamma(j) * s);
    }
  }
}

TEST_CASE("reconstruct_rational examples") {
  PowerSeries ones(std::vector<Rational>(11, Rational(1)));
  CHECK(reconstruct_rational(ones, 0, 1) == RationalFunction(IntPoly{1}, IntPoly{1, -1}));

  std::vector<Rational> sq(13);
  for (int k = 0; k <= 12; k += 2) sq[k] = (k / 2 + 1) * (k / 2 + 1);
  RationalFunction expect(IntPoly{1, 0, 1}, IntPoly{1, 0, -1}.pow(3));
  CHECK(reconstruct_rational(PowerSeries(sq), 2, 6) == expect);

  // Fewer coefficients than the bounds need.
  CHECK_THROWS_AS(reconstruct_rational(PowerSeries(std::vector<Rational>(3, Rational(1))), 1, 1),
                  std::invalid_argument);
  // Fits on the fitting window but not on the margin.
  std::vector<Rational> bad(11, Rational(1));
  bad[2] = 5;
  try {
    reconstruct_rational(PowerSeries(bad), 0, 1);
    FAIL("expected an exception");
  } catch (const ReconstructionError& e) {
    CHECK(e.kind() == ReconstructionError::Kind::unverified);
  }
}

TEST_CASE("reconstruct_rational round trips random functions") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    RationalFunction f = random_function(rng, 4, 4);
    std::size_t nb = f.numerator().degree() < 0 ? 0 : static_cast<std::size_t>(f.numerator().degree());
    std::size_t db = static_cast<std::size_t>(f.denominator().degree());
    nb += trial % 2;
    db += trial % 3 == 0 ? 1 : 0;
    PowerSeries s = f.taylor(nb + 2 * db + 2);
    CHECK(reconstruct_rational(s, nb, db) == f);
  }
}

TEST_CASE("reconstruct_with_denominator") {
  RationalFunction f(IntPoly{1, 0, 1}, IntPoly{1, 0, -1}.pow(3));
  IntPoly den = IntPoly{1, 0, -1}.pow(3) * IntPoly::one_minus_x_pow(3);
  std::vector<IntPoly> factors = {IntPoly::cyclotomic(1), IntPoly::cyclotomic(2), IntPoly::cyclotomic(3)};
  CHECK(reconstruct_with_denominator(f.taylor(30), den, 12, 8, factors) == f);
  CHECK(reconstruct_with_denominator(f.taylor(30), den, 12, 8) == f);
}

TEST_CASE("cyclotomic arithmetic examples") {
  auto q4 = CyclotomicField::make(4);
  auto q3 = CyclotomicField::make(3);
  auto q8 = CyclotomicField::make(8);
  auto i = CyclotomicElement::zeta(q4, 1);
  CHECK(cyclotomic_arith(i, i, CyclotomicOp::mul) == CyclotomicElement(q4, Rational(-1)));
  auto z3 = CyclotomicElement::zeta(q3, 1);
  CHECK(cyclotomic_arith(z3, z3, CyclotomicOp::conj) == CyclotomicElement::zeta(q3, 2));
  auto z8 = CyclotomicElement::zeta(q8, 1);
  auto r = cyclotomic_arith(z8, z8.conj(), CyclotomicOp::add);
  CHECK(r * r == CyclotomicElement(q8, Rational(2)));
  CHECK(!r.is_rational());
  CHECK_THROWS_AS(cyclotomic_arith(CyclotomicElement(q8, Rational(0)), z8, CyclotomicOp::inv), std::domain_error);
  // Mixed conductors land in Q(zeta_12).
  auto s = i + z3;
  CHECK(s.conductor() == 12);
  CHECK(s - z3 == i);
  CHECK(CyclotomicElement::zeta(q8, 3).root_of_unity_order() == 8);
  CHECK(z3.root_of_unity_order() == 3);
  CHECK(r.root_of_unity_order() == 0);
  CHECK((-z3).root_of_unity_order() == 6);
}

TEST_CASE("cyclotomic ring axioms on random elements") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (unsigned n : {1u, 5u, 8u, 12u, 15u, 20u}) {
    auto f = CyclotomicField::make(n);
    auto rnd = [&] {
      std::vector<Rational> c(f->degree());
      for (auto& x : c) x = make_rational(coef(rng), 1 + (coef(rng) + 3) % 3);
      return CyclotomicElement::from_coords(f, c);
    };
    for (int t = 0; t < 10; ++t) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicElement(f, Rational(1)));
    }
  }
}

#include "doctest.h"
#include "gsp4/exactring.hpp"

using namespace gsp4;

TEST_CASE("p-adic valuation and p powers") {
  CHECK(vp(Rational(18), 3) == 2);
  CHECK(vp(Rational(5, 27), 3) == -3);
  CHECK(p_pow(3, -2) == Rational(1, 9));
  CHECK(p_pow(5, 3) == 125);
  CHECK(is_p_integral(Rational(7, 10), 3));
  CHECK(!is_p_integral(Rational(7, 10), 5));
  CHECK(mod_p(Rational(7, 2), 5) == 1);  // 7 * inv(2) = 7*3 = 21 = 1 mod 5
}

TEST_CASE("quadratic field arithmetic") {
  QuadElement z(Rational(1), Rational(2), 7);  // 1 + 2 sqrt(-7)
  CHECK(z.norm() == 29);
  CHECK((z * z.conj()) == QuadElement(Rational(29)));
  CHECK((z * z.inv()) == QuadElement(1));
  CHECK((z + (-z)).is_zero());
  QuadElement w(Rational(0), Rational(1), 7);
  CHECK((w * w) == QuadElement(Rational(-7)));
  CHECK_THROWS_AS((void)(z * QuadElement(Rational(0), Rational(1), 4)), Error);
}

TEST_CASE("Laurent polynomial basics") {
  SymPoly t = SymPoly::monomial(S_T, 1);
  SymPoly a = SymPoly::monomial(S_A, 1);
  SymPoly p = (SymPoly(1) + t * a) * (SymPoly(1) - t * a);
  CHECK(p == SymPoly(1) - t.pow(2) * a.pow(2));
  CHECK(p.depends_on(S_A));
  CHECK(!p.depends_on(S_LAM));
  SymPoly inv = SymPoly::monomial(S_Z1, -3);
  CHECK((inv * SymPoly::monomial(S_Z1, 3)) == SymPoly(1));
  CHECK(inv.min_exp(S_Z1) == -3);
}

TEST_CASE("series inversion and expansion") {
  SymPoly one_minus_t = SymPoly(1) - SymPoly::monomial(S_T, 1);
  SymSeries s = SymSeries::from_poly(one_minus_t, 6);
  SymSeries inv = series_invert(s);
  for (int k = 0; k <= 6; ++k) CHECK(inv.at(k) == SymPoly(1));

  SymRatFn geo(SymPoly(1), one_minus_t);
  SymSeries e = series_expand(geo, 6);
  CHECK(e == inv);

  SymSeries bad(3);
  bad.c[0] = SymPoly(1) + SymPoly::monomial(S_A, 1);
  CHECK_THROWS_AS((void)series_invert(bad), Error);
}

TEST_CASE("rational function canonical equality") {
  SymPoly t = SymPoly::monomial(S_T, 1);
  SymRatFn x(SymPoly(1) - t.pow(2), SymPoly(1) - t);
  SymRatFn y(SymPoly(1) + t);
  CHECK(ratfn_eq(x, y));
  CHECK(!ratfn_eq(x, SymRatFn(SymPoly(1) - t)));
  SymRatFn z = (x - y);
  CHECK(ratfn_eq(z, SymRatFn(Rational(0))));
}

TEST_CASE("geometric closed sums") {
  SymPoly r = SymPoly::monomial(S_T, 1, Rational(1, 3));
  SymRatFn g = geometric_sum_closed(r, SymPoly(1));
  SymSeries e = series_expand(g, 5);
  for (int k = 0; k <= 5; ++k) CHECK(e.at(k) == SymPoly(p_pow(3, -k)));
  CHECK_THROWS_AS((void)geometric_sum_closed(SymPoly(1), SymPoly(1)), Error);
}

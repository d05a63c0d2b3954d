#include "doctest.h"
#include "gsp4/whittaker.hpp"

using namespace gsp4;

TEST_CASE("complete homogeneous symmetric polynomials") {
  CHECK(hl_poly(0) == SymPoly(1));
  CHECK(hl_poly(-1).is_zero());
  SymPoly a = SymPoly::monomial(S_A, 1), b = SymPoly::monomial(S_B, 1);
  CHECK(hl_poly(1) == a + b);
  CHECK(hl_poly(2) == a.pow(2) + a * b + b.pow(2));
}

TEST_CASE("case-formula spot values at p = 3") {
  // spherical pi, Steinberg sigma: (T p^-2)^l a_p^l at t5, m = 0
  auto w1 = whittaker_value(UnramPi_StSigma, 3, 1, 0, 5, 1, 1);
  CHECK(w1.texp == 1);
  CHECK(w1.coeff == SymPoly(Rational(1, 9)));
  CHECK(w1.half_pow == 0);
  auto w1n = whittaker_value(UnramPi_StSigma, 3, 1, 0, 5, -1, 1);
  CHECK(w1n.coeff == SymPoly(Rational(-1, 9)));

  // Steinberg-Steinberg: -X/p at t3, (l,m) = (0,1)
  auto w2 = whittaker_value(StPi_StSigma, 3, 0, 1, 3, 1, 1);
  CHECK(w2.texp == 2);
  CHECK(w2.coeff == SymPoly(Rational(-1, 27)));

  // Steinberg pi, spherical sigma: (T/p)^l h_l at t5, m = 0
  auto w3 = whittaker_value(StPi_UnramSigma, 3, 1, 0, 5, 1, 1);
  CHECK(w3.texp == 1);
  CHECK(w3.coeff == hl_poly(1) * Rational(1, 3));
  CHECK(w3.half_pow == 0);

  // the m > 0 supported cells of case 3 carry the half power p^(l/2)
  auto w4 = whittaker_value(StPi_UnramSigma, 3, 2, 1, 3, 1, 1);
  CHECK(w4.half_pow == 2);
  CHECK(w4.texp == 4);
}

TEST_CASE("support pattern") {
  // Steinberg-Steinberg vanishes on the whole m = 0 row
  for (long l = 0; l <= 3; ++l)
    for (int i : cells(0))
      CHECK(whittaker_value(StPi_StSigma, 3, l, 0, i, 1, 1).is_zero());
  // and is supported exactly on {t3, t4, t5, t6} for m > 0
  for (int i : cells(1)) {
    bool expect = i >= 3 && i <= 6;
    CHECK(whittaker_value(StPi_StSigma, 3, 1, 1, i, 1, 1).is_zero() == !expect);
  }
  // case 3 m > 0: exactly {t3, t5}
  for (int i : cells(1)) {
    bool expect = i == 3 || i == 5;
    CHECK(whittaker_value(StPi_UnramSigma, 3, 0, 1, i, 1, 1).is_zero() == !expect);
  }
  CHECK_THROWS_AS((void)whittaker_value(StPi_StSigma, 3, -1, 0, 5, 1, 1), Error);
  CHECK_THROWS_AS((void)whittaker_value(StPi_StSigma, 3, 0, 0, 3, 1, 1), Error);
}

TEST_CASE("GL2 newvector values") {
  CHECK(gl2_newvector_value(GL2_STEINBERG, 3, 2, false, 1) ==
        SymPoly(Rational(1, 9)));
  CHECK(gl2_newvector_value(GL2_STEINBERG, 3, 2, false, -1) ==
        SymPoly(Rational(1, 9)));  // a_p^2 = 1
  CHECK(gl2_newvector_value(GL2_STEINBERG, 3, -1, false, 1).is_zero());
  CHECK(gl2_newvector_value(GL2_STEINBERG, 3, -1, true, 1) ==
        SymPoly(Rational(-1)));  // -p^{-1} a_p^{-1} p
  CHECK(gl2_newvector_value(GL2_UNRAMIFIED, 3, 2, false, 1) == hl_poly(2));
  CHECK(gl2_newvector_value(GL2_UNRAMIFIED, 3, -1, false, 1).is_zero());
}

TEST_CASE("Bruhat evaluation agrees with the defining values") {
  // diag(9, 1): valuation 2
  SymPoly v = gl2_whittaker_eval(GL2_STEINBERG, 3,
                                 {Rational(9), 0, 0, Rational(1)}, 1, 1);
  CHECK(v == SymPoly(Rational(1, 9)));
  // lower-triangular Iwahori factor is absorbed on the right
  SymPoly v2 = gl2_whittaker_eval(GL2_STEINBERG, 3,
                                  {Rational(9), 0, Rational(3), Rational(1)}, 1, 1);
  CHECK(v2 == v);
  // a non-integral character argument aborts
  CHECK_THROWS_AS((void)gl2_whittaker_eval(
                      GL2_STEINBERG, 3,
                      {Rational(1), Rational(1, 3), 0, Rational(1)}, 1, 1),
                  Error);
}

TEST_CASE("decomposition identities, membership, and value audit") {
  for (long d : {4L, 7L})
    for (int c = 1; c <= 3; ++c) {
      auto rep = verify_decompositions(static_cast<CaseTag>(c), 3,
                                       SParams::from_d(d), 2, 2);
      CHECK(rep.ok());
    }
}

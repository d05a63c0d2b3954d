#include "doctest.h"
#include "gsp4/bessel.hpp"

using namespace gsp4;

namespace {
// (-p w)^l p^(-4(l+m)) as an exact rational.
Rational base_multiple(long p, long wp, long l, long m) {
  Rational b = p_pow(p, -4 * (l + m));
  for (long i = 0; i < l; ++i) b *= Rational(-p * wp);
  return b;
}
}  // namespace

TEST_CASE("closed-form values are the expected multiples") {
  for (long wp : {1L, -1L})
    for (long l = 0; l <= 3; ++l) {
      Rational m1 = base_multiple(3, wp, l, 1);
      CHECK(closed_form_value(3, wp, l, 1, 4) == SymPoly(m1));          // t4: M
      CHECK(closed_form_value(3, wp, l, 1, 1) == SymPoly(-m1 / 3));     // t1
      CHECK(closed_form_value(3, wp, l, 1, 6) == SymPoly(m1 * (-3)));   // t6
      CHECK(closed_form_value(3, wp, l, 1, 8) == SymPoly(-m1 / 27));    // t8
      Rational m0 = base_multiple(3, wp, l, 0);
      CHECK(closed_form_value(3, wp, l, 0, 5) == SymPoly(m0));          // t5
      // t7 at m = 0 carries the torus character symbol lam
      CHECK(closed_form_value(3, wp, l, 0, 7) ==
            SymPoly::monomial(S_LAM, 1, -m0 / 27));
    }
}

TEST_CASE("seed normalization") {
  CHECK(closed_form_value(3, 1, 0, 0, 5) == SymPoly(1));  // c_0^{0,0} = 1
}

TEST_CASE("recursion solver reproduces the closed forms") {
  for (long wp : {1L, -1L}) {
    auto rep = certify(3, wp, 3, 3);
    CHECK(rep.ok());
  }
}

TEST_CASE("solver grid is z1-free for l >= 0") {
  auto grid = solve_recursion(3, 1, 2, 2);
  for (int i = 1; i <= 8; ++i)
    for (long l = 0; l <= 2; ++l)
      for (long m = 0; m <= 2; ++m) {
        if (m == 0 && (i == 3 || i == 4 || i == 6 || i == 8)) continue;
        CHECK(!grid.at(i, l, m).depends_on(S_Z1));
      }
}

TEST_CASE("Hecke matrix identities") {
  for (long d : {4L, 7L})
    CHECK(verify_hecke_matrix_identities(3, SParams::from_d(d), 2, 2).ok());
}

TEST_CASE("additive character domain guard") {
  CHECK(psi_pk(0) == SymPoly(1));
  CHECK(psi_pk(3) == SymPoly(1));
  CHECK(psi_pk(-1) == SymPoly::monomial(S_Z1, 1));
  CHECK_THROWS_AS((void)psi_pk(-2), Error);
}

#include "doctest.h"
#include "gsp4/enumerate.hpp"
#include "gsp4/gmat.hpp"

using namespace gsp4;

TEST_CASE("symplectic form and similitudes") {
  GMat j = j4();
  CHECK((j * j) == -GMat::identity());
  auto mu = gsp_similitude(j);
  REQUIRE(mu.has_value());
  CHECK(*mu == QuadElement(1));

  GMat h = h_lm(3, 1, 2);
  auto muh = gsp_similitude(h);
  REQUIRE(muh.has_value());
  CHECK(*muh == QuadElement(Rational(3 * 3 * 3 * 3 * 3)));  // p^(2m+l) * p^m

  auto s = SParams::from_d(4);
  GMat th = theta(s);
  auto gu = gu_similitude(th);
  REQUIRE(gu.has_value());
  CHECK(*gu == 1);
}

TEST_CASE("group orders and enumeration oracle") {
  CHECK(gsp4_order(3) == 81L * 8 * 16 * 10);
  CHECK(borel_order(3) == 81L * 8);
  CHECK(gsp4_order(3) / borel_order(3) == 160);
  CHECK(gsp4_order(5) / borel_order(5) == 936);  // (p+1)^2 (p^2+1)
  CHECK(enumerate_gsp4_count(3, true) == gsp4_order(3));
}

TEST_CASE("Iwahori membership") {
  CHECK(in_iwahori(GMat::identity(), 3));
  CHECK(in_iwahori(-GMat::identity(), 3));
  CHECK(!in_iwahori(j4(), 3));
  // p-multiples below the diagonal stay in the pattern
  GMat g = GMat::identity();
  g.at(2, 0) = QuadElement(3);
  CHECK(in_iwahori(g, 3));
  g.at(2, 0) = QuadElement(1);
  CHECK(!in_iwahori(g, 3));
}

TEST_CASE("theta commutation with the torus element") {
  for (long d : {4L, 7L}) {
    auto s = SParams::from_d(d);
    for (long l = 0; l <= 2; ++l)
      for (long m = 0; m <= 2; ++m)
        CHECK(theta(s) * h_lm(3, l, m) == h_lm(3, l, m) * n_of_m(s, 3, m));
  }
}

TEST_CASE("Levi embeddings") {
  auto g = m2({QuadElement(2), QuadElement(3), QuadElement(5), QuadElement(7)});
  CHECK(g.at(1, 1) == QuadElement(2));
  CHECK(g.at(1, 3) == QuadElement(3));
  CHECK(g.at(3, 1) == QuadElement(5));
  CHECK(g.at(3, 3) == QuadElement(7));
  CHECK(g.at(2, 2) == QuadElement(2 * 7 - 3 * 5));
  REQUIRE(gu_similitude(g).has_value());
  auto x = m1(QuadElement(Rational(1), Rational(1), 4));
  REQUIRE(gu_similitude(x).has_value());
}

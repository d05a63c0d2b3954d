#include "doctest.h"
#include "gsp4/volumes.hpp"

using namespace gsp4;

TEST_CASE("stabilizer profile matches the closed tables at p = 3") {
  auto prof = compute_At_Ht_by_enumeration(3);
  for (int i = 1; i <= 8; ++i) {
    CHECK(prof.A[i - 1] == a_t_closed(i, 3));
    CHECK(prof.H[i - 1] == h_t_closed(i));
  }
  CHECK(a_t_closed(1, 3) == 3 * 4);      // p(p+1)
  CHECK(a_t_closed(2, 3) == 9 * 4);      // p^2(p+1)
  CHECK(a_t_closed(5, 3) == 4);          // p+1
  CHECK(a_t_closed(7, 3) == 27 * 4);     // p^3(p+1)
  CHECK(h_t_closed(1) == HT_LOWER);
  CHECK(h_t_closed(3) == HT_UPPER);
}

TEST_CASE("closed volume values") {
  CHECK(volume(0, 1, 8, 3) == Rational(2187, 40));
  CHECK(volume(1, 0, 5, 3) == Rational(27, 40));
  CHECK(volume(0, 0, 5, 3) == Rational(1, 40));  // M_{0,0} = 1/((p+1)(p^2+1))
}

TEST_CASE("unit index oracle") {
  auto s = SParams::from_d(4);
  CHECK(unit_index_oracle(3, 1, 3, s) == 4);        // p^0 (p+1)
  CHECK(unit_index_oracle(3, 2, 4, s) == 12);       // p^1 (p+1)
}

TEST_CASE("full volume cross-check") {
  for (long d : {4L, 7L}) CHECK(verify_volumes(3, SParams::from_d(d), 3, 3).ok());
}

TEST_CASE("negative control: a perturbed profile breaks assembly") {
  auto prof = compute_At_Ht_by_enumeration(3);
  prof.A[0] *= 3;
  CHECK(volume_assembled(1, 1, 1, 3, prof) != volume_closed(1, 1, 1, 3));
}

#include "doctest.h"
#include "gsp4/cosets.hpp"

using namespace gsp4;

TEST_CASE("representative count and distinctness at p = 3") {
  auto reps = build_reps(3);
  CHECK(reps.size() == 160);
  auto rep = verify_distinct_cosets(3);
  CHECK(rep.ok());
  CHECK(rep.params.at("pairs") == "12720");
}

TEST_CASE("negative control: a duplicated representative is caught") {
  auto reps = build_reps(3);
  reps.push_back(reps.front());
  auto rep = verify_distinct_cosets_list(3, reps);
  CHECK(!rep.ok());
  CHECK(rep.witness.find("Iwahori coset") != std::string::npos);
}

TEST_CASE("negative control: a coset-equivalent element is caught") {
  auto reps = build_reps(3);
  // Multiply one representative by an Iwahori element: same coset, new matrix.
  GMat g = GMat::identity();
  g.at(2, 0) = QuadElement(3);
  reps.push_back({reps.back().label, reps.back().g * g});
  CHECK(!verify_distinct_cosets_list(3, reps).ok());
}

TEST_CASE("cell reduction identities") {
  for (long d : {4L, 7L}) {
    auto rep = verify_claim_identities(3, SParams::from_d(d), 2, 2);
    CHECK(rep.ok());
  }
}

TEST_CASE("torus conjugation element: unit in Iwahori, non-unit out") {
  auto s = SParams::from_d(4);
  QuadElement j = claim2_standard_j(s, 3, 1, 1);
  CHECK(in_iwahori(claim2_element(s, 3, 1, 1, 1, j), 3));
  CHECK(!in_iwahori(claim2_element(s, 3, 1, 1, 1, QuadElement(3)), 3));
}

TEST_CASE("t-cells") {
  CHECK(cells(0) == std::vector<int>{1, 2, 5, 7});
  CHECK(cells(2).size() == 8);
  CHECK(t_rep(5) == -GMat::identity());
  CHECK(t_rep(7) == j4());
}

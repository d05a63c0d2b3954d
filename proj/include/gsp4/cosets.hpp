#ifndef GSP4_COSETS_HPP
#define GSP4_COSETS_HPP

#include <string>
#include <vector>

#include "gsp4/gmat.hpp"
#include "gsp4/report.hpp"

namespace gsp4 {

// Label of a coset representative.  Class A and B carry x = (n, q, r) in Y^3
// (with q^2 = n r mod p for class B); class D carries lambda.  The second
// parameter y runs over Y together with infinity, encoded as y = -1.
struct RepLabel {
  char cls = 'A';  // 'A', 'B' or 'D'
  long n = 0, q = 0, r = 0;
  long lambda = 0;       // class D only; -1 encodes infinity
  long y = 0;            // -1 encodes infinity
  std::string str() const;
};

struct CosetRep {
  RepLabel label;
  GMat g;
};

// Materialized representatives: A_x^y = U_x J Z_y, B_x^y = J U_x J Z_y,
// D_lambda^y per the three displayed cases.
GMat rep_a(long n, long q, long r, long y_or_inf);  // y = -1 for infinity
GMat rep_b(long n, long q, long r, long y_or_inf);
GMat rep_d(long lambda_or_inf, long y_or_inf);

// The full representative set S, of size (p+1)^2 (p^2+1).
std::vector<CosetRep> build_reps(long p);

// The eight distinguished elements t_1..t_8 (i in 1..8).
GMat t_rep(int i);

// Cell indices present at level m: {1,2,5,7} for m = 0, all of 1..8 otherwise.
std::vector<int> cells(long m);

// Pairwise distinctness of Iwahori cosets mod p, with the class rank-pair
// separation cross-checked against the product test, plus the cardinality
// count against |GSp4(F_p)| / |B(F_p)|.
VerifyReport verify_distinct_cosets(long p);

// Same check on an explicit list (used by negative controls).
VerifyReport verify_distinct_cosets_list(long p, const std::vector<CosetRep>& reps);

// The printed identity checks behind the cell reduction: the class-A
// normalization and the torus conjugations that merge the A_(0,0,0)^y cosets.
VerifyReport verify_claim_identities(long p, const SParams& s, long l_max, long m_max);

// The conjugate (A^base)^{-1} h(l,m)^{-1} j h(l,m) A^y with base = 0 (m = 0)
// or infinity (m > 0), for an arbitrary torus element j; exposed so tests can
// drive it with non-unit j as a negative control.
GMat claim2_element(const SParams& s, long p, long l, long m, long y_or_inf,
                    const QuadElement& j);
QuadElement claim2_standard_j(const SParams& s, long p, long m, long y_or_inf);

}  // namespace gsp4

#endif

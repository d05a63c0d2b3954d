#ifndef GSP4_BESSEL_HPP
#define GSP4_BESSEL_HPP

#include <map>

#include "gsp4/cosets.hpp"
#include "gsp4/report.hpp"

namespace gsp4 {

// The eight Bessel value families, indexed as the paper-independent t-cells:
// family(i) is the value at cell t_i.  Coefficients live in Q[lam^{+-1},
// z1^{+-1}] where lam is the torus character value and z1 the additive
// character value at valuation -1.
enum BesselFamily {
  BF_B0_1 = 1,  // t1
  BF_B0 = 2,    // t2
  BF_BINF = 3,  // t3
  BF_BINF_1 = 4,  // t4
  BF_C0 = 5,    // t5
  BF_CINF = 6,  // t6
  BF_A0 = 7,    // t7
  BF_AINF = 8   // t8
};

struct BesselGrid {
  long p = 3;
  long wp = 1;  // Atkin-Lehner sign, +-1
  long L = 0, M = 0;
  // values[i-1] maps (l, m) -> value, l in {-1..L}, m in {0..M}.
  std::array<std::map<std::pair<long, long>, SymPoly>, 8> values;

  const SymPoly& at(int t_index, long l, long m) const;
};

// The additive character value psi(p^k c) for a unit c: 1 for k >= 0, the
// symbol z1 at k = -1; valuation <= -2 aborts (PsiOutOfRange).
SymPoly psi_pk(long k);

// Exact matrix identities behind the Hecke relations.
VerifyReport verify_hecke_matrix_identities(long p, const SParams& s, long l_max,
                                            long m_max);

// Solve the recursion in the paper's derivation order from the single seed,
// then re-check every relation globally; throws InconsistentSystem on any
// violation.
BesselGrid solve_recursion(long p, long wp, long L, long M);

// The closed-form table value at cell t_index (valid t_index for the given m;
// l >= 0).
SymPoly closed_form_value(long p, long wp, long l, long m, int t_index);
std::map<int, SymPoly> closed_form_table(long p, long wp, long l, long m);

// Solver output vs closed forms on the full grid, plus symbol-degree guards.
VerifyReport certify(long p, long wp, long L, long M);

}  // namespace gsp4

#endif

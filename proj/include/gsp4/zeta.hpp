#ifndef GSP4_ZETA_HPP
#define GSP4_ZETA_HPP

#include <map>

#include "gsp4/report.hpp"
#include "gsp4/whittaker.hpp"

namespace gsp4 {

// Optional volume scaling at one cell, used by the negative-control tests.
struct VolumePerturbation {
  bool active = false;
  long l = 0, m = 0;
  int t_index = 1;
  Rational factor = 1;
};

// The local zeta integral assembled cell by cell: truncated T-series, closed
// rational form, and the per-(l, m) term ledger for cancellation audits.
struct ZetaAssembly {
  CaseTag tag = UnramPi_StSigma;
  long p = 3;
  int a_p = 1, w_p = 1;
  int order = 0;
  SymSeries series;
  SymRatFn closed;
  std::map<std::pair<long, long>, SymPoly> ledger;
};

// T-expansion of the spherical Bessel generating function C(y) at y = a_p p T:
// (1 - T^2 p^-2) / prod_i (1 - b_i T), with the normalized Satake symbols
// b_i absorbing a_p p^(-1/2) (so the result does not depend on a_p).
SymSeries sugano_series(long p, int order, int a_p);

// Sum W * B * I over l >= 0, m >= 0, t in T_m from the module tables; the
// m > 0 rows of case 1 carry the spherical Bessel factor implicitly (they
// vanish identically), and the symbol guard rejects any lam / z1 leakage.
ZetaAssembly assemble(CaseTag tag, long p, int a_p, int w_p, int order,
                      const VolumePerturbation& pert = {});

// The stated right-hand side of the corresponding local theorem, in T.
SymRatFn theorem_rhs(CaseTag tag, long p, int a_p, int w_p);

// ratfn equality of assembled closed form vs the theorem, plus T-series
// agreement to the truncation order; witness is the first differing
// coefficient.
VerifyReport verify_theorem(CaseTag tag, long p, int a_p, int w_p, int order,
                            const VolumePerturbation& pert = {});

// Per-cell cancellation / reduction ledger checks: the vanishing t-sums and
// the displayed per-(l, m) aggregate values.
VerifyReport verify_cancellation(CaseTag tag, long p, int a_p, int w_p,
                                 long l_max, long m_max);

// Unramified-place L-factor formulas, constructed as formal objects in the
// variable T (standing for q^-s); nothing here is asserted against an
// integral.
enum SplitType { SPLIT_INERT = 0, SPLIT_RAMIFIED = 1, SPLIT_SPLIT = 2 };

struct FurusawaFactors {
  SymRatFn pi_sigma_verbatim;   // degree-8 product exactly as displayed
  SymRatFn pi_sigma_corrected;  // with the suspected second-factor typo fixed
  SymRatFn one;                 // (1 - T)^{-1}
  SymRatFn rho_lambda;          // split-type dependent factor
  std::string split;
};

FurusawaFactors furusawa_lfactor(SplitType st);

}  // namespace gsp4

#endif

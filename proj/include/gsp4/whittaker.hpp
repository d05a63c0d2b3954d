#ifndef GSP4_WHITTAKER_HPP
#define GSP4_WHITTAKER_HPP

#include "gsp4/cosets.hpp"
#include "gsp4/report.hpp"

namespace gsp4 {

// The three ramified local configurations (GSp4 component x GL2 component).
enum CaseTag {
  UnramPi_StSigma = 1,   // spherical GSp4 vector, Steinberg GL2 vector
  StPi_StSigma = 2,      // Iwahori newvector on both sides
  StPi_UnramSigma = 3    // Iwahori GSp4 newvector, spherical GL2 vector
};

// A Whittaker value at cell (l, m, t): coeff * T^texp * p^(half_pow/2), with
// T = p^(-3s-1/2) and coeff a polynomial in the normalized Satake symbols
// A, B (GL2 side) over Q.  half_pow is nonzero only on cells that cancel in
// the zeta sum (see verify_decompositions notes).
struct WhittakerValue {
  long texp = 0;
  SymPoly coeff;
  long half_pow = 0;

  bool is_zero() const { return coeff.is_zero(); }
};

// Complete homogeneous symmetric polynomial h_l(A, B); h_l = 0 for l < 0.
SymPoly hl_poly(long l);

// Case-formula table value at cell t_index for the given case; a_p, w_p are
// the +-1 Atkin-Lehner / twist signs (w_p is unused by the tables themselves
// and kept for interface symmetry).  BadIndex if l < 0 or t_index invalid
// for m.
WhittakerValue whittaker_value(CaseTag tag, long p, long l, long m, int t_index,
                               int a_p, int w_p);

// GL2 newvector Whittaker values.
enum GL2Kind { GL2_STEINBERG = 0, GL2_UNRAMIFIED = 1 };

// Value at diag(a, 1) (weyl = false) or diag(a, 1) * [[0,1],[-1,0]]
// (weyl = true) with vp(a) = vp_a: Steinberg newvector gives a_p^v p^(-v)
// resp. -p^(-1) a_p^v p^(-v) on its support, the spherical vector gives
// h_v(A, B).
SymPoly gl2_newvector_value(GL2Kind kind, long p, long vp_a, bool weyl, int a_p);

// Value at an arbitrary nonsingular rational 2x2 matrix, computed by Bruhat
// reduction against the defining relations (right invariance under the
// respective compact group, left additive-character transformation with
// parameter psi_c).  PsiOutOfRange if a non-integral character argument
// appears.
SymPoly gl2_whittaker_eval(GL2Kind kind, long p, const std::array<Rational, 4>& g,
                           int a_p, const Rational& psi_c);

// Exact verification of the decomposition identities behind the case-formula
// tables: re-multiplies each printed factorization Theta h(l,m) t_i =
// m1 * m2 * [u] * k, checks the trailing factor against the correct compact
// subgroup, checks the claimed non-membership for every vanishing cell via
// the first-column line criterion, and audits the nonzero values against the
// induced-formula evaluation (except the half-power cells of case 3, which
// cancel in the zeta sum and are kept table-driven).
VerifyReport verify_decompositions(CaseTag tag, long p, const SParams& s,
                                   long l_max, long m_max);

}  // namespace gsp4

#endif

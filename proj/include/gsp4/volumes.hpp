#ifndef GSP4_VOLUMES_HPP
#define GSP4_VOLUMES_HPP

#include "gsp4/cosets.hpp"
#include "gsp4/report.hpp"

namespace gsp4 {

// Triangularity tag of the stabilizer image H_t in GL2: HT_LOWER is the
// subgroup that reduces lower-triangular mod p, HT_UPPER the one that reduces
// upper-triangular.
enum HTag { HT_LOWER = 0, HT_UPPER = 1 };

struct SubgroupProfile {
  long p = 0;
  std::array<long, 8> A{};   // index [U GL2 : G_t^1], per t-index
  std::array<HTag, 8> H{};   // pattern of H_t
};

// Brute-force profile over U(F_p) x GL2(F_p): counts pairs (u, g) with
// t^{-1} u g-hat t in the Iwahori pattern, classifies H_t = {g : exists u}
// elementwise against the two triangular patterns, and derives
// A_t = p^4 (p-1)^2 (p+1) / count.  Error if H_t matches neither pattern.
SubgroupProfile compute_At_Ht_by_enumeration(long p);

// The closed forms the profile must reproduce.
long a_t_closed(int t_index, long p);
HTag h_t_closed(int t_index);

// Torus-volume factor V_{t,m}.
Rational vt_m(int t_index, long m, long p);

// [Z_{L,p}^x : (Z_p + p^k Z_p xi)^x] counted at working modulus p^K
// (K >= k+1); must equal p^(k-1)(p+1).
long unit_index_oracle(long p, long k, long K, const SParams& s);

// Closed-form volume I_t^{l,m} (valid for all l, including l = -1).
Rational volume_closed(long l, long m, int t_index, long p);

// Assembled product p^{3(l+m)} / ((p+1)^2 (p^2+1)) * A_t * V_{t,m}.
Rational volume_assembled(long l, long m, int t_index, long p,
                          const SubgroupProfile& prof);

inline Rational volume(long l, long m, int t_index, long p) {
  return volume_closed(l, m, t_index, p);
}

// Full cross-check: enumeration profile vs closed A/H tables, unit-index
// oracle vs p^(k-1)(p+1), assembled vs closed volumes on the grid.
VerifyReport verify_volumes(long p, const SParams& s, long l_max, long m_max);

}  // namespace gsp4

#endif

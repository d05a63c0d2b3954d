#ifndef GSP4_ENUMERATE_HPP
#define GSP4_ENUMERATE_HPP

#include <functional>

#include "gsp4/fp.hpp"

namespace gsp4 {

// Order of GSp(4, F_p): p^4 (p-1)^3 (p+1)^2 (p^2+1).
long gsp4_order(long p);

// Order of the Borel subgroup over F_p: p^4 (p-1)^3.
long borel_order(long p);

// Visit every element of GSp(4, F_p) exactly once, by running over
// symplectic bases (columns e1, e2, f1, f2) times a similitude factor.
void enumerate_gsp4(long p, const std::function<void(const FMat&)>& visit);

// Sanity oracle: enumerate and confirm the count and (for small p) that all
// visited elements are distinct similitudes.  Returns the element count.
long enumerate_gsp4_count(long p, bool check_unique);

}  // namespace gsp4

#endif

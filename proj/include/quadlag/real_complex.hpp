#pragma once

#include "quadlag/koszul.hpp"

namespace quadlag {

/* Z2 Betti numbers of the cubical complex R(K) in [-1,1]^n whose cells
 * keep a face of K as interval coordinates and fix signs elsewhere. */
std::vector<unsigned long long> z2_betti_real(const SComplex& k, int cap = 12);

/* Z2 Betti numbers of the quotient of R(K) by the simultaneous sign flip;
 * throws NotFree when K is the full simplex (the origin cell is fixed). */
std::vector<unsigned long long> z2_betti_real_quotient(const SComplex& k,
                                                       int cap = 12);

/* true iff the integral cohomology of R(K) for an all-even wedge, computed
 * from the given half-wedge complex, vanishes in degrees 0 < q < bound */
bool integral_vanishing_range_check(const SComplex& half_wedge, int bound,
                                    unsigned long long cap = kDefaultBasisCap);

}  // namespace quadlag

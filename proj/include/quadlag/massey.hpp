#pragma once

#include "quadlag/koszul.hpp"

namespace quadlag {

struct MasseyResult {
  bool defined = false;
  bool nontrivial = false;
  KCochain representative;
  /* spanning vectors of the subspace the representative was tested against:
   * coboundaries plus [a].H + H.[c] */
  std::vector<KCochain> indeterminacy_basis;
};

/* <a, b, c> for cocycles with [a][b] = [b][c] = 0; field coefficients only.
 * representative = a.g - (-1)^{deg a} h.c where d(h) = ab, d(g) = bc. */
MasseyResult triple_massey(const SComplex& k, const KCochain& a,
                           const KCochain& b, const KCochain& c, Coeff coeff);

/* true iff the cocycle `candidate` represents an element of <a, b, c> */
bool massey_contains(const SComplex& k, const KCochain& a, const KCochain& b,
                     const KCochain& c, const KCochain& candidate, Coeff coeff);

}  // namespace quadlag

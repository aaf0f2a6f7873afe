#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadlag {

using Mask = uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/* Simplicial complex on n vertices stored by its minimal non-faces
 * (Stanley-Reisner generators), as bitmasks. */
struct SComplex {
  int n = 0;
  std::vector<Mask> min_nonfaces;  // antichain
  std::vector<std::string> labels; // optional, size n when present

  bool operator==(const SComplex& o) const {
    return n == o.n && min_nonfaces == o.min_nonfaces;
  }
};

/* Canonical order: sorted masks; asserts the antichain property. */
SComplex make_complex(int n, std::vector<Mask> min_nonfaces,
                      std::vector<std::string> labels = {});

bool is_face(const SComplex& k, Mask tau);
int m_number(const SComplex& k);
SComplex wedge_complex(const SComplex& k, const std::vector<int>& J);

/* All faces of K, grouped by cardinality; faces[t] lists the size-t faces. */
std::vector<std::vector<Mask>> enumerate_faces(const SComplex& k);

/* Faces contained in the support mask s, grouped by cardinality. */
std::vector<std::vector<Mask>> enumerate_faces_in(const SComplex& k, Mask s);

/* Total basis count sum_{tau in K} 2^(n-|tau|) of R(K); throws if > cap. */
unsigned long long koszul_basis_count(const SComplex& k,
                                      unsigned long long cap);

}  // namespace quadlag

#pragma once

#include "quadlag/complex.hpp"
#include "quadlag/linalg.hpp"

#include <map>
#include <utility>

namespace quadlag {

enum class Coeff { Z, Z2, Q };

/* Basis element y_sigma v_tau: sigma and tau disjoint vertex sets, tau a face.
 * Bidegree (-|sigma|, 2|sigma| + 2|tau|), total degree |sigma| + 2|tau|. */
using KTerm = std::pair<Mask, Mask>;  // (sigma, tau)

struct KCochain {
  std::map<KTerm, Rat> terms;

  void add(Mask sigma, Mask tau, const Rat& v);
  bool is_zero() const { return terms.empty(); }
};

KCochain make_term(Mask sigma, Mask tau, const Rat& v = Rat(1));

inline int term_degree(const KTerm& t) {
  return popcount(t.first) + 2 * popcount(t.second);
}
/* total degree if every term has the same one */
std::optional<int> homogeneous_degree(const KCochain& x);

/* d(y_sigma v_tau) = sum over i in sigma of (-1)^pos(i,sigma)
 * y_{sigma-i} v_{tau+i}, terms with tau+i not a face dropped */
KCochain differential(const SComplex& k, const KCochain& x);

/* product in Lambda[y] (x) k[K] / (v_i^2 = y_i v_i = 0) */
KCochain cup_product(const SComplex& k, const KCochain& a, const KCochain& b);

KCochain reduce_mod2(const KCochain& x);

struct CohomologyTable {
  Coeff coeff = Coeff::Z;
  std::vector<unsigned long long> betti;        // by total degree
  std::vector<std::vector<Int>> torsion;        // by total degree, Z only
  // (i, j) = (-|sigma|, 2|sigma| + 2|tau|) -> rank
  std::map<std::pair<int, int>, unsigned long long> bigraded;
};

inline constexpr unsigned long long kDefaultBasisCap = 20000000ull;

CohomologyTable cohomology(const SComplex& k, Coeff coeff,
                           unsigned long long cap = kDefaultBasisCap);

/* brute force over the whole ungrouped basis; only for small n */
CohomologyTable cohomology_dense(const SComplex& k, Coeff coeff);

unsigned long long total_ungraded_dimension(
    const SComplex& k, Coeff coeff, unsigned long long cap = kDefaultBasisCap);

}  // namespace quadlag

#pragma once

#include "quadlag/quadrics.hpp"
#include "quadlag/real_complex.hpp"

namespace quadlag {

enum class Tri { yes, no, unknown };

const char* tri_name(Tri t);

struct Verdict {
  std::string name;
  std::string status;  // decided | hypothesis-dependent | inapplicable
  std::string detail;
};

enum class MaslovStatus { verified, asserted, unverified };

struct MaslovResult {
  Int value;
  MaslovStatus status;
  std::string trail;
};

struct LagrangianReport {
  int ambient_dim = 0;  // L lives in CP^{ambient_dim}
  int torus_rank = 0;   // base torus of the fibration
  std::string fiber_description;
  std::vector<unsigned long long> fiber_betti_z2;  // empty when skipped
  bool monotone = false;
  std::vector<std::string> failed_hypotheses;
  std::optional<Int> maslov_number;
  std::string maslov_status;
  Tri spin = Tri::unknown;
  Tri orientable = Tri::unknown;
  Tri fibration_trivial = Tri::unknown;
  std::string pi1;
  std::vector<Verdict> narrowness;
  std::vector<std::string> hypothesis_trail;
};

/* monotone iff the system admits the projective normal form, passes the
 * embeddedness check, and has a Fano constant; failures are listed */
LagrangianReport monotone_certificate(const QuadricSystem& qs);

/* gcd of the coordinates of the column sum in a basis of the column lattice;
 * the simple-connectivity hypothesis on the fiber is machine-verified only
 * for all-even multiplicities, otherwise it must be assumed explicitly */
MaslovResult minimal_maslov(const QuadricSystem& qs,
                            bool assume_simply_connected_fiber = false);

std::pair<Tri, Tri> spin_orientability(const QuadricSystem& qs);
Tri fibration_triviality(const QuadricSystem& qs);
std::string pi1_summary(const QuadricSystem& qs);
std::vector<Verdict> narrowness_report(const QuadricSystem& qs);

/* Betti profile of the connected sum of j*C(ell+1, j+1) copies of
 * S^{j+2} x S^{2m+ell-j-1} over j = 1..ell (a sphere when ell = 0) */
std::vector<unsigned long long> expected_betti_connected_sum(int m, int ell);

LagrangianReport full_report(const QuadricSystem& qs,
                             bool assume_simply_connected_fiber = false);

}  // namespace quadlag

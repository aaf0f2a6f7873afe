#pragma once

#include "quadlag/polytope.hpp"

namespace quadlag {

/* System of (n'-m') real quadrics  sum_j Gamma[r][j] u_j^2 = delta[r].
 * J records multiwedge multiplicities of the underlying system; the columns of
 * Gamma are stored expanded, copies of base column i grouped consecutively.
 * Sum(J) == Gamma.cols; J all ones when unwedged. */
struct QuadricSystem {
  IntMat Gamma;
  std::vector<Rat> delta;
  std::vector<int> J;

  int ncols() const { return Gamma.cols; }
  int r() const { return Gamma.rows; }  // n - m
  int base_count() const { return (int)J.size(); }
  /* first expanded column index of base column i */
  int offset(int i) const {
    int o = 0;
    for (int k = 0; k < i; k++) o += J[k];
    return o;
  }
  std::vector<Int> base_col(int i) const { return Gamma.col(offset(i)); }
  bool all_even() const {
    for (int j : J)
      if (j % 2) return false;
    return true;
  }
};

QuadricSystem make_system(IntMat Gamma, std::vector<Rat> delta,
                          std::vector<int> J = {});

QuadricSystem polytope_to_quadrics(const Polytope& p);
Polytope quadrics_to_polytope(const QuadricSystem& qs);

/* The system with only the distinct base columns (J stripped to ones). */
QuadricSystem base_system(const QuadricSystem& qs);

bool is_smooth_nonempty(const QuadricSystem& qs);
QuadricSystem multiwedge(const QuadricSystem& qs, const std::vector<int>& J);
bool embeddedness_check(const QuadricSystem& qs);
std::optional<Rat> fano_constant(const QuadricSystem& qs);
QuadricSystem cp_normal_form(const QuadricSystem& qs);

/* Nerve of the base polytope, wedged by J: the nerve of the full system. */
SComplex system_nerve(const QuadricSystem& qs);

struct LatticeData {
  IntMat lambda_tilde;  // rows generate the column lattice of Gamma
  IntMat lambda;        // rows generate <gamma_i - gamma_n>
};
LatticeData lattice_data(const QuadricSystem& qs);

/* Column sum of Gamma (the vector C * delta when the Fano constant exists). */
std::vector<Int> column_sum(const QuadricSystem& qs);

}  // namespace quadlag

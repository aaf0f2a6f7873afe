#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadlag {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

/* Dense matrix over Z, row-major. */
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> e;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), e(size_t(r) * c) {}

  Int& at(int i, int j) { return e[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return e[size_t(i) * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && e == o.e;
  }

  std::vector<Int> row(int i) const {
    return std::vector<Int>(e.begin() + size_t(i) * cols,
                            e.begin() + size_t(i + 1) * cols);
  }
  std::vector<Int> col(int j) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; i++) v[i] = at(i, j);
    return v;
  }
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& m);
Int det(const IntMat& m);  // square only, fraction-free

struct HnfResult {
  IntMat H;
  IntMat U;  // unimodular, U*M = H
};

/* Row-style HNF: pivots positive, entries above pivots reduced into [0, pivot). */
HnfResult hermite_normal_form(const IntMat& m);

struct SnfResult {
  IntMat S;  // diagonal, d1 | d2 | ..., di >= 0
  IntMat U;
  IntMat V;  // U*M*V = S
};

SnfResult smith_normal_form(const IntMat& m);

/* Invariant factors only (diagonal of SNF without transforms; cheaper). */
std::vector<Int> invariant_factors(const IntMat& m);

/* Basis (as rows) of the saturated lattice {x in Z^cols : M x = 0}, HNF-canonical. */
IntMat integer_kernel(const IntMat& m);

int rank(const IntMat& m);

/* Canonical form of the lattice generated by the rows: HNF with zero rows dropped. */
IntMat lattice_canon(const IntMat& gens);

bool lattice_equal(const IntMat& gens_a, const IntMat& gens_b);

/* Integer inverse of a unimodular matrix. */
IntMat unimodular_inverse(const IntMat& u);

/* Affine constraint  sum_i coef[i] x_i + rhs  (relation)  0. */
enum class Rel { Ge, Gt, Eq };

struct Constraint {
  std::vector<Rat> coef;
  Rat rhs;
  Rel rel = Rel::Ge;
};

/* Exact rational feasibility (two-phase simplex, Bland's rule). Strict
 * inequalities handled by maximizing a slack bounded by 1. */
std::optional<std::vector<Rat>> rational_feasible(
    const std::vector<Constraint>& cs, int dim);

/* Solve M x = rhs over Q (M need not be square); nullopt if inconsistent.
 * Free variables are set to zero deterministically. */
std::optional<std::vector<Rat>> solve_rational(const IntMat& m,
                                               const std::vector<Rat>& rhs);

Int vec_gcd(const std::vector<Int>& v);

}  // namespace quadlag

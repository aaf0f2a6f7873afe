#include "quadlag/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace quadlag {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw Error("shape", "mat_mul shape mismatch");
  IntMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; i++)
    for (int k = 0; k < a.cols; k++) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; j++) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMat transpose(const IntMat& m) {
  IntMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) r.at(j, i) = m.at(i, j);
  return r;
}

static void row_swap(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < m.cols; k++) std::swap(m.at(i, k), m.at(j, k));
}

static void row_submul(IntMat& m, int i, int j, const Int& q) {
  // row_i -= q * row_j
  if (q == 0) return;
  for (int k = 0; k < m.cols; k++) m.at(i, k) -= q * m.at(j, k);
}

static void row_neg(IntMat& m, int i) {
  for (int k = 0; k < m.cols; k++) m.at(i, k) = -m.at(i, k);
}

HnfResult hermite_normal_form(const IntMat& m) {
  IntMat H = m;
  IntMat U = IntMat::identity(m.rows);
  int row = 0;
  for (int col = 0; col < H.cols && row < H.rows; col++) {
    for (;;) {
      int p = -1;
      for (int i = row; i < H.rows; i++)
        if (H.at(i, col) != 0 &&
            (p == -1 || mpz_cmpabs(H.at(i, col).get_mpz_t(),
                                   H.at(p, col).get_mpz_t()) < 0))
          p = i;
      if (p == -1) break;
      row_swap(H, row, p);
      row_swap(U, row, p);
      bool clear = true;
      for (int i = row + 1; i < H.rows; i++) {
        if (H.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(),
                   H.at(row, col).get_mpz_t());
        row_submul(H, i, row, q);
        row_submul(U, i, row, q);
        if (H.at(i, col) != 0) clear = false;
      }
      if (clear) break;
    }
    if (row >= H.rows || H.at(row, col) == 0) continue;
    if (H.at(row, col) < 0) {
      row_neg(H, row);
      row_neg(U, row);
    }
    for (int i = 0; i < row; i++) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(),
                 H.at(row, col).get_mpz_t());
      row_submul(H, i, row, q);
      row_submul(U, i, row, q);
    }
    row++;
  }
  return {H, U};
}

static void col_swap(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < m.rows; k++) std::swap(m.at(k, i), m.at(k, j));
}

static void col_submul(IntMat& m, int i, int j, const Int& q) {
  // col_i -= q * col_j
  if (q == 0) return;
  for (int k = 0; k < m.rows; k++) m.at(k, i) -= q * m.at(k, j);
}

static void col_neg(IntMat& m, int i) {
  for (int k = 0; k < m.rows; k++) m.at(k, i) = -m.at(k, i);
}

static void snf_core(IntMat& S, IntMat* U, IntMat* V) {
  int nmin = std::min(S.rows, S.cols);
  for (int t = 0; t < nmin; t++) {
    // locate a nonzero pivot of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < S.rows; i++)
      for (int j = t; j < S.cols; j++)
        if (S.at(i, j) != 0 &&
            (pi == -1 || mpz_cmpabs(S.at(i, j).get_mpz_t(),
                                    S.at(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    row_swap(S, t, pi);
    if (U) row_swap(*U, t, pi);
    col_swap(S, t, pj);
    if (V) col_swap(*V, t, pj);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < S.rows; i++) {
        if (S.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), S.at(i, t).get_mpz_t(),
                   S.at(t, t).get_mpz_t());
        row_submul(S, i, t, q);
        if (U) row_submul(*U, i, t, q);
        if (S.at(i, t) != 0) {
          row_swap(S, i, t);
          if (U) row_swap(*U, i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < S.cols; j++) {
        if (S.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), S.at(t, j).get_mpz_t(),
                   S.at(t, t).get_mpz_t());
        col_submul(S, j, t, q);
        if (V) col_submul(*V, j, t, q);
        if (S.at(t, j) != 0) {
          col_swap(S, j, t);
          if (V) col_swap(*V, j, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot divides the rest of its row/column; enforce divisibility of the block
      bool fixed = true;
      for (int i = t + 1; i < S.rows && fixed; i++)
        for (int j = t + 1; j < S.cols && fixed; j++)
          if (S.at(i, j) % S.at(t, t) != 0) {
            for (int k = 0; k < S.cols; k++) S.at(t, k) += S.at(i, k);
            if (U)
              for (int k = 0; k < U->cols; k++) U->at(t, k) += U->at(i, k);
            fixed = false;
          }
      if (fixed) break;
    }
    if (S.at(t, t) < 0) {
      row_neg(S, t);
      if (U) row_neg(*U, t);
    }
  }
}

SnfResult smith_normal_form(const IntMat& m) {
  SnfResult r{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
  snf_core(r.S, &r.U, &r.V);
  return r;
}

std::vector<Int> invariant_factors(const IntMat& m) {
  IntMat S = m;
  snf_core(S, nullptr, nullptr);
  std::vector<Int> d;
  for (int t = 0; t < std::min(S.rows, S.cols); t++) {
    if (S.at(t, t) == 0) break;
    d.push_back(S.at(t, t));
  }
  return d;
}

IntMat lattice_canon(const IntMat& gens) {
  HnfResult h = hermite_normal_form(gens);
  int nz = 0;
  for (int i = 0; i < h.H.rows; i++) {
    bool zero = true;
    for (int j = 0; j < h.H.cols; j++)
      if (h.H.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (!zero) nz = i + 1;
  }
  IntMat r(nz, h.H.cols);
  for (int i = 0; i < nz; i++)
    for (int j = 0; j < h.H.cols; j++) r.at(i, j) = h.H.at(i, j);
  return r;
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols) throw Error("shape", "lattice_equal dimension mismatch");
  return lattice_canon(a) == lattice_canon(b);
}

IntMat integer_kernel(const IntMat& m) {
  IntMat n = transpose(m);  // cols x rows
  HnfResult h = hermite_normal_form(n);
  std::vector<int> zrows;
  for (int i = 0; i < h.H.rows; i++) {
    bool zero = true;
    for (int j = 0; j < h.H.cols; j++)
      if (h.H.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zrows.push_back(i);
  }
  IntMat k((int)zrows.size(), m.cols);
  for (size_t i = 0; i < zrows.size(); i++)
    for (int j = 0; j < m.cols; j++) k.at((int)i, j) = h.U.at(zrows[i], j);
  return lattice_canon(k);
}

int rank(const IntMat& m) {
  return lattice_canon(m).rows;
}

Int det(const IntMat& m) {
  if (m.rows != m.cols) throw Error("shape", "det of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  // fraction-free Bareiss
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p == -1) return 0;
      row_swap(a, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++)
      for (int j = k + 1; j < n; j++) {
        Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMat unimodular_inverse(const IntMat& u) {
  if (u.rows != u.cols) throw Error("shape", "inverse of non-square matrix");
  int n = u.rows;
  // rational elimination on [U | I]
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < n; j++) a[i][j] = Rat(u.at(i, j));
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; c++) {
    int p = -1;
    for (int i = c; i < n; i++)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p == -1) throw Error("singular", "matrix not invertible");
    std::swap(a[c], a[p]);
    Rat inv = 1 / a[c][c];
    for (int j = 0; j < 2 * n; j++) a[c][j] *= inv;
    for (int i = 0; i < n; i++) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 2 * n; j++) a[i][j] -= f * a[c][j];
    }
  }
  IntMat r(n, n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      Rat v = a[i][n + j];
      v.canonicalize();
      if (v.get_den() != 1)
        throw Error("notunimodular", "inverse is not integral");
      r.at(i, j) = v.get_num();
    }
  return r;
}

Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& m,
                                               const std::vector<Rat>& rhs) {
  int R = m.rows, C = m.cols;
  std::vector<std::vector<Rat>> a(R, std::vector<Rat>(C + 1));
  for (int i = 0; i < R; i++) {
    for (int j = 0; j < C; j++) a[i][j] = Rat(m.at(i, j));
    a[i][C] = rhs[i];
  }
  std::vector<int> pivot_col(R, -1);
  int r = 0;
  for (int c = 0; c < C && r < R; c++) {
    int p = -1;
    for (int i = r; i < R; i++)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    std::swap(a[r], a[p]);
    Rat inv = 1 / a[r][c];
    for (int j = c; j <= C; j++) a[r][j] *= inv;
    for (int i = 0; i < R; i++) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (int j = c; j <= C; j++) a[i][j] -= f * a[r][j];
    }
    pivot_col[r] = c;
    r++;
  }
  for (int i = r; i < R; i++)
    if (a[i][C] != 0) return std::nullopt;
  std::vector<Rat> x(C, Rat(0));
  for (int i = 0; i < r; i++) x[pivot_col[i]] = a[i][C];
  return x;
}

/* ---------------- exact rational simplex ---------------- */

namespace {

struct Simplex {
  // maximize c.z  s.t.  A z = b, z >= 0
  int m, n;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  std::vector<int> basis;  // basis[i] = variable index basic in row i

  // Pivot so that variable `enter` becomes basic in row `r`.
  void pivot(int r, int enter) {
    Rat inv = 1 / A[r][enter];
    for (int j = 0; j < n; j++) A[r][j] *= inv;
    b[r] *= inv;
    for (int i = 0; i < m; i++) {
      if (i == r || A[i][enter] == 0) continue;
      Rat f = A[i][enter];
      for (int j = 0; j < n; j++) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = enter;
  }

  // Bland's rule primal simplex on a feasible tableau; maximizes c.z.
  // Returns false if unbounded.
  bool run(const std::vector<Rat>& c) {
    for (;;) {
      // reduced costs: cbar_j = c_j - sum_i c_{basis[i]} A[i][j]
      std::vector<Rat> y(m, Rat(0));
      for (int i = 0; i < m; i++) y[i] = c[basis[i]];
      int enter = -1;
      for (int j = 0; j < n && enter == -1; j++) {
        bool basic = false;
        for (int i = 0; i < m; i++)
          if (basis[i] == j) {
            basic = true;
            break;
          }
        if (basic) continue;
        Rat cbar = c[j];
        for (int i = 0; i < m; i++)
          if (A[i][j] != 0) cbar -= y[i] * A[i][j];
        if (cbar > 0) enter = j;
      }
      if (enter == -1) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; i++) {
        if (A[i][enter] <= 0) continue;
        Rat ratio = b[i] / A[i][enter];
        if (leave == -1 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == -1) return false;
      pivot(leave, enter);
    }
  }

  Rat objective(const std::vector<Rat>& c) const {
    Rat v(0);
    for (int i = 0; i < m; i++) v += c[basis[i]] * b[i];
    return v;
  }
};

}  // namespace

// maximize c.z s.t. A z = b, z >= 0; returns nullopt if infeasible,
// throws on unbounded (callers arrange bounded objectives).
static std::optional<std::pair<Rat, std::vector<Rat>>> simplex_max(
    std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::vector<Rat> c) {
  int m = (int)A.size();
  int n = m == 0 ? (int)c.size() : (int)A[0].size();
  for (int i = 0; i < m; i++)
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  Simplex sx;
  sx.m = m;
  sx.n = n + m;  // artificials appended
  sx.A.assign(m, std::vector<Rat>(n + m, Rat(0)));
  sx.b = b;
  sx.basis.resize(m);
  for (int i = 0; i < m; i++) {
    for (int j = 0; j < n; j++) sx.A[i][j] = A[i][j];
    sx.A[i][n + i] = 1;
    sx.basis[i] = n + i;
  }
  std::vector<Rat> phase1(n + m, Rat(0));
  for (int i = 0; i < m; i++) phase1[n + i] = -1;
  if (!sx.run(phase1)) throw Error("lp", "phase-1 unbounded (impossible)");
  if (sx.objective(phase1) != 0) return std::nullopt;
  // drive artificials out of the basis
  for (int i = 0; i < m; i++) {
    if (sx.basis[i] < n) continue;
    int piv = -1;
    for (int j = 0; j < n; j++)
      if (sx.A[i][j] != 0) {
        piv = j;
        break;
      }
    if (piv != -1) sx.pivot(i, piv);
    // else: redundant row (all real entries 0, rhs 0); dropped below
  }
  // Rebuild the tableau with artificial columns and redundant rows removed.
  Simplex s2;
  s2.n = n;
  s2.basis.clear();
  s2.A.clear();
  s2.b.clear();
  for (int i = 0; i < m; i++) {
    if (sx.basis[i] >= n) continue;
    s2.A.emplace_back(sx.A[i].begin(), sx.A[i].begin() + n);
    s2.b.push_back(sx.b[i]);
    s2.basis.push_back(sx.basis[i]);
  }
  s2.m = (int)s2.A.size();
  std::vector<Rat> c2(c.begin(), c.begin() + n);
  if (!s2.run(c2)) throw Error("lp", "objective unbounded");
  std::vector<Rat> z(n, Rat(0));
  for (int i = 0; i < s2.m; i++)
    if (s2.basis[i] < n) z[s2.basis[i]] = s2.b[i];
  return std::make_pair(s2.objective(c2), z);
}

std::optional<std::vector<Rat>> rational_feasible(
    const std::vector<Constraint>& cs, int dim) {
  bool strict = false;
  for (const auto& c : cs) {
    if ((int)c.coef.size() != dim)
      throw Error("shape", "constraint dimension mismatch");
    if (c.rel == Rel::Gt) strict = true;
  }
  // variables: x = p - q (2*dim), t (1 if strict), slacks appended per row
  int nslack = 0;
  for (const auto& c : cs)
    if (c.rel != Rel::Eq) nslack++;
  if (strict) nslack++;  // slack for t <= 1
  int base = 2 * dim + (strict ? 1 : 0);
  int nvar = base + nslack;
  int tvar = 2 * dim;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  int slack = base;
  for (const auto& c : cs) {
    std::vector<Rat> row(nvar, Rat(0));
    for (int j = 0; j < dim; j++) {
      row[j] = c.coef[j];
      row[dim + j] = -c.coef[j];
    }
    if (c.rel != Rel::Eq) row[slack++] = -1;
    if (c.rel == Rel::Gt) row[tvar] = -1;
    A.push_back(std::move(row));
    b.push_back(-c.rhs);
  }
  if (strict) {
    std::vector<Rat> row(nvar, Rat(0));
    row[tvar] = 1;
    row[slack++] = 1;
    A.push_back(std::move(row));
    b.push_back(Rat(1));
  }
  std::vector<Rat> obj(nvar, Rat(0));
  if (strict) obj[tvar] = 1;
  auto sol = simplex_max(A, b, obj);
  if (!sol) return std::nullopt;
  if (strict && sol->first <= 0) return std::nullopt;
  std::vector<Rat> x(dim);
  for (int j = 0; j < dim; j++) {
    x[j] = sol->second[j] - sol->second[dim + j];
    x[j].canonicalize();
  }
  return x;
}

}  // namespace quadlag

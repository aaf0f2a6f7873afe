#include "quadlag/quadrics.hpp"

#include <algorithm>
#include <map>

namespace quadlag {

QuadricSystem make_system(IntMat Gamma, std::vector<Rat> delta,
                          std::vector<int> J) {
  if ((int)delta.size() != Gamma.rows)
    throw Error("shape", "delta length must equal the number of quadrics");
  if (J.empty()) J.assign(Gamma.cols, 1);
  int total = 0;
  for (int j : J) {
    if (j < 1) throw Error("range", "multiplicities must be >= 1");
    total += j;
  }
  if (total != Gamma.cols)
    throw Error("shape", "sum of multiplicities must equal the column count");
  for (auto& d : delta) d.canonicalize();
  QuadricSystem qs{std::move(Gamma), std::move(delta), std::move(J)};
  for (int i = 0, off = 0; i < qs.base_count(); off += qs.J[i], i++)
    for (int c = 1; c < qs.J[i]; c++)
      if (qs.Gamma.col(off) != qs.Gamma.col(off + c))
        throw Error("shape", "wedge copies of a column must be identical");
  return qs;
}

QuadricSystem polytope_to_quadrics(const Polytope& p) {
  IntMat Gamma = integer_kernel(p.A);
  std::vector<Rat> delta(Gamma.rows, Rat(0));
  for (int r = 0; r < Gamma.rows; r++)
    for (int j = 0; j < Gamma.cols; j++)
      if (Gamma.at(r, j) != 0) delta[r] += Rat(Gamma.at(r, j)) * p.b[j];
  return make_system(std::move(Gamma), std::move(delta));
}

Polytope quadrics_to_polytope(const QuadricSystem& qs) {
  if (rank(qs.Gamma) != qs.r())
    throw Error("shape", "Gamma rows must be linearly independent");
  IntMat A = integer_kernel(qs.Gamma);  // m x n, rows span the kernel
  // b: nonnegative exact solution of Gamma b = delta
  std::vector<Constraint> cs;
  for (int r = 0; r < qs.r(); r++) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = -qs.delta[r];
    c.coef.resize(qs.ncols());
    for (int j = 0; j < qs.ncols(); j++) c.coef[j] = Rat(qs.Gamma.at(r, j));
    cs.push_back(std::move(c));
  }
  for (int j = 0; j < qs.ncols(); j++) {
    Constraint c;
    c.rel = Rel::Ge;
    c.rhs = 0;
    c.coef.assign(qs.ncols(), Rat(0));
    c.coef[j] = 1;
    cs.push_back(std::move(c));
  }
  // prefer a strictly positive b so the presentation stays irredundant
  auto strict = cs;
  for (auto& c : strict)
    if (c.rel == Rel::Ge) c.rel = Rel::Gt;
  auto b = rational_feasible(strict, qs.ncols());
  if (!b) b = rational_feasible(cs, qs.ncols());
  if (!b) throw Error("Infeasible", "no nonnegative solution of Gamma b = delta");
  return make_polytope(A.rows, A, *b);
}

QuadricSystem base_system(const QuadricSystem& qs) {
  IntMat G(qs.r(), qs.base_count());
  for (int i = 0; i < qs.base_count(); i++) {
    auto c = qs.base_col(i);
    for (int r = 0; r < qs.r(); r++) G.at(r, i) = c[r];
  }
  return make_system(G, qs.delta);
}

std::vector<Int> column_sum(const QuadricSystem& qs) {
  std::vector<Int> s(qs.r(), Int(0));
  for (int r = 0; r < qs.r(); r++)
    for (int j = 0; j < qs.ncols(); j++) s[r] += qs.Gamma.at(r, j);
  return s;
}

static bool in_cone(const std::vector<std::vector<Int>>& cols, int r,
                    const std::vector<Rat>& delta) {
  std::vector<Constraint> cs;
  int d = (int)cols.size();
  for (int row = 0; row < r; row++) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = -delta[row];
    c.coef.resize(d);
    for (int j = 0; j < d; j++) c.coef[j] = Rat(cols[j][row]);
    cs.push_back(std::move(c));
  }
  for (int j = 0; j < d; j++) {
    Constraint c;
    c.rel = Rel::Ge;
    c.rhs = 0;
    c.coef.assign(d, Rat(0));
    c.coef[j] = 1;
    cs.push_back(std::move(c));
  }
  return rational_feasible(cs, d).has_value();
}

bool is_smooth_nonempty(const QuadricSystem& qs) {
  if (rank(qs.Gamma) != qs.r())
    throw Error("shape", "Gamma rows must be linearly independent");
  // distinct base columns (repeating a generator never shrinks a cone)
  std::vector<std::vector<Int>> distinct;
  for (int i = 0; i < qs.base_count(); i++) {
    auto c = qs.base_col(i);
    if (std::find(distinct.begin(), distinct.end(), c) == distinct.end())
      distinct.push_back(c);
  }
  if (!in_cone(distinct, qs.r(), qs.delta)) return false;
  int d = (int)distinct.size();
  if (d > 30) throw Error("CapExceeded", "too many distinct columns");
  for (Mask mask = 1; mask < (Mask(1) << d); mask++) {
    if (popcount(mask) > qs.r() - 1) continue;
    std::vector<std::vector<Int>> sub;
    for (int j = 0; j < d; j++)
      if (mask & (Mask(1) << j)) sub.push_back(distinct[j]);
    if (in_cone(sub, qs.r(), qs.delta)) return false;
  }
  return true;
}

QuadricSystem multiwedge(const QuadricSystem& qs, const std::vector<int>& J) {
  if ((int)J.size() != qs.base_count())
    throw Error("shape", "multiplicity vector length");
  std::vector<int> J2(qs.base_count());
  int total = 0;
  for (int i = 0; i < qs.base_count(); i++) {
    if (J[i] < 1) throw Error("range", "multiplicities must be >= 1");
    J2[i] = qs.J[i] * J[i];
    total += J2[i];
  }
  IntMat G(qs.r(), total);
  int off = 0;
  for (int i = 0; i < qs.base_count(); i++) {
    auto c = qs.base_col(i);
    for (int k = 0; k < J2[i]; k++, off++)
      for (int r = 0; r < qs.r(); r++) G.at(r, off) = c[r];
  }
  return make_system(std::move(G), qs.delta, std::move(J2));
}

LatticeData lattice_data(const QuadricSystem& qs) {
  LatticeData ld;
  ld.lambda_tilde = lattice_canon(transpose(qs.Gamma));
  int n = qs.ncols();
  IntMat diffs(n - 1, qs.r());
  for (int i = 0; i < n - 1; i++)
    for (int r = 0; r < qs.r(); r++)
      diffs.at(i, r) = qs.Gamma.at(r, i) - qs.Gamma.at(r, n - 1);
  ld.lambda = lattice_canon(diffs);
  return ld;
}

/* tau is a face iff some point of R~ has exactly the coordinates in tau zero,
 * i.e. { Gamma u = delta, u >= 0, u_i = 0 on tau } is feasible. This reads the
 * nerve off the system itself, with no choice of origin involved. */
static bool face_feasible(const QuadricSystem& qs, Mask tau) {
  int n = qs.ncols();
  std::vector<Constraint> cs;
  for (int r = 0; r < qs.r(); r++) {
    Constraint c;
    c.rel = Rel::Eq;
    c.rhs = -qs.delta[r];
    c.coef.resize(n);
    for (int j = 0; j < n; j++) c.coef[j] = Rat(qs.Gamma.at(r, j));
    cs.push_back(std::move(c));
  }
  for (int j = 0; j < n; j++) {
    Constraint c;
    c.rel = (tau & (Mask(1) << j)) ? Rel::Eq : Rel::Ge;
    c.rhs = 0;
    c.coef.assign(n, Rat(0));
    c.coef[j] = 1;
    cs.push_back(std::move(c));
  }
  return rational_feasible(cs, n).has_value();
}

static SComplex nerve_of(const QuadricSystem& qs) {
  int n = qs.ncols();
  if (n > 24) throw Error("CapExceeded", "nerve enumeration too large");
  std::vector<Mask> mnf;
  std::vector<std::vector<Mask>> by_size(n + 1);
  for (Mask mask = 1; mask < (Mask(1) << n); mask++)
    by_size[popcount(mask)].push_back(mask);
  for (int size = 1; size <= n; size++)
    for (Mask mask : by_size[size]) {
      bool skip = false;
      for (Mask m : mnf)
        if ((mask & m) == m) {
          skip = true;
          break;
        }
      if (!skip && !face_feasible(qs, mask)) mnf.push_back(mask);
    }
  return make_complex(n, std::move(mnf));
}

SComplex system_nerve(const QuadricSystem& qs) {
  SComplex k = nerve_of(base_system(qs));
  bool trivial = true;
  for (int j : qs.J)
    if (j != 1) trivial = false;
  return trivial ? k : wedge_complex(k, qs.J);
}

bool embeddedness_check(const QuadricSystem& qs) {
  if (!is_smooth_nonempty(qs))
    throw Error("NotSmooth", "system is empty or singular");
  QuadricSystem base = base_system(qs);
  IntMat full = lattice_canon(transpose(base.Gamma));
  bool embedded = true;
  /* Every face complement contains a basic support: r columns whose cone
   * contains delta (supports of size < r are excluded by smoothness). The
   * lattice of a superset contains the lattice of the basic support, so it
   * suffices to test the basic supports. */
  int n = base.ncols();
  int r = qs.r();
  std::vector<int> pick(r);
  for (int i = 0; i < r; i++) pick[i] = i;
  while (embedded) {
    std::vector<std::vector<Int>> sub;
    for (int i : pick) sub.push_back(base.base_col(i));
    if (in_cone(sub, r, base.delta)) {
      IntMat gens(r, r);
      for (int i = 0; i < r; i++)
        for (int j = 0; j < r; j++) gens.at(i, j) = sub[i][j];
      if (!lattice_equal(gens, full)) embedded = false;
    }
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) i--;
    if (i < 0) break;
    pick[i]++;
    for (int j = i + 1; j < r; j++) pick[j] = pick[j - 1] + 1;
  }
  // Theorem-level cross-check against the Delzant predicate; valid when Gamma
  // is a basis of the saturated relation lattice.
  auto inv = invariant_factors(qs.Gamma);
  bool saturated = true;
  for (auto& d : inv)
    if (d != 1) saturated = false;
  if (saturated && (int)inv.size() == qs.r()) {
    try {
      bool delz = is_delzant(quadrics_to_polytope(base));
      if (delz != embedded)
        throw Error("inconsistent",
                    "embeddedness and Delzant predicates disagree");
    } catch (const Error& e) {
      // a degenerate origin choice can make the polytope non-generic; the
      // lattice test above does not depend on that choice
      if (e.code == "inconsistent") throw;
    }
  }
  return embedded;
}

std::optional<Rat> fano_constant(const QuadricSystem& qs) {
  std::vector<Int> s = column_sum(qs);
  int pivot = -1;
  for (int r = 0; r < qs.r(); r++)
    if (qs.delta[r] != 0) {
      pivot = r;
      break;
    }
  if (pivot == -1) return std::nullopt;
  Rat C = Rat(s[pivot]) / qs.delta[pivot];
  C.canonicalize();
  if (C <= 0) return std::nullopt;
  for (int r = 0; r < qs.r(); r++)
    if (Rat(s[r]) != C * qs.delta[r]) return std::nullopt;
  return C;
}

QuadricSystem cp_normal_form(const QuadricSystem& qs) {
  int r = qs.r(), n = qs.ncols();
  auto lam = solve_rational(transpose(qs.Gamma), std::vector<Rat>(n, Rat(1)));
  if (!lam)
    throw Error("NotCPForm",
                "the all-ones vector is not in the row space of Gamma "
                "(the facet normals do not sum to zero)");
  std::vector<Int> lz(r);
  for (int i = 0; i < r; i++) {
    (*lam)[i].canonicalize();
    if ((*lam)[i].get_den() != 1)
      throw Error("NotCPForm",
                  "the all-ones vector is not in the row lattice of Gamma");
    lz[i] = (*lam)[i].get_num();
  }
  IntMat lcol(r, 1);
  for (int i = 0; i < r; i++) lcol.at(i, 0) = lz[i];
  auto h = hermite_normal_form(lcol);
  if (h.H.at(0, 0) != 1)
    throw Error("NotCPForm", "all-ones coefficient vector is not primitive");
  IntMat U = transpose(unimodular_inverse(h.U));
  for (int i = 0; i < r; i++)
    if (U.at(0, i) != lz[i]) throw Error("internal", "completion failed");
  IntMat G = mat_mul(U, qs.Gamma);
  std::vector<Rat> delta(r, Rat(0));
  for (int i = 0; i < r; i++)
    for (int k = 0; k < r; k++)
      delta[i] += Rat(U.at(i, k)) * qs.delta[k];
  // deterministic reduction of the remaining rows against the all-ones row
  for (int i = 1; i < r; i++) {
    Int rowsum = 0;
    for (int j = 0; j < n; j++) rowsum += G.at(i, j);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), rowsum.get_mpz_t(), Int(n).get_mpz_t());
    if (q != 0) {
      for (int j = 0; j < n; j++) G.at(i, j) -= q;
      delta[i] -= Rat(q) * delta[0];
    }
  }
  for (auto& d : delta) d.canonicalize();
  return make_system(std::move(G), std::move(delta), qs.J);
}

}  // namespace quadlag

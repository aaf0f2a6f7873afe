#include "quadlag/polytope.hpp"

#include <algorithm>
#include <map>

namespace quadlag {

static std::vector<Constraint> membership_constraints(const Polytope& p,
                                                      Rel rel) {
  std::vector<Constraint> cs;
  for (int i = 0; i < p.n(); i++) {
    Constraint c;
    c.rel = rel;
    c.rhs = p.b[i];
    c.coef.resize(p.m);
    for (int k = 0; k < p.m; k++) c.coef[k] = Rat(p.A.at(k, i));
    cs.push_back(std::move(c));
  }
  return cs;
}

Polytope make_polytope(int m, IntMat A, std::vector<Rat> b) {
  if (A.rows != m) throw Error("shape", "A must have m rows");
  if ((int)b.size() != A.cols) throw Error("shape", "b length must match facet count");
  for (auto& x : b) x.canonicalize();
  Polytope p{m, std::move(A), std::move(b), {}};
  if (!rational_feasible(membership_constraints(p, Rel::Ge), m))
    throw Error("empty", "feasible set is empty");
  for (int i = 0; i < p.n(); i++)
    for (int j = i + 1; j < p.n(); j++) {
      // positively proportional inequality pair
      Rat t(0);
      bool prop = true;
      for (int k = 0; k < p.m && prop; k++) {
        Rat ai(p.A.at(k, i)), aj(p.A.at(k, j));
        if (ai == 0 && aj == 0) continue;
        if (ai == 0 || aj == 0) prop = false;
        else if (t == 0) t = aj / ai;
        else if (aj != t * ai) prop = false;
      }
      if (!prop || t <= 0) continue;
      if ((t == 0 && p.b[i] == p.b[j]) || (t != 0 && p.b[j] == t * p.b[i]))
        p.warnings.push_back("duplicate inequality pair (" +
                             std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
    }
  return p;
}

bool is_bounded(const Polytope& p) {
  if (rank(p.A) < p.m) return false;
  for (int i = 0; i < p.n(); i++) {
    std::vector<Constraint> cs = membership_constraints(p, Rel::Ge);
    for (auto& c : cs) c.rhs = 0;
    Constraint eq;
    eq.rel = Rel::Eq;
    eq.rhs = Rat(-1);
    eq.coef.resize(p.m);
    for (int k = 0; k < p.m; k++) eq.coef[k] = Rat(p.A.at(k, i));
    cs.push_back(eq);
    if (rational_feasible(cs, p.m)) return false;
  }
  return true;
}

VertexSet enumerate_vertices(const Polytope& p) {
  if (!is_bounded(p)) throw Error("Unbounded", "recession cone is nontrivial");
  int n = p.n(), m = p.m;
  VertexSet vs;
  std::vector<std::vector<Rat>> seen;
  std::vector<Mask> subsets;
  for (Mask mask = 0; mask < (Mask(1) << n); mask++)
    if (popcount(mask) == m) subsets.push_back(mask);
  for (Mask mask : subsets) {
    std::vector<int> S;
    for (int i = 0; i < n; i++)
      if (mask & (Mask(1) << i)) S.push_back(i);
    // solve a_i . x + b_i = 0 for i in S; require unique solution
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m + 1));
    for (int r = 0; r < m; r++) {
      for (int k = 0; k < m; k++) M[r][k] = Rat(p.A.at(k, S[r]));
      M[r][m] = -p.b[S[r]];
    }
    bool singular = false;
    for (int c = 0; c < m && !singular; c++) {
      int piv = -1;
      for (int r = c; r < m; r++)
        if (M[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv == -1) {
        singular = true;
        break;
      }
      std::swap(M[c], M[piv]);
      Rat inv = 1 / M[c][c];
      for (int k = c; k <= m; k++) M[c][k] *= inv;
      for (int r = 0; r < m; r++) {
        if (r == c || M[r][c] == 0) continue;
        Rat f = M[r][c];
        for (int k = c; k <= m; k++) M[r][k] -= f * M[c][k];
      }
    }
    if (singular) continue;
    std::vector<Rat> x(m);
    for (int k = 0; k < m; k++) {
      x[k] = M[k][m];
      x[k].canonicalize();
    }
    bool feasible = true;
    for (int i = 0; i < n && feasible; i++)
      if (p.eval(i, x) < 0) feasible = false;
    if (!feasible) continue;
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
    seen.push_back(x);
    std::vector<int> active;
    for (int i = 0; i < n; i++)
      if (p.eval(i, x) == 0) active.push_back(i);
    vs.vertices.push_back(x);
    vs.active_facets.push_back(active);
  }
  return vs;
}

bool is_generic(const Polytope& p) {
  VertexSet vs = enumerate_vertices(p);
  for (auto& act : vs.active_facets)
    if ((int)act.size() != p.m) return false;
  return true;
}

std::vector<int> irredundant_facets(const Polytope& p) {
  std::vector<int> out;
  for (int i = 0; i < p.n(); i++) {
    std::vector<Constraint> cs = membership_constraints(p, Rel::Gt);
    cs[i].rel = Rel::Eq;
    if (rational_feasible(cs, p.m)) out.push_back(i);
  }
  return out;
}

bool is_delzant(const Polytope& p) {
  VertexSet vs = enumerate_vertices(p);
  for (auto& act : vs.active_facets)
    if ((int)act.size() != p.m)
      throw Error("NotGeneric", "polytope is not generic");
  for (auto& act : vs.active_facets) {
    IntMat M(p.m, p.m);
    for (int c = 0; c < p.m; c++)
      for (int r = 0; r < p.m; r++) M.at(r, c) = p.A.at(r, act[c]);
    Int d = det(M);
    if (d != 1 && d != -1) return false;
  }
  return true;
}

bool is_fano(const Polytope& p) {
  if (!is_delzant(p)) throw Error("NotDelzant", "polytope is not Delzant");
  for (int i = 0; i < p.n(); i++) {
    Int g = vec_gcd(p.A.col(i));
    if (g != 1) return false;
  }
  for (int i = 1; i < p.n(); i++)
    if (p.b[i] != p.b[0]) return false;
  return p.b[0] > 0;
}

Polytope normalize_b(const Polytope& p) {
  std::optional<std::vector<Rat>> interior;
  bool origin_ok = true;
  for (int i = 0; i < p.n(); i++)
    if (p.b[i] <= 0) origin_ok = false;
  if (origin_ok)
    interior = std::vector<Rat>(p.m, Rat(0));
  else
    interior = rational_feasible(membership_constraints(p, Rel::Gt), p.m);
  if (!interior) throw Error("EmptyInterior", "polytope has empty interior");
  std::vector<Rat> bp(p.n());
  for (int i = 0; i < p.n(); i++) {
    bp[i] = p.eval(i, *interior);
    bp[i].canonicalize();
  }
  // common value C = lcm_i ( p_i / gcd(p_i, q_i * g_i) ) with b'_i = p_i/q_i
  Int C = 1;
  for (int i = 0; i < p.n(); i++) {
    Int g = vec_gcd(p.A.col(i));
    Int num = bp[i].get_num(), den = bp[i].get_den();
    Int t;
    mpz_gcd(t.get_mpz_t(), num.get_mpz_t(), Int(den * g).get_mpz_t());
    Int need = num / t;
    mpz_lcm(C.get_mpz_t(), C.get_mpz_t(), need.get_mpz_t());
  }
  IntMat A2(p.m, p.n());
  for (int i = 0; i < p.n(); i++) {
    Rat s = Rat(C) / bp[i];
    for (int k = 0; k < p.m; k++) {
      Rat v = s * Rat(p.A.at(k, i));
      v.canonicalize();
      A2.at(k, i) = v.get_num();
    }
  }
  return make_polytope(p.m, A2, std::vector<Rat>(p.n(), Rat(C)));
}

std::vector<std::vector<Rat>> dual_polytope(const Polytope& p) {
  for (int i = 0; i < p.n(); i++)
    if (p.b[i] <= 0)
      throw Error("OriginNotInterior", "some b_i <= 0; normalize first");
  std::vector<std::vector<Rat>> verts;
  for (int i = 0; i < p.n(); i++) {
    std::vector<Rat> v(p.m);
    for (int k = 0; k < p.m; k++) {
      v[k] = Rat(p.A.at(k, i)) / p.b[i];
      v[k].canonicalize();
    }
    verts.push_back(v);
  }
  return verts;
}

SComplex nerve(const Polytope& p) {
  if (!is_generic(p)) throw Error("NotGeneric", "nerve requires a generic polytope");
  if ((int)irredundant_facets(p).size() != p.n())
    throw Error("Redundant", "nerve requires an irredundant presentation");
  int n = p.n();
  std::vector<Mask> mnf;
  std::vector<Mask> by_size[64];
  for (Mask mask = 1; mask < (Mask(1) << n); mask++)
    by_size[popcount(mask)].push_back(mask);
  for (int size = 1; size <= n; size++) {
    for (Mask mask : by_size[size]) {
      bool skip = false;
      for (Mask m : mnf)
        if ((mask & m) == m) {
          skip = true;
          break;
        }
      if (skip) continue;
      std::vector<Constraint> cs = membership_constraints(p, Rel::Ge);
      for (int i = 0; i < n; i++)
        if (mask & (Mask(1) << i)) cs[i].rel = Rel::Eq;
      if (!rational_feasible(cs, p.m)) mnf.push_back(mask);
    }
  }
  return make_complex(n, std::move(mnf));
}

Polytope cut_vertex(const Polytope& p, const std::vector<Rat>& v,
                    const Rat& depth) {
  if (depth <= 0) throw Error("range", "depth must be positive");
  VertexSet vs = enumerate_vertices(p);
  int vi = -1;
  for (size_t i = 0; i < vs.vertices.size(); i++)
    if (vs.vertices[i] == v) {
      vi = (int)i;
      break;
    }
  if (vi == -1) throw Error("NotVertex", "point is not a vertex of P");
  std::vector<Int> s(p.m, Int(0));
  for (int i : vs.active_facets[vi])
    for (int k = 0; k < p.m; k++) s[k] += p.A.at(k, i);
  Int g = vec_gcd(s);
  if (g == 0) throw Error("degenerate", "active normals sum to zero");
  for (auto& x : s) x /= g;
  Rat av(0);
  for (int k = 0; k < p.m; k++) av += Rat(s[k]) * v[k];
  Rat bnew = -av - depth;
  bnew.canonicalize();
  for (size_t i = 0; i < vs.vertices.size(); i++) {
    if ((int)i == vi) continue;
    Rat val = bnew;
    for (int k = 0; k < p.m; k++) val += Rat(s[k]) * vs.vertices[i][k];
    if (val <= 0) throw Error("DepthTooLarge", "cut removes another vertex");
  }
  IntMat A2(p.m, p.n() + 1);
  for (int i = 0; i < p.n(); i++)
    for (int k = 0; k < p.m; k++) A2.at(k, i) = p.A.at(k, i);
  for (int k = 0; k < p.m; k++) A2.at(k, p.n()) = s[k];
  std::vector<Rat> b2 = p.b;
  b2.push_back(bnew);
  return make_polytope(p.m, A2, b2);
}

}  // namespace quadlag

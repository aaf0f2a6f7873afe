#include "quadlag/massey.hpp"

#include <algorithm>
#include <map>

namespace quadlag {

namespace {

Rat fnorm(const Rat& x, bool mod2) {
  if (!mod2) return x;
  if (x.get_den() % 2 == 0) throw Error("coeff", "denominator is even");
  Int r = x.get_num() % 2;
  return r == 0 ? Rat(0) : Rat(1);
}

/* dense solve M x = b over Q or GF(2); M given column-wise */
std::optional<std::vector<Rat>> field_solve(
    std::vector<std::vector<Rat>> cols, std::vector<Rat> b, bool mod2) {
  int nc = (int)cols.size();
  int nr = (int)b.size();
  for (auto& c : cols)
    for (auto& v : c) v = fnorm(v, mod2);
  for (auto& v : b) v = fnorm(v, mod2);
  // augmented row reduction
  std::vector<int> pivot_col;
  int row = 0;
  std::vector<int> where(nc, -1);
  for (int c = 0; c < nc && row < nr; c++) {
    int pr = -1;
    for (int r = row; r < nr; r++)
      if (cols[c][r] != 0) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    for (int cc = 0; cc < nc; cc++) std::swap(cols[cc][pr], cols[cc][row]);
    std::swap(b[pr], b[row]);
    Rat inv = 1 / cols[c][row];
    for (int cc = 0; cc < nc; cc++)
      cols[cc][row] = fnorm(cols[cc][row] * inv, mod2);
    b[row] = fnorm(b[row] * inv, mod2);
    for (int r = 0; r < nr; r++) {
      if (r == row || cols[c][r] == 0) continue;
      Rat f = cols[c][r];
      for (int cc = 0; cc < nc; cc++)
        cols[cc][r] = fnorm(cols[cc][r] - f * cols[cc][row], mod2);
      b[r] = fnorm(b[r] - f * b[row], mod2);
    }
    where[c] = row;
    row++;
  }
  // consistency: rows beyond the pivot rows must have b = 0
  for (int r = row; r < nr; r++)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rat> x(nc, Rat(0));
  for (int c = 0; c < nc; c++)
    if (where[c] != -1) {
      x[c] = b[where[c]];
      x[c].canonicalize();
    }
  return x;
}

struct Levels {
  Mask support;
  std::vector<std::vector<Mask>> faces;
  std::vector<std::map<Mask, int>> index;
};

Levels levels_in(const SComplex& k, Mask s) {
  Levels lv;
  lv.support = s;
  lv.faces = enumerate_faces_in(k, s);
  lv.index.resize(lv.faces.size());
  for (size_t t = 0; t < lv.faces.size(); t++)
    for (int i = 0; i < (int)lv.faces[t].size(); i++)
      lv.index[t][lv.faces[t][i]] = i;
  return lv;
}

/* coordinates of a support-homogeneous cochain component in level t of S */
std::vector<Rat> coords(const Levels& lv, int t, const KCochain& x) {
  std::vector<Rat> v(lv.faces[t].size(), Rat(0));
  for (auto& [term, c] : x.terms) {
    if ((term.first | term.second) != lv.support) continue;
    if ((int)popcount(term.second) != t) continue;
    v[lv.index[t].at(term.second)] = c;
  }
  return v;
}

KCochain level_term(Mask s, Mask tau, const Rat& c) {
  return make_term(s & ~tau, tau, c);
}

/* column vectors of d : level t-1 -> level t inside support s */
std::vector<std::vector<Rat>> d_columns(const SComplex& k, const Levels& lv,
                                        int t) {
  std::vector<std::vector<Rat>> cols;
  if (t - 1 < 0 || t - 1 >= (int)lv.faces.size()) return cols;
  int nr = t < (int)lv.faces.size() ? (int)lv.faces[t].size() : 0;
  for (Mask tau : lv.faces[t - 1]) {
    auto img = differential(k, level_term(lv.support, tau, Rat(1)));
    std::vector<Rat> col(nr, Rat(0));
    for (auto& [term, c] : img.terms) col[lv.index[t].at(term.second)] = c;
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<Mask> supports_of(const KCochain& x) {
  std::vector<Mask> out;
  for (auto& [term, c] : x.terms) {
    Mask s = term.first | term.second;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

/* solve d(h) = target (support by support); nullopt if the class is nonzero */
std::optional<KCochain> solve_bounding(const SComplex& k,
                                       const KCochain& target, bool mod2) {
  KCochain h;
  for (Mask s : supports_of(target)) {
    auto deg = homogeneous_degree(target);
    int t = *deg - popcount(s);
    auto lv = levels_in(k, s);
    if (t < 0 || t >= (int)lv.faces.size())
      throw Error("internal", "degree outside the support range");
    if (t == 0) return std::nullopt;  // nonzero target, no source level
    auto cols = d_columns(k, lv, t);
    auto sol = field_solve(cols, coords(lv, t, target), mod2);
    if (!sol) return std::nullopt;
    for (int j = 0; j < (int)cols.size(); j++)
      if ((*sol)[j] != 0)
        h.add(s & ~lv.faces[t - 1][j], lv.faces[t - 1][j], (*sol)[j]);
  }
  return h;
}

/* basis of cocycles of the given total degree supported exactly on s */
std::vector<KCochain> cocycle_basis(const SComplex& k, Mask s, int deg,
                                    bool mod2) {
  std::vector<KCochain> out;
  int t = deg - popcount(s);
  auto lv = levels_in(k, s);
  if (t < 0 || t >= (int)lv.faces.size()) return out;
  // column elimination on the images, tracking the combination of faces;
  // columns that reduce to zero give kernel elements
  auto m = d_columns(k, lv, t + 1);  // m[j] = image of face j
  int nc = (int)lv.faces[t].size();
  int nr = t + 1 < (int)lv.faces.size() ? (int)lv.faces[t + 1].size() : 0;
  for (auto& col : m)
    for (auto& v : col) v = fnorm(v, mod2);
  std::vector<std::vector<Rat>> comb(nc, std::vector<Rat>(nc, Rat(0)));
  for (int j = 0; j < nc; j++) comb[j][j] = 1;
  std::vector<int> pivotRow(nc, -1);
  for (int j = 0; j < nc; j++) {
    for (int jj = 0; jj < j; jj++) {
      if (pivotRow[jj] == -1) continue;
      Rat f = m[j][pivotRow[jj]];
      if (f == 0) continue;
      for (int r = 0; r < nr; r++)
        m[j][r] = fnorm(m[j][r] - f * m[jj][r], mod2);
      for (int cidx = 0; cidx < nc; cidx++)
        comb[j][cidx] = fnorm(comb[j][cidx] - f * comb[jj][cidx], mod2);
    }
    int pr = -1;
    for (int r = 0; r < nr; r++)
      if (m[j][r] != 0) {
        pr = r;
        break;
      }
    if (pr == -1) {
      KCochain z;
      for (int cidx = 0; cidx < nc; cidx++)
        if (comb[j][cidx] != 0)
          z.add(s & ~lv.faces[t][cidx], lv.faces[t][cidx], comb[j][cidx]);
      out.push_back(std::move(z));
    } else {
      Rat inv = 1 / m[j][pr];
      for (int r = 0; r < nr; r++) m[j][r] = fnorm(m[j][r] * inv, mod2);
      for (int cidx = 0; cidx < nc; cidx++)
        comb[j][cidx] = fnorm(comb[j][cidx] * inv, mod2);
      pivotRow[j] = pr;
    }
  }
  return out;
}

bool is_monomial(const KCochain& x) { return x.terms.size() == 1; }

/* x in coboundaries + a.Z^{degg} + Z^{degh}.c, support by support; collects
 * the product spanning vectors when sink is given */
bool in_indeterminacy(const SComplex& k, const KCochain& a, const KCochain& c,
                      const KCochain& x, int degg, int degh, bool mod2,
                      std::vector<KCochain>* sink) {
  auto deg = homogeneous_degree(x);
  if (!deg) throw Error("internal", "membership input not homogeneous");
  Mask sa = a.terms.begin()->first.first | a.terms.begin()->first.second;
  Mask sc = c.terms.begin()->first.first | c.terms.begin()->first.second;
  for (Mask t : supports_of(x)) {
    auto lv = levels_in(k, t);
    int level = *deg - popcount(t);
    std::vector<std::vector<Rat>> span;
    for (auto col : d_columns(k, lv, level)) span.push_back(col);
    auto push_products = [&](bool left) {
      Mask outer = left ? sa : sc;
      if (outer & ~t) return;
      int zdeg = left ? degg : degh;
      for (auto& z : cocycle_basis(k, t & ~outer, zdeg, mod2)) {
        KCochain p = left ? cup_product(k, a, z) : cup_product(k, z, c);
        if (mod2) p = reduce_mod2(p);
        if (p.is_zero()) continue;
        span.push_back(coords(lv, level, p));
        if (sink) sink->push_back(std::move(p));
      }
    };
    push_products(true);
    push_products(false);
    if (!field_solve(span, coords(lv, level, x), mod2)) return false;
  }
  return true;
}

}  // namespace

MasseyResult triple_massey(const SComplex& k, const KCochain& a_in,
                           const KCochain& b_in, const KCochain& c_in,
                           Coeff coeff) {
  if (coeff == Coeff::Z)
    throw Error("coeff", "triple products over Z are not supported");
  bool mod2 = coeff == Coeff::Z2;
  KCochain a = mod2 ? reduce_mod2(a_in) : a_in;
  KCochain b = mod2 ? reduce_mod2(b_in) : b_in;
  KCochain c = mod2 ? reduce_mod2(c_in) : c_in;
  for (auto* x : {&a, &b, &c}) {
    auto dx = differential(k, *x);
    if (mod2) dx = reduce_mod2(dx);
    if (!dx.is_zero()) throw Error("NotCocycle", "input is not a cocycle");
    if (!homogeneous_degree(*x))
      throw Error("NotCocycle", "inputs must be homogeneous");
  }
  if (!is_monomial(a) || !is_monomial(c))
    throw Error("unsupported",
                "outer factors must be single basis elements");
  int dega = *homogeneous_degree(a);
  MasseyResult res;

  auto ab = cup_product(k, a, b);
  if (mod2) ab = reduce_mod2(ab);
  auto bc = cup_product(k, b, c);
  if (mod2) bc = reduce_mod2(bc);
  auto h = ab.is_zero() ? std::optional<KCochain>(KCochain{})
                        : solve_bounding(k, ab, mod2);
  auto g = bc.is_zero() ? std::optional<KCochain>(KCochain{})
                        : solve_bounding(k, bc, mod2);
  if (!h || !g) return res;  // defined = false
  res.defined = true;

  KCochain rep = cup_product(k, a, *g);
  auto hc = cup_product(k, *h, c);
  for (auto& [term, v] : hc.terms)
    rep.add(term.first, term.second, dega % 2 ? v : -v);
  if (mod2) rep = reduce_mod2(rep);
  res.representative = rep;
  {
    auto drep = differential(k, rep);
    if (mod2) drep = reduce_mod2(drep);
    if (!drep.is_zero()) throw Error("internal", "representative not closed");
  }
  if (rep.is_zero()) return res;  // trivial

  int degg = *homogeneous_degree(b) + *homogeneous_degree(c) - 1;
  int degh = dega + *homogeneous_degree(b) - 1;
  res.nontrivial = !in_indeterminacy(k, a, c, rep, degg, degh, mod2,
                                     &res.indeterminacy_basis);
  return res;
}

bool massey_contains(const SComplex& k, const KCochain& a_in,
                     const KCochain& b_in, const KCochain& c_in,
                     const KCochain& candidate, Coeff coeff) {
  auto res = triple_massey(k, a_in, b_in, c_in, coeff);
  if (!res.defined) return false;
  bool mod2 = coeff == Coeff::Z2;
  KCochain cand = mod2 ? reduce_mod2(candidate) : candidate;
  {
    auto dc = differential(k, cand);
    if (mod2) dc = reduce_mod2(dc);
    if (!dc.is_zero()) throw Error("NotCocycle", "candidate is not a cocycle");
  }
  KCochain diff = cand;
  for (auto& [t, v] : res.representative.terms) diff.add(t.first, t.second, -v);
  if (mod2) diff = reduce_mod2(diff);
  if (diff.is_zero()) return true;
  KCochain a = mod2 ? reduce_mod2(a_in) : a_in;
  KCochain b = mod2 ? reduce_mod2(b_in) : b_in;
  KCochain c = mod2 ? reduce_mod2(c_in) : c_in;
  int degg = *homogeneous_degree(b) + *homogeneous_degree(c) - 1;
  int degh = *homogeneous_degree(a) + *homogeneous_degree(b) - 1;
  return in_indeterminacy(k, a, c, diff, degg, degh, mod2, nullptr);
}

}  // namespace quadlag

#include "quadlag/koszul.hpp"

#include <algorithm>
#include <unordered_map>

namespace quadlag {

void KCochain::add(Mask sigma, Mask tau, const Rat& v) {
  if (v == 0) return;
  KTerm key{sigma, tau};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, v);
    return;
  }
  it->second += v;
  it->second.canonicalize();
  if (it->second == 0) terms.erase(it);
}

KCochain make_term(Mask sigma, Mask tau, const Rat& v) {
  KCochain c;
  c.add(sigma, tau, v);
  return c;
}

std::optional<int> homogeneous_degree(const KCochain& x) {
  std::optional<int> deg;
  for (auto& [t, v] : x.terms) {
    int d = term_degree(t);
    if (!deg) deg = d;
    else if (*deg != d) return std::nullopt;
  }
  return deg;
}

KCochain reduce_mod2(const KCochain& x) {
  KCochain out;
  for (auto& [t, v] : x.terms) {
    if (v.get_den() % 2 == 0) throw Error("coeff", "denominator is even");
    Int r = v.get_num() % 2;
    if (r != 0) out.add(t.first, t.second, Rat(1));
  }
  return out;
}

static int pos_in(Mask sigma, int i) {
  return popcount(sigma & ((Mask(1) << i) - 1));
}

KCochain differential(const SComplex& k, const KCochain& x) {
  KCochain out;
  for (auto& [t, v] : x.terms) {
    Mask sigma = t.first, tau = t.second;
    for (Mask rest = sigma; rest;) {
      int i = __builtin_ctzll(rest);
      rest &= rest - 1;
      Mask tau2 = tau | (Mask(1) << i);
      if (!is_face(k, tau2)) continue;
      Rat c = pos_in(sigma, i) % 2 ? -v : v;
      out.add(sigma & ~(Mask(1) << i), tau2, c);
    }
  }
  return out;
}

static int inversions(Mask s1, Mask s2) {
  int inv = 0;
  for (Mask rest = s2; rest;) {
    int j = __builtin_ctzll(rest);
    rest &= rest - 1;
    inv += popcount(s1 >> (j + 1));
  }
  return inv;
}

KCochain cup_product(const SComplex& k, const KCochain& a, const KCochain& b) {
  KCochain out;
  for (auto& [ta, va] : a.terms)
    for (auto& [tb, vb] : b.terms) {
      Mask s1 = ta.first, t1 = ta.second, s2 = tb.first, t2 = tb.second;
      Mask all1 = s1 | t1, all2 = s2 | t2;
      if (all1 & all2) continue;  // any shared vertex dies on the relations
      if (!is_face(k, t1 | t2)) continue;
      Rat c = va * vb;
      if (inversions(s1, s2) % 2) c = -c;
      out.add(s1 | s2, t1 | t2, c);
    }
  return out;
}

namespace {

/* rank over GF(2) of a 0/1 matrix given as row bitsets */
int rank_mod2(std::vector<std::vector<uint64_t>>& rows, int ncols) {
  int nwords = (ncols + 63) / 64;
  int r = 0;
  for (int c = 0; c < ncols && r < (int)rows.size(); c++) {
    int w = c / 64;
    uint64_t bit = uint64_t(1) << (c % 64);
    int piv = -1;
    for (int i = r; i < (int)rows.size(); i++)
      if (rows[i][w] & bit) {
        piv = i;
        break;
      }
    if (piv == -1) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = 0; i < (int)rows.size(); i++)
      if (i != r && (rows[i][w] & bit))
        for (int j = 0; j < nwords; j++) rows[i][j] ^= rows[r][j];
    r++;
  }
  return r;
}

struct LevelData {
  std::vector<Mask> faces;
  std::unordered_map<Mask, int> index;
};

/* boundary-step data for one support: faces of K inside S by cardinality */
std::vector<LevelData> support_levels(const SComplex& k, Mask s) {
  auto grouped = enumerate_faces_in(k, s);
  std::vector<LevelData> lv(grouped.size());
  for (size_t t = 0; t < grouped.size(); t++) {
    lv[t].faces = grouped[t];
    for (int i = 0; i < (int)lv[t].faces.size(); i++)
      lv[t].index[lv[t].faces[i]] = i;
  }
  return lv;
}

using SparseRows = std::vector<std::map<int, Int>>;

/* d_t : span(faces of size t in S) -> span(faces of size t+1 in S),
 * tau -> sum (-1)^{pos(i, S - tau)} (tau + i); rows indexed by (t+1)-faces */
SparseRows level_matrix(const SComplex& k, Mask s,
                        const std::vector<LevelData>& lv, int t) {
  int rows = t + 1 < (int)lv.size() ? (int)lv[t + 1].faces.size() : 0;
  SparseRows d(rows);
  if (rows == 0) return d;
  for (int j = 0; j < (int)lv[t].faces.size(); j++) {
    Mask tau = lv[t].faces[j];
    Mask sigma = s & ~tau;
    for (Mask rest = sigma; rest;) {
      int i = __builtin_ctzll(rest);
      rest &= rest - 1;
      auto it = lv[t + 1].index.find(tau | (Mask(1) << i));
      if (it == lv[t + 1].index.end()) continue;
      d[it->second][j] = pos_in(sigma, i) % 2 ? -1 : 1;
    }
  }
  return d;
}

/* Rank of a sparse integer matrix; torsion collected for Z. Unit pivots are
 * eliminated sparsely (invariant factor 1 each); whatever is left, usually
 * nothing, goes through the dense Smith form. */
int sparse_rank(SparseRows rows, int ncols, Coeff coeff,
                std::vector<Int>* tors) {
  if (tors) tors->clear();
  int nrows = (int)rows.size();
  if (nrows == 0 || ncols == 0) return 0;
  if (coeff == Coeff::Z2) {
    int nwords = (ncols + 63) / 64;
    std::vector<std::vector<uint64_t>> bits(nrows,
                                            std::vector<uint64_t>(nwords, 0));
    for (int i = 0; i < nrows; i++)
      for (auto& [j, v] : rows[i])
        if (v % 2 != 0) bits[i][j / 64] |= uint64_t(1) << (j % 64);
    return rank_mod2(bits, ncols);
  }
  std::vector<char> rowDone(nrows, 0);
  std::vector<char> colDone(ncols, 0);
  int unit = 0;
  for (;;) {
    int pr = -1, pc = -1;
    size_t best = SIZE_MAX;
    for (int i = 0; i < nrows; i++) {
      if (rowDone[i] || rows[i].empty() || rows[i].size() >= best) continue;
      for (auto& [j, v] : rows[i])
        if (v == 1 || v == -1) {
          pr = i;
          pc = j;
          best = rows[i].size();
          break;
        }
    }
    if (pr == -1) break;
    Int piv = rows[pr][pc];
    for (int i = 0; i < nrows; i++) {
      if (i == pr || rowDone[i]) continue;
      auto it = rows[i].find(pc);
      if (it == rows[i].end()) continue;
      Int m = it->second * piv;  // piv inverse equals piv for units
      for (auto& [j, v] : rows[pr]) {
        if (colDone[j]) continue;
        auto jt = rows[i].find(j);
        if (jt == rows[i].end()) {
          Int nv = -m * v;
          if (nv != 0) rows[i][j] = nv;
        } else {
          jt->second -= m * v;
          if (jt->second == 0) rows[i].erase(jt);
        }
      }
    }
    rowDone[pr] = 1;
    colDone[pc] = 1;
    unit++;
  }
  // dense remainder
  std::vector<int> ri, ci;
  std::vector<int> colpos(ncols, -1);
  for (int i = 0; i < nrows; i++)
    if (!rowDone[i] && !rows[i].empty()) ri.push_back(i);
  for (auto i : ri)
    for (auto& [j, v] : rows[i])
      if (!colDone[j] && colpos[j] == -1) {
        colpos[j] = (int)ci.size();
        ci.push_back(j);
      }
  if (ri.empty()) return unit;
  IntMat rem((int)ri.size(), (int)ci.size());
  for (int a = 0; a < (int)ri.size(); a++)
    for (auto& [j, v] : rows[ri[a]])
      if (!colDone[j]) rem.at(a, colpos[j]) = v;
  if (coeff == Coeff::Q || !tors) return unit + rank(rem);
  auto inv = invariant_factors(rem);
  for (auto& f : inv) {
    Int a = f < 0 ? Int(-f) : f;
    if (a != 1) tors->push_back(a);
  }
  return unit + (int)inv.size();
}

int matrix_rank(const IntMat& d, Coeff coeff, std::vector<Int>* tors) {
  if (tors) tors->clear();
  if (d.rows == 0 || d.cols == 0) return 0;
  if (coeff == Coeff::Z2) {
    int nwords = (d.cols + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(d.rows,
                                            std::vector<uint64_t>(nwords, 0));
    for (int i = 0; i < d.rows; i++)
      for (int j = 0; j < d.cols; j++)
        if (d.at(i, j) % 2 != 0) rows[i][j / 64] |= uint64_t(1) << (j % 64);
    return rank_mod2(rows, d.cols);
  }
  if (coeff == Coeff::Q || !tors) return rank(d);
  auto inv = invariant_factors(d);
  for (auto& f : inv)
    if (f != 1 && f != -1) tors->push_back(f);
  return (int)inv.size();
}

struct Accum {
  CohomologyTable table;

  void ensure(int deg) {
    if ((int)table.betti.size() <= deg) {
      table.betti.resize(deg + 1, 0);
      table.torsion.resize(deg + 1);
    }
  }
  void contribute(int deg, int p, int q, long long rank,
                  const std::vector<Int>& tors) {
    ensure(deg);
    table.betti[deg] += rank;
    if (rank != 0) table.bigraded[{p, q}] += rank;
    for (auto& f : tors) table.torsion[deg].push_back(f);
  }
};

}  // namespace

CohomologyTable cohomology(const SComplex& k, Coeff coeff,
                           unsigned long long cap) {
  koszul_basis_count(k, cap);
  Accum acc;
  acc.table.coeff = coeff;
  int maxface = (int)enumerate_faces(k).size() - 1;
  acc.ensure(k.n + maxface);
  bool z = coeff == Coeff::Z;
  Mask all = k.n >= 64 ? ~Mask(0) : (Mask(1) << k.n) - 1;
  std::vector<Int> tors, prev_tors;
  for (Mask s = 0; s <= all; s++) {
    if (s != 0) {
      // a vertex of S in no non-face inside S is a cone point of the induced
      // complex; the whole block is then acyclic and can be skipped
      Mask covered = 0;
      for (Mask m : k.min_nonfaces)
        if ((m & ~s) == 0) covered |= m;
      if (covered != s) {
        if (s == all) break;
        continue;
      }
    }
    auto lv = support_levels(k, s);
    int ns = popcount(s);
    int prev_rank = 0;
    prev_tors.clear();
    for (int t = 0; t < (int)lv.size(); t++) {
      SparseRows d = level_matrix(k, s, lv, t);
      int r = sparse_rank(std::move(d), (int)lv[t].faces.size(), coeff,
                          z ? &tors : nullptr);
      long long free_rank = (long long)lv[t].faces.size() - r - prev_rank;
      acc.contribute(ns + t, -(ns - t), 2 * ns, free_rank, prev_tors);
      prev_rank = r;
      prev_tors = tors;
      tors.clear();
    }
    if (s == all) break;  // avoid wrap at n = 64 guards; n < 64 always
  }
  return acc.table;
}

CohomologyTable cohomology_dense(const SComplex& k, Coeff coeff) {
  if (k.n > 12) throw Error("CapExceeded", "dense path is for small n only");
  // full basis grouped by total degree
  int maxface = (int)enumerate_faces(k).size() - 1;
  int top = k.n + maxface;
  std::vector<std::vector<KTerm>> basis(top + 1);
  std::vector<std::map<KTerm, int>> index(top + 1);
  Mask all = (Mask(1) << k.n) - 1;
  for (auto& level : enumerate_faces(k))
    for (Mask tau : level) {
      Mask comp = all & ~tau;
      Mask sigma = comp;
      for (;;) {
        int deg = popcount(sigma) + 2 * popcount(tau);
        index[deg][{sigma, tau}] = 0;
        if (sigma == 0) break;
        sigma = (sigma - 1) & comp;
      }
    }
  for (int d = 0; d <= top; d++)
    for (auto& [t, idx] : index[d]) {
      idx = (int)basis[d].size();
      basis[d].push_back(t);
    }
  Accum acc;
  acc.table.coeff = coeff;
  acc.ensure(top);
  bool zz = coeff == Coeff::Z;
  std::vector<Int> tors, prev_tors;
  int prev_rank = 0;
  for (int d = 0; d <= top; d++) {
    int rows = d + 1 <= top ? (int)basis[d + 1].size() : 0;
    IntMat m(rows, (int)basis[d].size());
    for (int j = 0; j < (int)basis[d].size(); j++) {
      auto img = differential(k, make_term(basis[d][j].first,
                                           basis[d][j].second));
      for (auto& [t, v] : img.terms)
        m.at(index[d + 1].at(t), j) = v.get_num();
    }
    int r = matrix_rank(m, coeff, zz ? &tors : nullptr);
    long long free_rank = (long long)basis[d].size() - r - prev_rank;
    acc.ensure(d);
    acc.table.betti[d] += free_rank;
    for (auto& f : prev_tors) acc.table.torsion[d].push_back(f);
    prev_rank = r;
    prev_tors = tors;
    tors.clear();
  }
  return acc.table;
}

unsigned long long total_ungraded_dimension(const SComplex& k, Coeff coeff,
                                            unsigned long long cap) {
  auto t = cohomology(k, coeff, cap);
  unsigned long long total = 0;
  for (auto b : t.betti) total += b;
  return total;
}

}  // namespace quadlag

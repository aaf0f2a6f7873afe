#include "quadlag/real_complex.hpp"

#include "quadlag/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace quadlag {

namespace {

/* pack the bits of eps lying on the set positions of comp, low to high */
int compress_signs(Mask eps, Mask comp) {
  int out = 0, pos = 0;
  for (Mask m = comp; m; m &= m - 1) {
    if (eps & (m & -m)) out |= 1 << pos;
    pos++;
  }
  return out;
}

Mask expand_signs(int packed, Mask comp) {
  Mask eps = 0;
  int pos = 0;
  for (Mask m = comp; m; m &= m - 1) {
    if (packed & (1 << pos)) eps |= m & -m;
    pos++;
  }
  return eps;
}

/* rank over GF(2) of a matrix given by sparse columns (sorted row lists) */
int z2_rank(std::vector<std::vector<int>> cols) {
  std::unordered_map<int, int> pivot;  // row -> owning column
  int rank = 0;
  for (int j = 0; j < (int)cols.size(); j++) {
    auto& col = cols[j];
    while (!col.empty()) {
      int p = col.back();
      auto it = pivot.find(p);
      if (it == pivot.end()) {
        pivot[p] = j;
        rank++;
        break;
      }
      // symmetric difference with the owning column
      auto& other = cols[it->second];
      std::vector<int> merged;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(),
                                    other.end(), std::back_inserter(merged));
      col = std::move(merged);
    }
  }
  return rank;
}

struct CellModel {
  int n;
  std::vector<std::vector<Mask>> faces;         // by cardinality
  std::vector<std::unordered_map<Mask, int>> index;
};

CellModel cell_model(const SComplex& k, int cap) {
  if (k.n > cap) throw Error("CapExceeded", "vertex count above the cap");
  CellModel md;
  md.n = k.n;
  md.faces = enumerate_faces(k);
  md.index.resize(md.faces.size());
  for (size_t d = 0; d < md.faces.size(); d++)
    for (int i = 0; i < (int)md.faces[d].size(); i++)
      md.index[d][md.faces[d][i]] = i;
  return md;
}

std::vector<unsigned long long> betti_from_ranks(
    const std::vector<long long>& cells, const std::vector<int>& ranks) {
  std::vector<unsigned long long> b(cells.size());
  for (size_t d = 0; d < cells.size(); d++) {
    long long r_in = d + 1 < ranks.size() ? ranks[d + 1] : 0;
    b[d] = (unsigned long long)(cells[d] - ranks[d] - r_in);
  }
  return b;
}

}  // namespace

std::vector<unsigned long long> z2_betti_real(const SComplex& k, int cap) {
  auto md = cell_model(k, cap);
  int top = (int)md.faces.size() - 1;
  std::vector<long long> cells(top + 1);
  std::vector<int> ranks(top + 1, 0);  // ranks[d] = rank of boundary d -> d-1
  for (int d = 0; d <= top; d++)
    cells[d] = (long long)md.faces[d].size() << (md.n - d);
  for (int d = 1; d <= top; d++) {
    std::vector<std::vector<int>> cols;
    cols.reserve(cells[d]);
    for (Mask tau : md.faces[d]) {
      Mask comp = ~tau & ((Mask(1) << md.n) - 1);
      for (int s = 0; s < (1 << (md.n - d)); s++) {
        Mask eps = expand_signs(s, comp);
        std::vector<int> col;
        for (Mask m = tau; m; m &= m - 1) {
          Mask bit = m & -m;
          Mask sub = tau & ~bit;
          int base = md.index[d - 1].at(sub) << (md.n - d + 1);
          Mask comp2 = comp | bit;
          col.push_back(base + compress_signs(eps, comp2));
          col.push_back(base + compress_signs(eps | bit, comp2));
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
      }
    }
    ranks[d] = z2_rank(std::move(cols));
  }
  return betti_from_ranks(cells, ranks);
}

std::vector<unsigned long long> z2_betti_real_quotient(const SComplex& k,
                                                       int cap) {
  if (k.min_nonfaces.empty())
    throw Error("NotFree", "the flip fixes the top cell of a simplex");
  auto md = cell_model(k, cap);
  int top = (int)md.faces.size() - 1;
  std::vector<long long> cells(top + 1);
  std::vector<int> ranks(top + 1, 0);
  for (int d = 0; d <= top; d++)
    cells[d] = (long long)md.faces[d].size() << (md.n - d - 1);
  // orbit representative: packed sign index even (lowest free coordinate
  // set to minus); orbit index drops that bit
  for (int d = 1; d <= top; d++) {
    std::vector<std::vector<int>> cols;
    cols.reserve(cells[d]);
    for (Mask tau : md.faces[d]) {
      Mask comp = ~tau & ((Mask(1) << md.n) - 1);
      for (int s = 0; s < (1 << (md.n - d)); s += 2) {
        Mask eps = expand_signs(s, comp);
        std::vector<int> col;
        auto add = [&](Mask e, Mask sub, Mask comp2) {
          int packed = compress_signs(e, comp2);
          if (packed & 1) packed = compress_signs(e ^ comp2, comp2);
          int row = (md.index[d - 1].at(sub) << (md.n - d)) + (packed >> 1);
          auto it = std::find(col.begin(), col.end(), row);
          if (it == col.end())
            col.push_back(row);
          else
            col.erase(it);  // doubled orbit cancels mod 2
        };
        for (Mask m = tau; m; m &= m - 1) {
          Mask bit = m & -m;
          Mask sub = tau & ~bit;
          add(eps, sub, comp | bit);
          add(eps | bit, sub, comp | bit);
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
      }
    }
    ranks[d] = z2_rank(std::move(cols));
  }
  return betti_from_ranks(cells, ranks);
}

bool integral_vanishing_range_check(const SComplex& half_wedge, int bound,
                                    unsigned long long cap) {
  auto t = cohomology(half_wedge, Coeff::Z, cap);
  for (int q = 1; q < bound && q < (int)t.betti.size(); q++)
    if (t.betti[q] != 0 || !t.torsion[q].empty()) return false;
  return true;
}

}  // namespace quadlag

#include "quadlag/complex.hpp"

#include "quadlag/linalg.hpp"

#include <algorithm>

namespace quadlag {

SComplex make_complex(int n, std::vector<Mask> mnf,
                      std::vector<std::string> labels) {
  if (n < 0 || n > 63) throw Error("range", "vertex count out of range");
  std::sort(mnf.begin(), mnf.end());
  mnf.erase(std::unique(mnf.begin(), mnf.end()), mnf.end());
  for (size_t i = 0; i < mnf.size(); i++) {
    if (mnf[i] == 0) throw Error("badcomplex", "empty set as a non-face");
    if (n < 64 && (mnf[i] >> n) != 0)
      throw Error("badcomplex", "non-face outside the vertex set");
    for (size_t j = 0; j < mnf.size(); j++)
      if (i != j && (mnf[i] & mnf[j]) == mnf[j])
        throw Error("badcomplex", "minimal non-faces are not an antichain");
  }
  return SComplex{n, std::move(mnf), std::move(labels)};
}

bool is_face(const SComplex& k, Mask tau) {
  for (Mask m : k.min_nonfaces)
    if ((tau & m) == m) return false;
  return true;
}

int m_number(const SComplex& k) {
  if (k.min_nonfaces.empty())
    throw Error("NoNonface", "complex is a full simplex");
  int best = 64;
  for (Mask m : k.min_nonfaces) best = std::min(best, popcount(m));
  return best;
}

SComplex wedge_complex(const SComplex& k, const std::vector<int>& J) {
  if ((int)J.size() != k.n) throw Error("shape", "multiplicity vector length");
  for (int j : J)
    if (j < 1) throw Error("range", "multiplicities must be >= 1");
  std::vector<int> offset(k.n + 1, 0);
  for (int i = 0; i < k.n; i++) offset[i + 1] = offset[i] + J[i];
  int n2 = offset[k.n];
  if (n2 > 63) throw Error("range", "wedged vertex count exceeds 63");
  std::vector<Mask> copies(k.n);
  for (int i = 0; i < k.n; i++)
    for (int c = 0; c < J[i]; c++) copies[i] |= Mask(1) << (offset[i] + c);
  std::vector<Mask> mnf;
  for (Mask m : k.min_nonfaces) {
    Mask w = 0;
    for (int i = 0; i < k.n; i++)
      if (m & (Mask(1) << i)) w |= copies[i];
    mnf.push_back(w);
  }
  std::vector<std::string> labels;
  for (int i = 0; i < k.n; i++) {
    std::string base = (int)k.labels.size() == k.n
                           ? k.labels[i]
                           : "v" + std::to_string(i + 1);
    for (int c = 0; c < J[i]; c++)
      labels.push_back(base + "." + std::to_string(c + 1));
  }
  return make_complex(n2, std::move(mnf), std::move(labels));
}

static void collect_faces(const SComplex& k, Mask allowed, Mask cur, int from,
                          std::vector<std::vector<Mask>>& out) {
  int t = popcount(cur);
  if ((int)out.size() <= t) out.resize(t + 1);
  out[t].push_back(cur);
  for (int v = from; v < k.n; v++) {
    Mask bit = Mask(1) << v;
    if (!(allowed & bit)) continue;
    Mask next = cur | bit;
    if (is_face(k, next)) collect_faces(k, allowed, next, v + 1, out);
  }
}

std::vector<std::vector<Mask>> enumerate_faces(const SComplex& k) {
  Mask all = k.n >= 64 ? ~Mask(0) : (Mask(1) << k.n) - 1;
  std::vector<std::vector<Mask>> out;
  collect_faces(k, all, 0, 0, out);
  return out;
}

std::vector<std::vector<Mask>> enumerate_faces_in(const SComplex& k, Mask s) {
  std::vector<std::vector<Mask>> out;
  collect_faces(k, s, 0, 0, out);
  return out;
}

static void count_faces(const SComplex& k, Mask cur, int from,
                        unsigned long long mult, unsigned long long& total,
                        unsigned long long cap) {
  total += mult >> popcount(cur);
  if (total > cap)
    throw Error("CapExceeded", "Koszul basis larger than the configured cap");
  for (int v = from; v < k.n; v++) {
    Mask next = cur | (Mask(1) << v);
    if (is_face(k, next)) count_faces(k, next, v + 1, mult, total, cap);
  }
}

unsigned long long koszul_basis_count(const SComplex& k,
                                      unsigned long long cap) {
  unsigned long long total = 0;
  unsigned long long mult = 1ull << k.n;
  count_faces(k, 0, 0, mult, total, cap);
  return total;
}

}  // namespace quadlag

#pragma once

#include "quadlag/complex.hpp"
#include "quadlag/linalg.hpp"

namespace quadlag {

/* H-presentation { x in R^m : A^T x + b >= 0 }; columns of A are the inward
 * facet normals a_i. */
struct Polytope {
  int m = 0;
  IntMat A;             // m x n
  std::vector<Rat> b;   // length n
  std::vector<std::string> warnings;

  int n() const { return A.cols; }
  std::vector<Int> normal(int i) const { return A.col(i); }
  Rat eval(int i, const std::vector<Rat>& x) const {
    Rat v = b[i];
    for (int k = 0; k < m; k++) v += Rat(A.at(k, i)) * x[k];
    return v;
  }
};

/* Validates nonemptiness, warns on duplicated inequalities. */
Polytope make_polytope(int m, IntMat A, std::vector<Rat> b);

struct VertexSet {
  std::vector<std::vector<Rat>> vertices;
  std::vector<std::vector<int>> active_facets;
};

VertexSet enumerate_vertices(const Polytope& p);
bool is_generic(const Polytope& p);
bool is_bounded(const Polytope& p);
std::vector<int> irredundant_facets(const Polytope& p);
bool is_delzant(const Polytope& p);
bool is_fano(const Polytope& p);

/* All b_i equal after recentring on an interior point; columns scaled to stay
 * integral, so the common value is the smallest positive rational admitting an
 * integral A (the b = 1 presentation up to one global scale). */
Polytope normalize_b(const Polytope& p);

/* Vertices a_i / b_i of P* = conv(a_i) for the normalized presentation. */
std::vector<std::vector<Rat>> dual_polytope(const Polytope& p);

SComplex nerve(const Polytope& p);

Polytope cut_vertex(const Polytope& p, const std::vector<Rat>& v, const Rat& depth);

}  // namespace quadlag

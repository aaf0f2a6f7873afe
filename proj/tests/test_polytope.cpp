#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures_common.hpp"

#include <algorithm>

using namespace quadlag;
using namespace qlt;

static std::vector<Rat> pt(long x, long y) { return {Rat(x), Rat(y)}; }

/* H-presentation of the convex hull of 2d points containing the origin
 * strictly; facets emitted in angular order of the hull edges */
static Polytope hull2(std::vector<std::vector<Rat>> pts) {
  // angular sort around the origin: quadrant first, then cross product
  auto half = [](const std::vector<Rat>& p) {
    return (p[1] < 0 || (p[1] == 0 && p[0] < 0)) ? 1 : 0;
  };
  std::sort(pts.begin(), pts.end(),
            [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
              if (half(a) != half(b)) return half(a) < half(b);
              Rat cr = a[0] * b[1] - a[1] * b[0];
              if (cr != 0) return cr > 0;
              return a[0] * a[0] + a[1] * a[1] < b[0] * b[0] + b[1] * b[1];
            });
  // drop points interior to a hull edge
  std::vector<std::vector<Rat>> v;
  size_t n = pts.size();
  for (size_t i = 0; i < n; i++) {
    auto &p = pts[(i + n - 1) % n], &q = pts[i], &r = pts[(i + 1) % n];
    Rat cr = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
    if (cr > 0) v.push_back(q);
  }
  n = v.size();
  IntMat A(2, (int)n);
  std::vector<Rat> b(n);
  for (size_t i = 0; i < n; i++) {
    auto &p = v[i], &q = v[(i + 1) % n];
    Rat nx = p[1] - q[1], ny = q[0] - p[0];  // inward for ccw order
    Rat bi = -(nx * p[0] + ny * p[1]);
    Int den_l;
    mpz_lcm(den_l.get_mpz_t(), nx.get_den().get_mpz_t(),
            ny.get_den().get_mpz_t());
    nx *= den_l;
    ny *= den_l;
    bi *= den_l;
    Int g = vec_gcd({nx.get_num(), ny.get_num()});
    if (g != 0) {
      nx /= g;
      ny /= g;
      bi /= g;
    }
    A.at(0, (int)i) = nx.get_num();
    A.at(1, (int)i) = ny.get_num();
    bi.canonicalize();
    b[i] = bi;
  }
  return make_polytope(2, A, b);
}

TEST_CASE("vertex enumeration") {
  auto vs = enumerate_vertices(square());
  REQUIRE(vs.vertices.size() == 4);
  for (auto& v : vs.vertices) {
    CHECK((v[0] == 1 || v[0] == -1));
    CHECK((v[1] == 1 || v[1] == -1));
  }

  auto pv = enumerate_vertices(pentagon());
  std::vector<std::vector<Rat>> want{pt(-1, -1), pt(1, -1), pt(1, 0),
                                     pt(0, 1), pt(-1, 1)};
  REQUIRE(pv.vertices.size() == 5);
  for (auto& w : want)
    CHECK(std::find(pv.vertices.begin(), pv.vertices.end(), w) !=
          pv.vertices.end());

  CHECK(enumerate_vertices(simplex2()).vertices.size() == 3);

  auto half = make_polytope(2, mkmat(2, 1, {1, 0}), ones(1));
  CHECK_THROWS_AS(enumerate_vertices(half), Error);
}

TEST_CASE("genericity") {
  CHECK(is_generic(pentagon()));
  CHECK(is_generic(cube3()));
  auto dup = make_polytope(
      2, mkmat(2, 5, {1, -1, 0, 0, 1, 0, 0, 1, -1, 0}), ones(5));
  CHECK_FALSE(is_generic(dup));
  CHECK_FALSE(dup.warnings.empty());
}

TEST_CASE("boundedness") {
  CHECK(is_bounded(pentagon()));
  CHECK(is_bounded(prod_simplices(2, 4)));
  CHECK_FALSE(is_bounded(make_polytope(2, mkmat(2, 1, {1, 0}), ones(1))));
  // quadrant: full rank but nontrivial recession cone
  CHECK_FALSE(is_bounded(make_polytope(2, mkmat(2, 2, {1, 0, 0, 1}), ones(2))));
}

TEST_CASE("irredundant facets") {
  auto pf = irredundant_facets(pentagon());
  CHECK(pf == std::vector<int>{0, 1, 2, 3, 4});
  auto red = make_polytope(
      2, mkmat(2, 5, {1, 0, -1, 0, 1, 0, 1, 0, -1, 0}),
      {Rat(1), Rat(1), Rat(1), Rat(1), Rat(10)});
  CHECK(irredundant_facets(red) == std::vector<int>{0, 1, 2, 3});
  CHECK(irredundant_facets(simplex(4)) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("delzant and fano") {
  CHECK(is_delzant(simplex(3)));
  CHECK(is_delzant(trunc_cube()));
  CHECK(is_delzant(cube_doublecut()));
  auto scaled =
      make_polytope(2, mkmat(2, 4, {2, 0, -2, 0, 0, 1, 0, -1}), ones(4));
  CHECK_FALSE(is_delzant(scaled));
  auto dup = make_polytope(
      2, mkmat(2, 5, {1, -1, 0, 0, 1, 0, 0, 1, -1, 0}), ones(5));
  CHECK_THROWS_AS(is_delzant(dup), Error);

  CHECK(is_fano(pentagon()));
  CHECK(is_fano(prod_simplices(2, 5)));
  CHECK_FALSE(is_fano(trunc_cube()));
  CHECK_THROWS_AS(is_fano(scaled), Error);
}

TEST_CASE("normalize_b") {
  auto sq = normalize_b(square());
  CHECK(sq.A == square().A);
  CHECK(sq.b == square().b);

  // square shifted by (1/2, 0)
  auto shifted = make_polytope(2, mkmat(2, 4, {1, 0, -1, 0, 0, 1, 0, -1}),
                               {Rat(1, 2), Rat(3, 2), Rat(1), Rat(1)});
  auto ns = normalize_b(shifted);
  for (int i = 1; i < ns.n(); i++) CHECK(ns.b[i] == ns.b[0]);
  CHECK(ns.b[0] > 0);
  CHECK(nerve(ns) == nerve(square()));

  CHECK(normalize_b(pentagon()).b == pentagon().b);

  auto line = make_polytope(1, mkmat(1, 2, {1, -1}), {Rat(1), Rat(-1)});
  CHECK_THROWS_AS(normalize_b(line), Error);
}

TEST_CASE("nerve") {
  CHECK(nerve(simplex2()).min_nonfaces == std::vector<Mask>{0b111});
  CHECK(nerve(square()).min_nonfaces == std::vector<Mask>{0b0101, 0b1010});
  // pentagon facets run 1-2-3-5-4 around the boundary
  CHECK(nerve(pentagon()).min_nonfaces ==
        std::vector<Mask>{0b00101, 0b01010, 0b01100, 0b10001, 0b10010});
  CHECK(nerve(hexagon55()).min_nonfaces.size() == 9);
  CHECK(m_number(nerve(hexagon55())) == 2);
  CHECK(m_number(nerve(hexagon57())) == 2);

  auto red = make_polytope(
      2, mkmat(2, 5, {1, 0, -1, 0, 1, 0, 1, 0, -1, 0}),
      {Rat(1), Rat(1), Rat(1), Rat(1), Rat(10)});
  CHECK_THROWS_AS(nerve(red), Error);
}

TEST_CASE("nerve is invariant under facet permutation up to relabeling") {
  auto p = pentagon();
  // swap facets 4 and 5
  IntMat A2(2, 5);
  std::vector<int> perm{0, 1, 2, 4, 3};
  std::vector<Rat> b2(5);
  for (int i = 0; i < 5; i++) {
    b2[i] = p.b[perm[i]];
    for (int k = 0; k < 2; k++) A2.at(k, i) = p.A.at(k, perm[i]);
  }
  auto k1 = nerve(p);
  auto k2 = nerve(make_polytope(2, A2, b2));
  std::vector<Mask> pulled;
  for (Mask m : k2.min_nonfaces) {
    Mask w = 0;
    for (int i = 0; i < 5; i++)
      if (m & (Mask(1) << i)) w |= Mask(1) << perm[i];
    pulled.push_back(w);
  }
  std::sort(pulled.begin(), pulled.end());
  CHECK(pulled == k1.min_nonfaces);
}

TEST_CASE("dual polytope") {
  auto dv = dual_polytope(square());
  REQUIRE(dv.size() == 4);
  CHECK(dv[0] == pt(1, 0));
  CHECK(dv[2] == pt(-1, 0));

  auto line = make_polytope(2, mkmat(2, 4, {1, 0, -1, 0, 0, 1, 0, -1}),
                            {Rat(0), Rat(1), Rat(1), Rat(1)});
  CHECK_THROWS_AS(dual_polytope(line), Error);
}

TEST_CASE("double dual is combinatorially the same polygon") {
  for (auto& p : {square(), pentagon(), hexagon55()}) {
    auto dd = hull2(dual_polytope(hull2(dual_polytope(p))));
    auto k1 = nerve(p), k2 = nerve(dd);
    CHECK(k1.n == k2.n);
    CHECK(k1.min_nonfaces.size() == k2.min_nonfaces.size());
    for (Mask m : k2.min_nonfaces) CHECK(popcount(m) == 2);
  }
}

TEST_CASE("cut_vertex") {
  auto q = cut_vertex(simplex2(), pt(0, 0), Rat(1, 2));
  CHECK(q.n() == 4);
  CHECK(is_generic(q));
  CHECK(is_delzant(q));

  auto h = q;
  for (auto& v : {pt(1, 0), pt(0, 1)}) h = cut_vertex(h, v, Rat(1, 4));
  CHECK(h.n() == 6);
  CHECK(is_generic(h));
  CHECK(m_number(nerve(h)) == 2);

  CHECK_THROWS_AS(cut_vertex(simplex2(), pt(0, 0), Rat(2)), Error);
  CHECK_THROWS_AS(cut_vertex(simplex2(), pt(5, 5), Rat(1, 2)), Error);
}

TEST_CASE("double vertex cut of the cube matches the 8-facet fixture") {
  auto c = cut_vertex(cube3(), {Rat(1), Rat(1), Rat(1)}, Rat(1));
  c = cut_vertex(c, {Rat(-1), Rat(-1), Rat(-1)}, Rat(1));
  auto ref = cube_doublecut();
  CHECK(c.A == ref.A);
  CHECK(c.b == ref.b);
  CHECK(is_delzant(c));
}

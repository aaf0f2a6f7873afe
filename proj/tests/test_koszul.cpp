#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures_common.hpp"

#include "quadlag/koszul.hpp"

#include <cstdlib>

using namespace quadlag;
using namespace qlt;

static SComplex pentagon_k() { return nerve(pentagon()); }
static SComplex hexagon_k() { return nerve(hexagon55()); }

static KCochain random_cochain(const SComplex& k, int nterms) {
  KCochain c;
  Mask all = (Mask(1) << k.n) - 1;
  for (int i = 0; i < nterms; i++) {
    Mask tau = ((Mask)std::rand()) & all;
    while (!is_face(k, tau)) tau &= tau - 1;  // drop bits until a face
    Mask sigma = ((Mask)std::rand()) & all & ~tau;
    c.add(sigma, tau, Rat(std::rand() % 9 - 4));
  }
  return c;
}

static bool equal_mod2(const KCochain& a, const KCochain& b) {
  KCochain d = a;
  for (auto& [t, v] : b.terms) d.add(t.first, t.second, -v);
  return reduce_mod2(d).is_zero();
}

TEST_CASE("differential on generators") {
  auto k = cycle_complex(4);
  auto d = differential(k, make_term(0b0001, 0));
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms.begin()->first == KTerm{0, 0b0001});
  CHECK(d.terms.begin()->second == 1);

  auto hx = hexagon_k();
  // facets 1 and 5 of the hexagon are disjoint, so v1 v5 dies
  CHECK_FALSE(is_face(hx, 0b010001));
  CHECK(differential(hx, make_term(0b000001, 0b010000)).is_zero());
  // both summands of d(y1 y4 v3) land on non-faces
  CHECK(differential(hx, make_term(0b001001, 0b000100)).is_zero());
}

TEST_CASE("d squared is zero and Leibniz holds") {
  std::srand(20240811);
  auto pk = pentagon_k();
  for (int iter = 0; iter < 1000; iter++) {
    auto c = random_cochain(pk, 4);
    CHECK(differential(pk, differential(pk, c)).is_zero());
    CHECK(reduce_mod2(differential(pk, differential(pk, reduce_mod2(c))))
              .is_zero());
  }
  for (int iter = 0; iter < 1000; iter++) {
    // a homogeneous so the sign in the rule is defined
    auto a = random_cochain(pk, 1);
    auto b = random_cochain(pk, 3);
    auto deg = homogeneous_degree(a);
    if (!deg) continue;
    auto lhs = differential(pk, cup_product(pk, a, b));
    KCochain rhs = cup_product(pk, differential(pk, a), b);
    auto adb = cup_product(pk, a, differential(pk, b));
    for (auto& [t, v] : adb.terms)
      rhs.add(t.first, t.second, *deg % 2 ? -v : v);
    KCochain diff = lhs;
    for (auto& [t, v] : rhs.terms) diff.add(t.first, t.second, -v);
    CHECK(diff.is_zero());
    CHECK(equal_mod2(lhs, rhs));
  }
}

TEST_CASE("cup products in the pentagon ring") {
  auto pk = pentagon_k();
  // y1 v3 . y3 y4 v1 = 0 (shared vertices)
  CHECK(cup_product(pk, make_term(0b00001, 0b00100),
                    make_term(0b01100, 0b00001))
            .is_zero());
  // y1 v3 . y4 y5 v2 = y1 y4 y5 v3 v2
  auto p = cup_product(pk, make_term(0b00001, 0b00100),
                       make_term(0b11000, 0b00010));
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms.begin()->first == KTerm{0b11001, 0b00110});
  CHECK(p.terms.begin()->second == 1);
  // unit
  auto c = random_cochain(pk, 3);
  auto u = cup_product(pk, make_term(0, 0), c);
  CHECK(differential(pk, u).terms == differential(pk, c).terms);
  CHECK(u.terms == c.terms);
  // anticommutativity on odd-degree generators
  auto xy = cup_product(pk, make_term(0b00001, 0), make_term(0b00010, 0));
  auto yx = cup_product(pk, make_term(0b00010, 0), make_term(0b00001, 0));
  REQUIRE(xy.terms.size() == 1);
  CHECK(xy.terms.begin()->second == -yx.terms.begin()->second);
}

TEST_CASE("cohomology of the polygon fixtures") {
  for (auto coeff : {Coeff::Z, Coeff::Z2, Coeff::Q}) {
    auto sq = cohomology(cycle_complex(4), coeff);
    CHECK(sq.betti ==
          std::vector<unsigned long long>{1, 0, 0, 2, 0, 0, 1});
    auto pent = cohomology(pentagon_k(), coeff);
    CHECK(pent.betti ==
          std::vector<unsigned long long>{1, 0, 0, 5, 5, 0, 0, 1});
    auto hex = cohomology(hexagon_k(), coeff);
    CHECK(hex.betti ==
          std::vector<unsigned long long>{1, 0, 0, 9, 16, 9, 0, 0, 1});
    if (coeff == Coeff::Z) {
      for (auto& t : pent.torsion) CHECK(t.empty());
      for (auto& t : hex.torsion) CHECK(t.empty());
    }
  }
}

TEST_CASE("bigraded ranks refine the betti numbers") {
  auto sq = cohomology(cycle_complex(4), Coeff::Z);
  std::vector<unsigned long long> recount(sq.betti.size(), 0);
  for (auto& [pq, r] : sq.bigraded) recount[pq.first + pq.second] += r;
  CHECK(recount == sq.betti);
  // S^3 x S^3: classes at (-1,4), (-1,4), (-2,8)
  CHECK(sq.bigraded.at({0, 0}) == 1);
  CHECK(sq.bigraded.at({-1, 4}) == 2);
  CHECK(sq.bigraded.at({-2, 8}) == 1);
}

TEST_CASE("dense oracle agreement") {
  for (auto coeff : {Coeff::Z, Coeff::Z2, Coeff::Q}) {
    for (auto k : {cycle_complex(4), pentagon_k(), hexagon_k(),
                   boundary_simplex(3), make_complex(4, {0b0011, 0b1100})}) {
      auto fast = cohomology(k, coeff);
      auto dense = cohomology_dense(k, coeff);
      CHECK(fast.betti == dense.betti);
      if (coeff == Coeff::Z) CHECK(fast.torsion == dense.torsion);
    }
  }
}

TEST_CASE("wedge profiles and ungraded totals") {
  // square wedged (2,3,1,2): S^5 x S^9
  auto w = wedge_complex(cycle_complex(4), {2, 3, 1, 2});
  auto t = cohomology(w, Coeff::Z);
  std::vector<unsigned long long> want(15, 0);
  want[0] = want[5] = want[9] = want[14] = 1;
  CHECK(t.betti == want);

  CHECK(total_ungraded_dimension(cycle_complex(4), Coeff::Q) == 4);
  CHECK(total_ungraded_dimension(pentagon_k(), Coeff::Q) == 12);
  for (auto coeff : {Coeff::Z, Coeff::Z2}) {
    CHECK(total_ungraded_dimension(
              wedge_complex(cycle_complex(4), {2, 2, 2, 2}), coeff) ==
          total_ungraded_dimension(
              wedge_complex(cycle_complex(4), {4, 2, 2, 4}), coeff));
    CHECK(total_ungraded_dimension(wedge_complex(pentagon_k(), {2, 2, 2, 2, 2}),
                                   coeff) ==
          total_ungraded_dimension(
              wedge_complex(pentagon_k(), {2, 4, 2, 2, 2}), coeff));
  }
}

TEST_CASE("basis cap is enforced") {
  CHECK_THROWS_AS(cohomology(pentagon_k(), Coeff::Q, 10), Error);
}

TEST_CASE("first two reduced groups vanish for polytopal nerves") {
  for (auto& p : {square(), pentagon(), hexagon55(), trunc_cube(),
                  cube_doublecut()}) {
    auto t = cohomology(nerve(p), Coeff::Z);
    CHECK(t.betti[1] == 0);
    CHECK(t.betti[2] == 0);
    CHECK(t.torsion[1].empty());
    CHECK(t.torsion[2].empty());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures_common.hpp"

#include "quadlag/massey.hpp"

using namespace quadlag;
using namespace qlt;

// facets of the truncated cube, 0-based bit positions; the three cut
// edges give the disjoint pairs {3,6}, {1,4}, {5,2} (1-based)
static const Mask kAlphaS = 0b0000100, kAlphaT = 0b0100000;  // y3 v6
static const Mask kBetaS = 0b0000001, kBetaT = 0b0001000;    // y1 v4
static const Mask kDeltaS = 0b0010000, kDeltaT = 0b0000010;  // y5 v2

static KCochain scale(const KCochain& x, const Rat& f) {
  KCochain out;
  for (auto& [t, v] : x.terms) out.add(t.first, t.second, f * v);
  return out;
}

TEST_CASE("truncated cube carries a nontrivial triple product") {
  auto k = nerve(trunc_cube());
  auto a = make_term(kAlphaS, kAlphaT);
  auto b = make_term(kBetaS, kBetaT);
  auto c = make_term(kDeltaS, kDeltaT);
  for (auto coeff : {Coeff::Q, Coeff::Z2}) {
    auto res = triple_massey(k, a, b, c, coeff);
    REQUIRE(res.defined);
    CHECK(res.nontrivial);
    CHECK_FALSE(res.representative.is_zero());
    CHECK(homogeneous_degree(res.representative) == 8);
    CHECK(differential(k, res.representative).is_zero());
    // y3 y1 y5 y4 v6 v2 represents the product
    CHECK(massey_contains(k, a, b, c,
                          make_term(0b0011101, 0b0100010), coeff));
    // zero is in the product iff it is trivial
    CHECK_FALSE(massey_contains(k, a, b, c, KCochain{}, coeff));
  }
}

TEST_CASE("scaling the inputs preserves nontriviality") {
  auto k = nerve(trunc_cube());
  auto a = make_term(kAlphaS, kAlphaT, Rat(3));
  auto b = make_term(kBetaS, kBetaT, Rat(-5, 7));
  auto c = make_term(kDeltaS, kDeltaT);
  auto res = triple_massey(k, a, b, c, Coeff::Q);
  REQUIRE(res.defined);
  CHECK(res.nontrivial);
  CHECK(massey_contains(k, a, b, c,
                        scale(make_term(0b0011101, 0b0100010), Rat(-15, 7)),
                        Coeff::Q));
}

TEST_CASE("wedged truncated cube keeps the product") {
  // double the six cube facets and triple the three cut facets
  auto k = wedge_complex(nerve(trunc_cube()), {2, 2, 2, 2, 2, 2, 3, 3, 3});
  // copies of facet i sit at offsets 2(i-1) for i <= 6, 12 + 3(i-7) after
  auto a = make_term(Mask(1) << 4, (Mask(1) << 5) | (Mask(3) << 10));
  auto b = make_term(Mask(1) << 0, (Mask(1) << 1) | (Mask(3) << 6));
  auto c = make_term(Mask(1) << 8, (Mask(1) << 9) | (Mask(3) << 2));
  for (auto* x : {&a, &b, &c})
    CHECK(differential(k, *x).is_zero());
  auto res = triple_massey(k, a, b, c, Coeff::Q);
  REQUIRE(res.defined);
  CHECK(res.nontrivial);
  CHECK(homogeneous_degree(res.representative) == 20);
}

TEST_CASE("square product is defined and trivial") {
  auto k = cycle_complex(4);
  auto a = make_term(0b0001, 0b0100);  // y1 v3, a cocycle
  auto res = triple_massey(k, a, a, a, Coeff::Q);
  REQUIRE(res.defined);
  CHECK(res.representative.is_zero());
  CHECK_FALSE(res.nontrivial);
  CHECK(massey_contains(k, a, a, a, KCochain{}, Coeff::Q));
}

TEST_CASE("input validation") {
  auto k = nerve(trunc_cube());
  auto a = make_term(kAlphaS, kAlphaT);
  auto b = make_term(kBetaS, kBetaT);
  auto c = make_term(kDeltaS, kDeltaT);
  // y1 alone is not a cocycle
  CHECK_THROWS_AS(triple_massey(k, make_term(0b1, 0), b, c, Coeff::Q), Error);
  CHECK_THROWS_AS(massey_contains(k, a, b, c, make_term(0b1, 0), Coeff::Q),
                  Error);
  // integral triple products are not implemented
  CHECK_THROWS_AS(triple_massey(k, a, b, c, Coeff::Z), Error);
  // outer factors must be monomials
  KCochain two = a;
  two.add(kBetaS, kBetaT, Rat(1));
  CHECK_THROWS_AS(triple_massey(k, two, b, c, Coeff::Q), Error);
}

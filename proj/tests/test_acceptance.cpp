// End-to-end gate: one line per criterion, nonzero exit on any failure.
#include "fixtures_common.hpp"

#include "quadlag/lagrangian.hpp"
#include "quadlag/massey.hpp"

#include <chrono>
#include <iostream>
#include <random>

using namespace quadlag;
using namespace qlt;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void begin() { t0 = std::chrono::steady_clock::now(); }

void verdict(int num, const std::string& what, bool ok, double limit_s = 0) {
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                 .count();
  if (limit_s > 0 && s > limit_s) ok = false;
  if (!ok) failures++;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what
            << " (" << s << " s)\n";
}

bool betti_at(const CohomologyTable& t, size_t k, unsigned long long want) {
  return k < t.betti.size() ? t.betti[k] == want : want == 0;
}

bool torsion_free(const CohomologyTable& t) {
  for (auto& l : t.torsion)
    if (!l.empty()) return false;
  return true;
}

unsigned long long total_betti(const CohomologyTable& t) {
  unsigned long long s = 0;
  for (auto b : t.betti) s += b;
  return s;
}

KCochain random_cochain(const SComplex& k, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 3), coef(-5, 5);
  auto faces = enumerate_faces(k);
  KCochain x;
  for (auto& level : faces)
    for (Mask tau : level) {
      if (coin(rng)) continue;
      Mask comp = ((Mask(1) << k.n) - 1) & ~tau;
      // random subset of the complement as sigma
      Mask sigma = 0;
      for (int i = 0; i < k.n; i++)
        if ((comp & (Mask(1) << i)) && coin(rng) == 0) sigma |= Mask(1) << i;
      int c = coef(rng);
      if (c) x.add(sigma, tau, Rat(c));
    }
  return x;
}

KCochain sub(const SComplex& k, KCochain a, const KCochain& b, int sign) {
  for (auto& [t, v] : b.terms) a.add(t.first, t.second, Rat(sign) * v);
  (void)k;
  return a;
}

}  // namespace

int main() {
  // 1: pentagon over Z
  begin();
  {
    auto t = cohomology(nerve(pentagon()), Coeff::Z);
    bool ok = t.betti == std::vector<unsigned long long>{1, 0, 0, 5, 5, 0, 0, 1} &&
              torsion_free(t);
    verdict(1, "pentagon Z-Betti (1,0,0,5,5,0,0,1), torsion free", ok, 1.0);
  }

  // 2: square and its (2,3,1,2) wedge
  begin();
  {
    auto sq = cohomology(nerve(square()), Coeff::Z);
    bool ok = sq.betti == std::vector<unsigned long long>{1, 0, 0, 2, 0, 0, 1};
    auto w = cohomology(wedge_complex(nerve(square()), {2, 3, 1, 2}), Coeff::Z);
    ok = ok && total_betti(w) == 4 && betti_at(w, 0, 1) && betti_at(w, 5, 1) &&
         betti_at(w, 9, 1) && betti_at(w, 14, 1) && torsion_free(w);
    verdict(2, "square = S^3 x S^3 profile, (2,3,1,2) wedge = S^5 x S^9", ok,
            1.0);
  }

  // 3: hexagon middle Betti 9, 16, 9
  begin();
  {
    auto t = cohomology(nerve(hexagon55()), Coeff::Z);
    bool ok = betti_at(t, 3, 9) && betti_at(t, 4, 16) && betti_at(t, 5, 9);
    verdict(3, "hexagon b3 = 9, b4 = 16, b5 = 9", ok, 1.0);
  }

  // 4: wide-narrow k=2 half wedge, first reduced Betti and vanishing range
  begin();
  {
    auto half = wedge_complex(nerve(hexagon55()), {2, 2, 2, 2, 2, 2});
    bool ok = integral_vanishing_range_check(half, 7);
    auto t = cohomology(half, Coeff::Z);
    for (int q = 1; q < 7; q++) ok = ok && betti_at(t, q, 0);
    ok = ok && betti_at(t, 7, 9);
    verdict(4, "k=2 half wedge: H^q = 0 for 0 < q < 7, b7 = 9", ok);
  }

  // 5: polygon genus series and quotients
  begin();
  {
    bool ok = true;
    unsigned long long want[] = {2, 10, 34, 98};
    for (int m = 4; m <= 7; m++) {
      auto b = z2_betti_real(cycle_complex(m));
      ok = ok && b.size() == 3 && b[1] == want[m - 4];
    }
    ok = ok && z2_betti_real_quotient(boundary_simplex(3)) ==
                   std::vector<unsigned long long>{1, 1, 1};
    ok = ok && z2_betti_real_quotient(cycle_complex(5)) ==
                   std::vector<unsigned long long>{1, 6, 1};
    verdict(5, "polygon genus series 2, 10, 34, 98 and Z_2 quotients", ok,
            10.0);
  }

  // 6: maslov numbers
  begin();
  {
    bool ok = true;
    for (auto [p, n, want] : {std::tuple<int, int, int>{3, 9, 3},
                              {2, 5, 1},
                              {3, 6, 3}})
      ok = ok &&
           minimal_maslov(polytope_to_quadrics(prod_simplices(p, n)), true)
                   .value == want;
    auto hex = polytope_to_quadrics(hexagon55());
    for (int k = 1; k <= 3; k++)
      ok = ok && minimal_maslov(multiwedge(hex, std::vector<int>(6, 2 * k)))
                         .value == 2 * k;
    auto dc = polytope_to_quadrics(cube_doublecut());
    for (int k = 1; k <= 2; k++) {
      std::vector<int> J(8, 2 * k);
      J[6] = J[7] = 4 * k;
      ok = ok && minimal_maslov(multiwedge(dc, J)).value == 2 * k;
    }
    verdict(6, "maslov: products gcd(p,n), wedge families 2k", ok, 6.0);
  }

  // 7: Massey products
  begin();
  {
    auto k = nerve(trunc_cube());
    auto a = make_term(0b0000100, 0b0100000);
    auto b = make_term(0b0000001, 0b0001000);
    auto c = make_term(0b0010000, 0b0000010);
    bool ok = true;
    for (Coeff cf : {Coeff::Q, Coeff::Z2}) {
      auto res = triple_massey(k, a, b, c, cf);
      ok = ok && res.defined && res.nontrivial;
    }
    // y3 y1 y5 y4 v6 v2 represents the product
    ok = ok && massey_contains(k, a, b, c, make_term(0b0011101, 0b0100010),
                               Coeff::Q);
    auto wk = wedge_complex(k, {2, 2, 2, 2, 2, 2, 3, 3, 3});
    auto wa = make_term(Mask(1) << 4, (Mask(1) << 5) | (Mask(1) << 10) |
                                          (Mask(1) << 11));
    auto wb = make_term(Mask(1) << 0,
                        (Mask(1) << 1) | (Mask(1) << 6) | (Mask(1) << 7));
    auto wd = make_term(Mask(1) << 8,
                        (Mask(1) << 9) | (Mask(1) << 2) | (Mask(1) << 3));
    auto wres = triple_massey(wk, wa, wb, wd, Coeff::Q);
    ok = ok && wres.defined && wres.nontrivial;
    verdict(7, "truncated cube Massey product nontrivial, also after wedging",
            ok, 30.0);
  }

  // 8: certificates
  begin();
  {
    auto hx = monotone_certificate(polytope_to_quadrics(hexagon57()));
    bool ok = hx.monotone && hx.ambient_dim == 5;
    auto sx = monotone_certificate(polytope_to_quadrics(simplex(4)));
    ok = ok && sx.fiber_description.find("RP^3") != std::string::npos;
    auto pent = monotone_certificate(polytope_to_quadrics(pentagon()));
    bool sum_fail = false;
    for (auto& f : pent.failed_hypotheses)
      sum_fail = sum_fail || f.find("sum to zero") != std::string::npos;
    ok = ok && !pent.monotone && sum_fail;
    auto bad = make_system(mkmat(2, 5, {1, 1, 1, 1, 1, 1, 0, 0, 2, 2}),
                           {Rat(5), Rat(6)});
    ok = ok && !embeddedness_check(bad);
    verdict(8, "monotone certificates and the embeddedness counterexample", ok,
            1.0);
  }

  // 9: property suites
  begin();
  {
    bool ok = true;
    std::mt19937 rng(20240824);
    std::vector<SComplex> cs = {nerve(square()), nerve(pentagon()),
                                nerve(trunc_cube())};
    for (int it = 0; it < 1000 && ok; it++) {
      const SComplex& k = cs[it % cs.size()];
      auto x = random_cochain(k, rng);
      auto y = random_cochain(k, rng);
      ok = ok && differential(k, differential(k, x)).is_zero();
      auto dx = homogeneous_degree(x);
      // Leibniz needs a homogeneous left factor for the sign
      if (!dx) continue;
      int sign = (*dx % 2) ? -1 : 1;
      auto lhs = differential(k, cup_product(k, x, y));
      auto rhs = sub(k, cup_product(k, differential(k, x), y),
                     cup_product(k, x, differential(k, y)), sign);
      ok = ok && sub(k, lhs, rhs, -1).is_zero();
    }
    std::vector<Polytope> ps = {square(), pentagon(), hexagon55(), hexagon57(),
                                cube3(), trunc_cube(), cube_doublecut(),
                                simplex(4), prod_simplices(2, 5)};
    for (auto& p : ps) {
      auto k = nerve(p);
      auto t2 = cohomology(k, Coeff::Z2);
      int top = p.n() + p.m;
      for (int q = 0; q <= top; q++) {
        auto bq = q < (int)t2.betti.size() ? t2.betti[q] : 0;
        auto bdual =
            top - q < (int)t2.betti.size() ? t2.betti[top - q] : 0;
        ok = ok && bq == bdual;
      }
      auto tz = cohomology(k, Coeff::Z);
      ok = ok && betti_at(tz, 1, 0) && betti_at(tz, 2, 0);
      auto qs = polytope_to_quadrics(p);
      ok = ok && system_nerve(qs) == k;
      ok = ok && nerve(quadrics_to_polytope(qs)) == k;
      ok = ok && embeddedness_check(qs) == is_delzant(p);
    }
    for (auto& p : {square(), pentagon()}) {
      auto k = nerve(p);
      auto doubled = wedge_complex(k, std::vector<int>(k.n, 2));
      ok = ok && total_betti(cohomology(k, Coeff::Z2)) ==
                     total_betti(cohomology(doubled, Coeff::Z2));
    }
    verdict(9,
            "d^2 = 0, Leibniz, duality, Gale round trip, Delzant agreement, "
            "wedge-invariant total Betti",
            ok);
  }

  // 10: narrowness verdicts
  begin();
  {
    auto hex = polytope_to_quadrics(hexagon55());
    auto dc = polytope_to_quadrics(cube_doublecut());
    std::vector<int> J2(8, 4);
    J2[6] = J2[7] = 8;
    bool ok = true;
    for (auto& qs : {multiwedge(hex, std::vector<int>(6, 4)),
                     multiwedge(dc, J2)}) {
      auto v = narrowness_report(qs);
      ok = ok && v.size() == 4;
      ok = ok && v[0].status == "decided" && v[1].status == "decided";
      ok = ok && v[3].status == "decided" &&
           v[3].detail.find("narrow over Z_2") != std::string::npos;
    }
    for (auto& v : narrowness_report(multiwedge(hex, std::vector<int>(6, 2))))
      ok = ok && v.status == "inapplicable" &&
           v.detail.find("not > 2") != std::string::npos;
    verdict(10, "k=2 families narrow over Z_2, k=1 gated out on N_L", ok);
  }

  return failures ? 1 : 0;
}

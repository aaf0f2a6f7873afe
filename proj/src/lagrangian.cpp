#include "quadlag/lagrangian.hpp"

#include <sstream>

namespace quadlag {

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); i++) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool is_boundary_simplex(const SComplex& k) {
  return k.min_nonfaces.size() == 1 &&
         k.min_nonfaces[0] == (Mask(1) << k.n) - 1;
}

/* one quadric with all coefficients on the delta side of zero: the nerve is
 * the boundary simplex and the fiber a sphere, without enumerating faces */
bool simplex_system(const QuadricSystem& qs) {
  if (qs.r() != 1) return false;
  for (int j : qs.J)
    if (j != 1) return false;
  int s = sgn(qs.delta[0]);
  if (s == 0) return false;
  for (int j = 0; j < qs.ncols(); j++)
    if (sgn(qs.Gamma.at(0, j)) != s) return false;
  return true;
}

/* detect Delta^{p-1} x Delta^{n-p-1}: two lattice-independent column values
 * splitting the columns into two blocks */
std::optional<std::pair<int, int>> simplex_product_shape(
    const QuadricSystem& qs) {
  if (qs.r() != 2) return std::nullopt;
  for (int j : qs.J)
    if (j != 1) return std::nullopt;
  auto h = hermite_normal_form(qs.Gamma).H;
  int p = 0, q = 0;
  for (int j = 0; j < h.cols; j++) {
    if (h.at(0, j) == 1 && h.at(1, j) == 0)
      p++;
    else if (h.at(0, j) == 0 && h.at(1, j) == 1)
      q++;
    else
      return std::nullopt;
  }
  if (p == 0 || q == 0) return std::nullopt;
  return std::make_pair(p, p + q);
}

/* the half multiplicities of an all-even system */
std::vector<int> half_j(const QuadricSystem& qs) {
  std::vector<int> h(qs.J);
  for (int& j : h) j /= 2;
  return h;
}

QuadricSystem half_system(const QuadricSystem& qs) {
  return multiwedge(base_system(qs), half_j(qs));
}

/* registered family closures for the narrowness verdicts */
struct Family {
  const char* name;
  SComplex base_nerve;
  // returns k when J matches the family pattern
  std::optional<int> (*match_j)(const std::vector<int>&);
};

std::optional<int> match_uniform_even(const std::vector<int>& J) {
  if (J.size() != 6 || J[0] % 2) return std::nullopt;
  for (int j : J)
    if (j != J[0]) return std::nullopt;
  return J[0] / 2;
}

std::optional<int> match_doublecut(const std::vector<int>& J) {
  if (J.size() != 8 || J[0] % 2) return std::nullopt;
  for (int i = 0; i < 6; i++)
    if (J[i] != J[0]) return std::nullopt;
  if (J[6] != 2 * J[0] || J[7] != 2 * J[0]) return std::nullopt;
  return J[0] / 2;
}

const std::vector<Family>& registered_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    {
      IntMat a(2, 6);
      long e[] = {1, 0, -1, 0, -1, 1, 0, 1, 0, -1, -1, 1};
      for (int i = 0; i < 12; i++) a.e[i] = e[i];
      v.push_back({"wide-narrow hexagon wedge",
                   nerve(make_polytope(2, a, std::vector<Rat>(6, Rat(1)))),
                   match_uniform_even});
    }
    {
      IntMat a(3, 8);
      long e[] = {1, 0, 0, -1, 0, 0, -1, 1, 0, 1, 0, 0, -1, 0, -1, 1,
                  0, 0, 1, 0, 0, -1, -1, 1};
      for (int i = 0; i < 24; i++) a.e[i] = e[i];
      std::vector<Rat> b(8, Rat(1));
      b[6] = b[7] = 2;
      v.push_back({"double vertex-cut cube wedge",
                   nerve(make_polytope(3, a, b)), match_doublecut});
    }
    return v;
  }();
  return fams;
}

}  // namespace

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "unknown";
  }
}

LagrangianReport monotone_certificate(const QuadricSystem& qs) {
  if (!is_smooth_nonempty(qs))
    throw Error("NotSmooth", "system is not smooth and nonempty");
  LagrangianReport rep;
  rep.ambient_dim = qs.ncols() - 1;
  rep.torus_rank = qs.r() - 1;

  bool cp_ok = true;
  try {
    cp_normal_form(qs);
    rep.hypothesis_trail.push_back("projective normal form: ok");
  } catch (const Error& e) {
    cp_ok = false;
    rep.failed_hypotheses.push_back(std::string("normal form: ") + e.what());
  }
  bool emb_ok = embeddedness_check(qs);
  if (emb_ok)
    rep.hypothesis_trail.push_back("embeddedness: ok");
  else
    rep.failed_hypotheses.push_back("embeddedness: lattice test failed");
  auto fano = fano_constant(qs);
  if (fano) {
    std::ostringstream os;
    os << "fano constant: " << fano->get_str();
    rep.hypothesis_trail.push_back(os.str());
  } else {
    rep.failed_hypotheses.push_back("fano: no constant C with sum = C*delta");
  }
  rep.monotone = cp_ok && emb_ok && fano.has_value();

  std::ostringstream fd;
  if (simplex_system(qs)) {
    fd << "RP^" << qs.ncols() - 1;
  } else {
    fd << "quotient of the real moment-angle manifold of the nerve "
       << "by the free sign flip";
  }
  fd << ", over T^" << rep.torus_rank;
  rep.fiber_description = fd.str();
  if (qs.ncols() <= 12) {
    auto k = system_nerve(qs);
    if (!k.min_nonfaces.empty()) rep.fiber_betti_z2 = z2_betti_real_quotient(k);
  }
  return rep;
}

MaslovResult minimal_maslov(const QuadricSystem& qs,
                            bool assume_simply_connected_fiber) {
  auto cert = monotone_certificate(qs);
  if (!cert.monotone)
    throw Error("NotMonotone",
                "maslov number needs a monotone certificate: " +
                    join(cert.failed_hypotheses, "; "));
  auto ld = lattice_data(qs);
  auto s = column_sum(qs);
  std::vector<Rat> rhs(s.begin(), s.end());
  auto x = solve_rational(transpose(ld.lambda_tilde), rhs);
  if (!x) throw Error("inconsistent", "column sum outside the column lattice");
  std::vector<Int> coords;
  for (auto& xi : *x) {
    if (xi.get_den() != 1)
      throw Error("inconsistent", "column sum outside the column lattice");
    coords.push_back(xi.get_num());
  }
  MaslovResult res;
  res.value = abs(vec_gcd(coords));
  std::ostringstream os;
  os << "gcd(";
  for (size_t i = 0; i < coords.size(); i++)
    os << (i ? "," : "") << coords[i].get_str();
  os << ") in a basis of the column lattice";
  res.trail = os.str();
  if (qs.all_even())
    res.status = MaslovStatus::verified;
  else if (assume_simply_connected_fiber)
    res.status = MaslovStatus::asserted;
  else
    res.status = MaslovStatus::unverified;
  return res;
}

std::pair<Tri, Tri> spin_orientability(const QuadricSystem& qs) {
  if (qs.all_even()) {
    bool spin = (qs.ncols() / 2) % 2 == 0;
    return {spin ? Tri::yes : Tri::no, Tri::yes};
  }
  if (auto pn = simplex_product_shape(qs)) {
    if (pn->second % 4 == 0) return {Tri::yes, Tri::yes};
  }
  return {Tri::unknown, Tri::unknown};
}

Tri fibration_triviality(const QuadricSystem& qs) {
  if (qs.all_even()) return Tri::yes;
  if (auto pn = simplex_product_shape(qs)) {
    if (pn->first % 2 == 0 && pn->second % 2 == 0) return Tri::yes;
  }
  return Tri::unknown;
}

std::string pi1_summary(const QuadricSystem& qs) {
  int rank = qs.r() - 1;
  if (simplex_system(qs) && rank == 0) return "Z_2";
  if (qs.all_even() &&
      integral_vanishing_range_check(system_nerve(half_system(qs)), 3)) {
    if (rank == 0) return "Z_2";
    std::ostringstream os;
    os << "Z_2 + Z^" << rank << " (split: simply connected fiber verified)";
    return os.str();
  }
  std::ostringstream os;
  os << "1 -> pi_1(R/Z_2) -> pi_1(L) -> pi_1(T^" << rank << ") -> 1";
  return os.str();
}

std::vector<Verdict> narrowness_report(const QuadricSystem& qs) {
  std::vector<std::string> gate_failures;
  bool monotone = false;
  try {
    monotone = monotone_certificate(qs).monotone;
  } catch (const Error& e) {
    gate_failures.push_back(std::string("smoothness: ") + e.what());
  }
  if (!monotone && gate_failures.empty())
    gate_failures.push_back("monotone certificate failed");
  if (!qs.all_even())
    gate_failures.push_back("multiplicities are not all even");

  std::optional<QuadricSystem> half;
  std::optional<Int> maslov;
  if (gate_failures.empty()) {
    half = half_system(qs);
    try {
      auto hp = quadrics_to_polytope(*half);
      if ((int)irredundant_facets(hp).size() != half->ncols())
        gate_failures.push_back("half-wedge polytope is redundant");
    } catch (const Error& e) {
      gate_failures.push_back(std::string("half-wedge polytope: ") + e.what());
    }
    maslov = minimal_maslov(qs, true).value;
    if (*maslov <= 2) {
      std::ostringstream os;
      os << "minimal Maslov number " << maslov->get_str() << " is not > 2";
      gate_failures.push_back(os.str());
    }
  }

  const char* names[3] = {"QH over a ring with 2 invertible vanishes",
                          "QH over Z not isomorphic to H",
                          "QH over Z_2 vanishes"};
  std::vector<Verdict> out;
  if (!gate_failures.empty()) {
    std::string why = join(gate_failures, "; ");
    for (auto* n : names) out.push_back({n, "inapplicable", why});
    out.push_back({"family closure", "inapplicable", why});
    return out;
  }

  Tri spin = spin_orientability(qs).first;
  for (int i = 0; i < 2; i++) {
    if (spin == Tri::yes)
      out.push_back({names[i], "decided", "spin fiber"});
    else
      out.push_back({names[i], "inapplicable", "spin not established"});
  }
  {
    auto hk = system_nerve(*half);
    int mq = m_number(hk);
    int bound = 2 * mq - 1;
    std::ostringstream os;
    os << "m(Q) = " << mq << "; H^q(R,Z) = 0 for 0 < q < " << bound;
    try {
      bool range_ok = integral_vanishing_range_check(hk, bound, 2000000);
      os << (range_ok ? " verified" : " FAILED");
    } catch (const Error&) {
      os << " not computed (basis cap)";
    }
    os << "; Cartan-Leray differential hypothesis not machine-checked";
    out.push_back({names[2], "hypothesis-dependent", os.str()});
  }
  {
    Verdict fam{"family closure", "inapplicable", "no registered family match"};
    auto base = base_system(qs);
    auto base_nerve = system_nerve(base);
    for (auto& f : registered_families()) {
      if (!(base_nerve == f.base_nerve)) continue;
      auto k = f.match_j(qs.J);
      if (!k) continue;
      std::ostringstream os;
      if (*k >= 2) {
        os << f.name << " at k = " << *k
           << ": QH(L, Z_2[T,T^-1]) = 0 (narrow over Z_2)";
        fam = {"family closure", "decided", os.str()};
      } else {
        os << f.name << " at k = " << *k << ": closure needs k >= 2";
        fam = {"family closure", "inapplicable", os.str()};
      }
      break;
    }
    out.push_back(fam);
  }
  return out;
}

std::vector<unsigned long long> expected_betti_connected_sum(int m, int ell) {
  if (m < 1 || ell < 0) throw Error("range", "need m >= 1 and ell >= 0");
  int top = 2 * m + ell + 1;
  std::vector<unsigned long long> b(top + 1, 0);
  b[0] = b[top] = 1;
  for (int j = 1; j <= ell; j++) {
    // j * C(ell+1, j+1) copies of S^{j+2} x S^{2m+ell-j-1}
    unsigned long long binom = 1;
    for (int i = 1; i <= j + 1; i++)
      binom = binom * (ell + 1 - i + 1) / i;
    unsigned long long copies = (unsigned long long)j * binom;
    b[j + 2] += copies;
    b[2 * m + ell - j - 1] += copies;
  }
  return b;
}

LagrangianReport full_report(const QuadricSystem& qs,
                             bool assume_simply_connected_fiber) {
  auto rep = monotone_certificate(qs);
  if (rep.monotone) {
    auto mr = minimal_maslov(qs, assume_simply_connected_fiber);
    rep.maslov_number = mr.value;
    switch (mr.status) {
      case MaslovStatus::verified:
        rep.maslov_status = "verified";
        break;
      case MaslovStatus::asserted:
        rep.maslov_status = "asserted";
        break;
      default:
        rep.maslov_status = "unverified";
    }
    rep.hypothesis_trail.push_back("maslov: " + mr.trail + " [" +
                                   rep.maslov_status + "]");
  }
  auto so = spin_orientability(qs);
  rep.spin = so.first;
  rep.orientable = so.second;
  rep.fibration_trivial = fibration_triviality(qs);
  rep.pi1 = pi1_summary(qs);
  rep.narrowness = narrowness_report(qs);
  return rep;
}

}  // namespace quadlag

#include "quadlag/json_io.hpp"

namespace quadlag {

namespace {

Rat rat_from_json(const Json& j) {
  Rat r;
  if (j.is_number_integer()) {
    r = Rat((long)j.get<long long>());
  } else if (j.is_string()) {
    try {
      r = Rat(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw Error("parse", "bad rational literal: " + j.get<std::string>());
    }
  } else {
    throw Error("parse", "rational must be an integer or a \"p/q\" string");
  }
  r.canonicalize();
  return r;
}

Json rat_to_json(const Rat& r) { return r.get_str(); }

IntMat intmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error("parse", "matrix must be a nonempty array of rows");
  int rows = (int)j.size();
  int cols = (int)j[0].size();
  IntMat m(rows, cols);
  for (int i = 0; i < rows; i++) {
    if ((int)j[i].size() != cols)
      throw Error("parse", "ragged matrix rows");
    for (int c = 0; c < cols; c++) {
      if (j[i][c].is_number_integer())
        m.at(i, c) = Int((long)j[i][c].get<long long>());
      else if (j[i][c].is_string())
        m.at(i, c) = Int(j[i][c].get<std::string>());
      else
        throw Error("parse", "matrix entries must be integers");
    }
  }
  return m;
}

Json intmat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; i++) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; c++) {
      const Int& v = m.at(i, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mask mask_from_json(const Json& j, int n) {
  Mask m = 0;
  for (auto& v : j) {
    int x = v.get<int>();
    if (x < 1 || x > n) throw Error("parse", "vertex index out of range");
    m |= Mask(1) << (x - 1);
  }
  return m;
}

Json mask_to_json(Mask m) {
  Json out = Json::array();
  for (int i = 0; i < 64; i++)
    if (m & (Mask(1) << i)) out.push_back(i + 1);
  return out;
}

}  // namespace

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["m"] = p.m;
  j["A"] = intmat_to_json(p.A);
  Json b = Json::array();
  for (auto& v : p.b) b.push_back(rat_to_json(v));
  j["b"] = b;
  return j;
}

Polytope polytope_from_json(const Json& j) {
  IntMat a = intmat_from_json(j.at("A"));
  std::vector<Rat> b;
  for (auto& v : j.at("b")) b.push_back(rat_from_json(v));
  return make_polytope(j.at("m").get<int>(), std::move(a), std::move(b));
}

Json system_to_json(const QuadricSystem& qs) {
  Json j;
  j["Gamma"] = intmat_to_json(qs.Gamma);
  Json d = Json::array();
  for (auto& v : qs.delta) d.push_back(rat_to_json(v));
  j["delta"] = d;
  j["J"] = qs.J;
  return j;
}

QuadricSystem system_from_json(const Json& j) {
  IntMat g = intmat_from_json(j.at("Gamma"));
  std::vector<Rat> d;
  for (auto& v : j.at("delta")) d.push_back(rat_from_json(v));
  std::vector<int> J;
  if (j.contains("J")) J = j.at("J").get<std::vector<int>>();
  return make_system(std::move(g), std::move(d), std::move(J));
}

Json complex_to_json(const SComplex& k) {
  Json j;
  j["n"] = k.n;
  Json mnf = Json::array();
  for (Mask m : k.min_nonfaces) mnf.push_back(mask_to_json(m));
  j["min_nonfaces"] = mnf;
  if ((int)k.labels.size() == k.n) j["labels"] = k.labels;
  return j;
}

SComplex complex_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<Mask> mnf;
  for (auto& f : j.at("min_nonfaces")) mnf.push_back(mask_from_json(f, n));
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  return make_complex(n, std::move(mnf), std::move(labels));
}

Json table_to_json(const CohomologyTable& t) {
  Json j;
  j["coeff"] = t.coeff == Coeff::Z ? "Z" : t.coeff == Coeff::Z2 ? "Z2" : "Q";
  Json betti = Json::object();
  for (size_t k = 0; k < t.betti.size(); k++)
    if (t.betti[k]) betti[std::to_string(k)] = t.betti[k];
  j["betti"] = betti;
  Json tor = Json::object();
  for (size_t k = 0; k < t.torsion.size(); k++)
    if (!t.torsion[k].empty()) {
      Json l = Json::array();
      for (auto& d : t.torsion[k]) l.push_back(d.get_str());
      tor[std::to_string(k)] = l;
    }
  j["torsion"] = tor;
  Json big = Json::array();
  for (auto& [pq, rank] : t.bigraded)
    if (rank)
      big.push_back(Json{{"i", pq.first}, {"j", pq.second}, {"rank", rank}});
  j["bigraded"] = big;
  return j;
}

Json betti_to_json(const std::vector<unsigned long long>& b) {
  Json j;
  j["coeff"] = "Z2";
  Json betti = Json::object();
  for (size_t k = 0; k < b.size(); k++)
    if (b[k]) betti[std::to_string(k)] = b[k];
  j["betti"] = betti;
  return j;
}

Json cochain_to_json(const KCochain& c) {
  Json out = Json::array();
  for (auto& [term, v] : c.terms) {
    Json t;
    t["sigma"] = mask_to_json(term.first);
    t["tau"] = mask_to_json(term.second);
    if (v.get_den() == 1 && v.get_num().fits_slong_p())
      t["coef"] = (long long)v.get_num().get_si();
    else
      t["coef"] = v.get_str();
    out.push_back(std::move(t));
  }
  return out;
}

KCochain cochain_from_json(const Json& j, int n) {
  KCochain c;
  for (auto& t : j) {
    Mask sigma = mask_from_json(t.at("sigma"), n);
    Mask tau = mask_from_json(t.at("tau"), n);
    if (sigma & tau)
      throw Error("parse", "sigma and tau must be disjoint");
    Rat coef = t.contains("coef") ? rat_from_json(t.at("coef")) : Rat(1);
    c.add(sigma, tau, coef);
  }
  return c;
}

Json report_to_json(const LagrangianReport& rep) {
  Json j;
  j["ambient_dim"] = rep.ambient_dim;
  j["torus_rank"] = rep.torus_rank;
  j["fiber_description"] = rep.fiber_description;
  if (!rep.fiber_betti_z2.empty())
    j["fiber_betti_z2"] = rep.fiber_betti_z2;
  j["monotone"] = rep.monotone;
  j["failed_hypotheses"] = rep.failed_hypotheses;
  if (rep.maslov_number) {
    j["maslov_number"] = rep.maslov_number->get_str();
    j["maslov_status"] = rep.maslov_status;
  }
  j["spin"] = tri_name(rep.spin);
  j["orientable"] = tri_name(rep.orientable);
  j["fibration_trivial"] = tri_name(rep.fibration_trivial);
  j["pi1"] = rep.pi1;
  Json nv = Json::array();
  for (auto& v : rep.narrowness)
    nv.push_back(Json{{"name", v.name}, {"status", v.status},
                      {"detail", v.detail}});
  j["narrowness"] = nv;
  j["hypothesis_trail"] = rep.hypothesis_trail;
  return j;
}

}  // namespace quadlag

// Python surface: thin JSON-string wrappers over the exact pipeline.
#include "quadlag/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace quadlag;

namespace {

Coeff coeff_of(const std::string& s) {
  if (s == "Z") return Coeff::Z;
  if (s == "Z2") return Coeff::Z2;
  if (s == "Q") return Coeff::Q;
  throw Error("usage", "coeff must be one of Z, Z2, Q");
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(quadlag_py, m) {
  m.doc() = "exact toric Lagrangian toolkit";

  py::register_exception<Error>(m, "QuadlagError");

  m.def("check", [](const std::string& polytope) {
    auto p = polytope_from_json(Json::parse(polytope));
    Json out;
    out["bounded"] = is_bounded(p);
    out["generic"] = is_generic(p);
    out["delzant"] = is_delzant(p);
    out["fano"] = is_fano(p);
    out["vertex_count"] = enumerate_vertices(p).vertices.size();
    out["nerve"] = complex_to_json(nerve(p));
    return dump(out);
  });

  m.def("gale", [](const std::string& polytope) {
    return dump(system_to_json(
        polytope_to_quadrics(polytope_from_json(Json::parse(polytope)))));
  });

  m.def("gale_back", [](const std::string& system) {
    return dump(polytope_to_json(
        quadrics_to_polytope(system_from_json(Json::parse(system)))));
  });

  m.def("wedge", [](const std::string& system, const std::vector<int>& j) {
    return dump(system_to_json(
        multiwedge(system_from_json(Json::parse(system)), j)));
  });

  m.def(
      "cohomology",
      [](const std::string& complex, const std::string& coeff,
         unsigned long long cap) {
        return dump(table_to_json(cohomology(
            complex_from_json(Json::parse(complex)), coeff_of(coeff), cap)));
      },
      py::arg("complex"), py::arg("coeff") = "Z",
      py::arg("cap") = kDefaultBasisCap);

  m.def("real_cohomology", [](const std::string& complex) {
    auto k = complex_from_json(Json::parse(complex));
    Json out;
    out["real"] = betti_to_json(z2_betti_real(k));
    out["quotient"] = betti_to_json(z2_betti_real_quotient(k));
    return dump(out);
  });

  m.def(
      "massey",
      [](const std::string& complex, const std::string& a,
         const std::string& b, const std::string& c, const std::string& coeff) {
        auto k = complex_from_json(Json::parse(complex));
        auto res = triple_massey(k, cochain_from_json(Json::parse(a), k.n),
                                 cochain_from_json(Json::parse(b), k.n),
                                 cochain_from_json(Json::parse(c), k.n),
                                 coeff_of(coeff));
        Json out;
        out["defined"] = res.defined;
        out["nontrivial"] = res.nontrivial;
        out["representative"] = cochain_to_json(res.representative);
        return dump(out);
      },
      py::arg("complex"), py::arg("a"), py::arg("b"), py::arg("c"),
      py::arg("coeff") = "Q");

  m.def(
      "maslov",
      [](const std::string& system, bool assume_simply_connected_fiber) {
        auto mr = minimal_maslov(system_from_json(Json::parse(system)),
                                 assume_simply_connected_fiber);
        Json out;
        out["maslov"] = mr.value.get_str();
        out["status"] = mr.status == MaslovStatus::verified   ? "verified"
                        : mr.status == MaslovStatus::asserted ? "asserted"
                                                              : "unverified";
        out["trail"] = mr.trail;
        return dump(out);
      },
      py::arg("system"), py::arg("assume_simply_connected_fiber") = false);

  m.def(
      "report",
      [](const std::string& system, bool assume_simply_connected_fiber) {
        return dump(report_to_json(
            full_report(system_from_json(Json::parse(system)),
                        assume_simply_connected_fiber)));
      },
      py::arg("system"), py::arg("assume_simply_connected_fiber") = false);
}

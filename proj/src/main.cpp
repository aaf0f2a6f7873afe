#include "quadlag/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace quadlag;

namespace {

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("parse", std::string("invalid JSON in ") + path + ": " +
                             e.what());
  }
}

std::string resolve(const std::string& base, const std::string& path) {
  if (base.empty() || path == "-" || path.front() == '/') return path;
  return base + "/" + path;
}

Coeff coeff_of(const std::string& s) {
  if (s == "Z") return Coeff::Z;
  if (s == "Z2") return Coeff::Z2;
  if (s == "Q") return Coeff::Q;
  throw Error("usage", "coeff must be one of Z, Z2, Q");
}

/* args: polytope | quadrics | complex (paths), plus verb specific keys */
SComplex load_complex(const Json& args, const std::string& base) {
  if (args.contains("complex"))
    return complex_from_json(
        read_json_file(resolve(base, args.at("complex"))));
  if (args.contains("polytope"))
    return nerve(polytope_from_json(
        read_json_file(resolve(base, args.at("polytope")))));
  if (args.contains("quadrics"))
    return system_nerve(system_from_json(
        read_json_file(resolve(base, args.at("quadrics")))));
  throw Error("usage", "need one of --complex, --polytope, --quadrics");
}

QuadricSystem load_system(const Json& args, const std::string& base) {
  if (args.contains("quadrics"))
    return system_from_json(
        read_json_file(resolve(base, args.at("quadrics"))));
  if (args.contains("polytope"))
    return polytope_to_quadrics(polytope_from_json(
        read_json_file(resolve(base, args.at("polytope")))));
  throw Error("usage", "need one of --quadrics, --polytope");
}

Json run_check(const Json& args, const std::string& base) {
  auto p = polytope_from_json(
      read_json_file(resolve(base, args.at("polytope"))));
  Json out;
  out["bounded"] = is_bounded(p);
  out["generic"] = is_generic(p);
  auto irr = irredundant_facets(p);
  Json il = Json::array();
  for (int i : irr) il.push_back(i + 1);
  out["irredundant_facets"] = il;
  out["vertex_count"] = enumerate_vertices(p).vertices.size();
  try {
    out["delzant"] = is_delzant(p);
  } catch (const Error& e) {
    out["delzant"] = std::string("error: ") + e.code;
  }
  try {
    out["fano"] = is_fano(p);
  } catch (const Error& e) {
    out["fano"] = std::string("error: ") + e.code;
  }
  try {
    out["nerve"] = complex_to_json(nerve(p));
  } catch (const Error& e) {
    out["nerve"] = std::string("error: ") + e.code;
  }
  out["warnings"] = p.warnings;
  return out;
}

Json run_gale(const Json& args, const std::string& base) {
  if (args.contains("polytope"))
    return system_to_json(polytope_to_quadrics(polytope_from_json(
        read_json_file(resolve(base, args.at("polytope"))))));
  if (args.contains("quadrics"))
    return polytope_to_json(quadrics_to_polytope(system_from_json(
        read_json_file(resolve(base, args.at("quadrics"))))));
  throw Error("usage", "gale needs --polytope or --quadrics");
}

Json run_wedge(const Json& args, const std::string& base) {
  auto J = args.at("j").get<std::vector<int>>();
  if (args.contains("quadrics"))
    return system_to_json(multiwedge(
        system_from_json(read_json_file(resolve(base, args.at("quadrics")))),
        J));
  if (args.contains("complex"))
    return complex_to_json(wedge_complex(
        complex_from_json(read_json_file(resolve(base, args.at("complex")))),
        J));
  throw Error("usage", "wedge needs --quadrics or --complex");
}

Json run_cohomology(const Json& args, const std::string& base) {
  auto k = load_complex(args, base);
  Coeff c = coeff_of(args.value("coeff", "Z"));
  unsigned long long cap = args.value("cap", kDefaultBasisCap);
  return table_to_json(cohomology(k, c, cap));
}

Json run_real_cohomology(const Json& args, const std::string& base) {
  auto k = load_complex(args, base);
  int cap = (int)args.value("cap", 12ull);
  Json out;
  out["real"] = betti_to_json(z2_betti_real(k, cap));
  try {
    out["quotient"] = betti_to_json(z2_betti_real_quotient(k, cap));
  } catch (const Error& e) {
    out["quotient"] = std::string("error: ") + e.code;
  }
  return out;
}

Json run_massey(const Json& args, const std::string& base) {
  auto k = load_complex(args, base);
  Coeff c = coeff_of(args.value("coeff", "Q"));
  auto a = cochain_from_json(read_json_file(resolve(base, args.at("a"))), k.n);
  auto b = cochain_from_json(read_json_file(resolve(base, args.at("b"))), k.n);
  auto cc =
      cochain_from_json(read_json_file(resolve(base, args.at("c"))), k.n);
  auto res = triple_massey(k, a, b, cc, c);
  Json out;
  out["defined"] = res.defined;
  out["nontrivial"] = res.nontrivial;
  out["representative"] = cochain_to_json(res.representative);
  out["indeterminacy_basis_size"] = res.indeterminacy_basis.size();
  if (args.contains("contains")) {
    auto cand = cochain_from_json(
        read_json_file(resolve(base, args.at("contains"))), k.n);
    out["contains"] = massey_contains(k, a, b, cc, cand, c);
  }
  return out;
}

Json run_maslov(const Json& args, const std::string& base) {
  auto qs = load_system(args, base);
  auto mr = minimal_maslov(qs, args.value("assume", false));
  Json out;
  out["maslov"] = mr.value.get_str();
  out["status"] = mr.status == MaslovStatus::verified   ? "verified"
                  : mr.status == MaslovStatus::asserted ? "asserted"
                                                        : "unverified";
  out["trail"] = mr.trail;
  return out;
}

Json run_report(const Json& args, const std::string& base) {
  auto qs = load_system(args, base);
  return report_to_json(full_report(qs, args.value("assume", false)));
}

Json run_verb(const std::string& verb, const Json& args,
              const std::string& base) {
  if (verb == "check") return run_check(args, base);
  if (verb == "gale") return run_gale(args, base);
  if (verb == "wedge") return run_wedge(args, base);
  if (verb == "cohomology") return run_cohomology(args, base);
  if (verb == "real-cohomology") return run_real_cohomology(args, base);
  if (verb == "massey") return run_massey(args, base);
  if (verb == "maslov") return run_maslov(args, base);
  if (verb == "report") return run_report(args, base);
  throw Error("usage", "unknown verb " + verb);
}

int run_fixtures(const std::string& dir, bool write) {
  auto manifest = read_json_file(dir + "/manifest.json");
  int failures = 0;
  for (auto& entry : manifest) {
    std::string name = entry.at("name");
    std::string status;
    try {
      Json out = run_verb(entry.at("verb"), entry.value("args", Json::object()),
                          dir);
      std::string text = out.dump(2) + "\n";
      std::string golden_path = dir + "/" + entry.at("golden").get<std::string>();
      if (write) {
        std::ofstream o(golden_path);
        o << text;
        status = "WROTE";
      } else {
        std::ifstream g(golden_path);
        std::stringstream ss;
        ss << g.rdbuf();
        if (!g.good() && ss.str().empty())
          status = "FAIL (missing golden)";
        else if (ss.str() == text)
          status = "PASS";
        else
          status = "FAIL (golden mismatch)";
      }
    } catch (const Error& e) {
      status = std::string("FAIL (") + e.code + ": " + e.what() + ")";
    }
    if (status.rfind("FAIL", 0) == 0) failures++;
    std::cout << status << " " << name << "\n";
  }
  return failures ? 1 : 0;
}

void flatten(const Json& j, const std::string& prefix,
             std::ostream& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() &&
             (j[0].is_object() || j[0].is_array())) {
    for (size_t i = 0; i < j.size(); i++)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "\t" << j.dump() << "\n";
  }
}

void emit(const Json& j, const std::string& format) {
  if (format == "table")
    flatten(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric Lagrangian toolkit"};
  app.require_subcommand(1);

  struct Opts {
    std::string polytope, quadrics, complex, a, b, c, contains;
    std::string coeff = "Z", format = "json";
    std::vector<int> j;
    unsigned long long cap = 0;
    bool assume = false;
  } o;

  auto add_common = [&](CLI::App* s, bool with_inputs = true) {
    if (with_inputs) {
      s->add_option("--polytope", o.polytope, "polytope JSON ('-' = stdin)");
      s->add_option("--quadrics", o.quadrics, "quadric system JSON");
      s->add_option("--complex", o.complex, "simplicial complex JSON");
    }
    s->add_option("--coeff", o.coeff, "coefficients: Z, Z2 or Q");
    s->add_option("--cap", o.cap, "basis size cap");
    s->add_flag("--assume-simply-connected-fiber", o.assume,
                "accept the unverified fundamental group hypothesis");
    s->add_option("--format", o.format, "output format: json or table");
    return s;
  };

  auto* vcheck = add_common(app.add_subcommand("check", "polytope predicates"));
  auto* vgale = add_common(app.add_subcommand("gale", "polytope <-> quadrics"));
  auto* vwedge = add_common(app.add_subcommand("wedge", "apply multiplicities"));
  vwedge->add_option("--j", o.j, "multiplicities")->delimiter(',');
  auto* vcoh =
      add_common(app.add_subcommand("cohomology", "Koszul cohomology table"));
  auto* vreal = add_common(
      app.add_subcommand("real-cohomology", "real cubical Z2 tables"));
  auto* vmassey =
      add_common(app.add_subcommand("massey", "triple Massey product"));
  vmassey->add_option("--a", o.a, "first cocycle JSON")->required();
  vmassey->add_option("--b", o.b, "middle cocycle JSON")->required();
  vmassey->add_option("--c", o.c, "last cocycle JSON")->required();
  vmassey->add_option("--contains", o.contains, "candidate cocycle JSON");
  auto* vmaslov =
      add_common(app.add_subcommand("maslov", "minimal Maslov number"));
  auto* vreport =
      add_common(app.add_subcommand("report", "full Lagrangian report"));
  auto* vfix = app.add_subcommand("fixtures", "run the embedded corpus");
  std::string fixdir = "fixtures";
  bool fixwrite = false;
  vfix->add_option("--dir", fixdir, "corpus directory");
  vfix->add_flag("--write", fixwrite, "regenerate golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (vfix->parsed()) return run_fixtures(fixdir, fixwrite);
    Json args = Json::object();
    if (!o.polytope.empty()) args["polytope"] = o.polytope;
    if (!o.quadrics.empty()) args["quadrics"] = o.quadrics;
    if (!o.complex.empty()) args["complex"] = o.complex;
    if (!o.a.empty()) args["a"] = o.a;
    if (!o.b.empty()) args["b"] = o.b;
    if (!o.c.empty()) args["c"] = o.c;
    if (!o.contains.empty()) args["contains"] = o.contains;
    if (!o.j.empty()) args["j"] = o.j;
    if (o.cap) args["cap"] = o.cap;
    args["coeff"] = o.coeff;
    if (vmassey->parsed() && vmassey->count("--coeff") == 0)
      args["coeff"] = "Q";
    args["assume"] = o.assume;
    std::string verb = vcheck->parsed()    ? "check"
                       : vgale->parsed()   ? "gale"
                       : vwedge->parsed()  ? "wedge"
                       : vcoh->parsed()    ? "cohomology"
                       : vreal->parsed()   ? "real-cohomology"
                       : vmassey->parsed() ? "massey"
                       : vmaslov->parsed() ? "maslov"
                                           : "report";
    (void)vreport;
    emit(run_verb(verb, args, ""), o.format);
    return 0;
  } catch (const Error& e) {
    Json err;
    err["error"] = e.code;
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return e.code == "usage" ? 2 : 1;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = "internal";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
}

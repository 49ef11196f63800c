#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhopf/casimir.hpp"
#include "qhopf/invariants.hpp"
#include "qhopf/structure_file.hpp"

namespace qhopf::cli {

namespace {

using json = nlohmann::json;

// Bad command-line values; reported with exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

json element_json(const AlgebraElement& a) {
  json out = json::object();
  for (const auto& [i, c] : a.terms()) out[a.algebra()->basis().label(i)] = c.to_string();
  return out;
}

json report_json(const AxiomReport& report) {
  json checks = json::array();
  for (const AxiomCheck& c : report.checks) {
    json check{{"id", c.id}, {"passed", c.passed}};
    if (!c.passed) {
      check["basis"] = c.witness_basis;
      check["witness"] = c.witness ? c.witness->to_string() : std::string();
    }
    checks.push_back(check);
  }
  return checks;
}

std::string summary(const std::string& command, const AxiomReport& report) {
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const AxiomCheck& c) { return !c.passed; });
  std::ostringstream os;
  os << command << ": " << report.checks.size() << " checks, ";
  if (failed) {
    os << failed << " failed";
  } else {
    os << "all passed";
  }
  return os.str();
}

// Runs a check suite; an exception becomes a failed check named after the suite.
void run_suite(AxiomReport& report, const std::string& suite,
               const std::function<AxiomReport()>& f) {
  try {
    report.append(f());
  } catch (const Error& e) {
    AxiomCheck check;
    check.id = suite;
    check.passed = false;
    check.witness_basis = e.what();
    report.checks.push_back(std::move(check));
  }
}

CatalogEntry load(const std::string& source, const std::string& r_option) {
  CatalogEntry entry = load_structure(source);
  if (!r_option.empty()) entry.structure = entry.with_r(r_option);
  return entry;
}

const Representation& find_rep(const CatalogEntry& entry, const std::string& name) {
  for (const Representation& pi : entry.representations) {
    if (pi.name == name) return pi;
  }
  throw UsageError("no representation named '" + name + "'");
}

void require_r(const QuasiHopf& h) {
  if (!h.has_r()) throw UsageError("structure has no R-matrix");
}

// beta | alpha | unit | invariant:K | LABEL=SCALAR[,LABEL=SCALAR...]
AlgebraElement parse_source(const QuasiHopf& h, const std::string& sel, bool pseudo) {
  const AlgebraPtr& a = h.algebra;
  if (sel == "beta") return h.beta;
  if (sel == "alpha") return h.alpha;
  if (sel == "unit") return a->unit();
  if (sel.starts_with("invariant:")) {
    const GradedSubspace space = pseudo ? pseudo_invariant_subspace(h) : invariant_subspace(h);
    std::size_t k = 0;
    try {
      k = std::stoul(sel.substr(10));
    } catch (const std::exception&) {
      throw UsageError("bad invariant index in '" + sel + "'");
    }
    if (k >= space.even.size()) {
      throw UsageError("invariant index out of range: the even part has dimension " +
                       std::to_string(space.even.size()));
    }
    return space.even[k];
  }
  AlgebraElement out = a->zero();
  std::stringstream terms(sel);
  std::string term;
  while (std::getline(terms, term, ',')) {
    const auto eq = term.find('=');
    if (eq == std::string::npos) throw UsageError("expected LABEL=SCALAR in '" + term + "'");
    auto i = a->basis().find(term.substr(0, eq));
    if (!i) throw UsageError("unknown basis label '" + term.substr(0, eq) + "'");
    try {
      out.add_term(*i, Scalar::parse(term.substr(eq + 1), a->field()));
    } catch (const ParseError& e) {
      throw UsageError("bad scalar in '" + term + "': " + e.what());
    }
  }
  return out;
}

struct Output {
  std::ostream& out;
  bool as_json;
  json doc = json::object();

  void line(const std::string& text) {
    if (!as_json) out << text << "\n";
  }
  void element(const std::string& key, const AlgebraElement& a) {
    doc[key] = element_json(a);
    line(key + " = " + a.to_string());
  }
  int finish(const std::string& command, const AxiomReport& report) {
    if (as_json) {
      doc["command"] = command;
      doc["checks"] = report_json(report);
      doc["passed"] = report.passed();
      out << doc.dump(1) << "\n";
    } else {
      out << report.to_text() << summary(command, report) << "\n";
    }
    return report.passed() ? kPass : kMathFailure;
  }
};

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& file, std::vector<std::string> checks,
               const std::string& r_option, bool as_json, std::ostream& out) {
  const CatalogEntry entry = load(file, r_option);
  const QuasiHopf& h = entry.structure;
  std::set<std::string> sel(checks.begin(), checks.end());
  if (sel.empty() || sel.count("all")) {
    sel = {"axioms", "identities"};
    if (h.has_r()) sel.insert({"qtri", "qybe"});
  }
  if ((sel.count("qtri") || sel.count("qybe")) && !h.has_r()) require_r(h);

  AxiomReport report;
  if (sel.count("axioms")) {
    run_suite(report, "quasi-bialgebra", [&] { return verify_quasi_bialgebra(h); });
    run_suite(report, "antipode", [&] { return verify_antipode_axioms(h); });
  }
  if (sel.count("qtri")) {
    run_suite(report, "quasitriangular", [&] { return verify_quasitriangular(h); });
  }
  if (sel.count("qybe")) {
    run_suite(report, "quasi-yang-baxter", [&] { return verify_quasi_ybe(h); });
  }
  if (sel.count("identities")) {
    run_suite(report, "identities", [&] { return identity_suite(h); });
  }
  Output o{out, as_json};
  o.doc["structure"] = h.name;
  return o.finish("verify", report);
}

// ----------------------------------------------------------------- casimir

struct CasimirArgs {
  std::string file, kind, rep, source, r_option;
  int power = 1;
  bool as_json = false;
};

int cmd_casimir(const CasimirArgs& args, std::ostream& out) {
  const CatalogEntry entry = load(args.file, args.r_option);
  const QuasiHopf& h = entry.structure;
  Output o{out, args.as_json};
  o.doc["structure"] = h.name;
  o.doc["kind"] = args.kind;
  AxiomReport report;

  if (args.kind == "c1" || args.kind == "c2") {
    const bool pseudo = args.kind == "c2";
    const std::string sel = args.source.empty() ? (pseudo ? "alpha" : "beta") : args.source;
    const AlgebraElement c = parse_source(h, sel, pseudo);
    CasimirResult r = pseudo ? build_C2(h, c) : build_C1(h, c);
    o.element("source", c);
    o.element(pseudo ? "C2" : "C1", r.element);
    report = r.report;
  } else if (args.kind == "quadratic") {
    require_r(h);
    const QuadraticInvariants q = quadratic_invariants(h, rtr_power(h, args.power));
    CasimirResult c1 = build_C1(h, q.c1), c2 = build_C2(h, q.c2);
    o.doc["power"] = args.power;
    o.element("c1", q.c1);
    o.element("c2", q.c2);
    o.element("C1", c1.element);
    o.element("C2", c2.element);
    report = c1.report;
    report.append(c2.report);
  } else if (args.kind == "u") {
    require_r(h);
    o.element("u", u_operator(h));
    o.element("u_inverse", u_inverse(h));
    report = identity_suite(h);
  } else {
    require_r(h);
    const Representation& pi = find_rep(entry, args.rep.empty() ? "regular" : args.rep);
    CasimirPair c = casimir_Cm(h, pi, args.power);
    const CasimirResult& r = args.kind == "cm" ? c.c : c.c_bar;
    o.doc["power"] = args.power;
    o.doc["representation"] = pi.name;
    o.element(args.kind == "cm" ? "C_m" : "Cbar_m", r.element);
    report = r.report;
  }
  return o.finish("casimir", report);
}

// ------------------------------------------------------------------- twist

struct TwistArgs {
  std::string file, twistor, out_path, name, r_option;
  bool verify_invariance = false, as_json = false;
};

int cmd_twist(const TwistArgs& args, std::ostream& out, std::ostream& err) {
  const CatalogEntry entry = load(args.file, args.r_option);
  const QuasiHopf& h = entry.structure;
  const Twistor* f = nullptr;
  for (const Twistor& t : entry.twistors) {
    if (t.name == args.twistor) f = &t;
  }
  if (!f) throw UsageError("no twistor named '" + args.twistor + "'");

  const bool trivial = f->f == h.one(2);
  std::string name = args.name;
  if (name.empty()) name = trivial ? h.name : h.name + "-" + f->name;
  std::string notes = trivial ? entry.notes : entry.notes + "; twisted by " + f->name;
  const CatalogEntry twisted = twist_entry(entry, *f, name, notes, false);

  AxiomReport report;
  run_suite(report, "twisted-structure", [&] { return verify_all(twisted.structure); });
  run_suite(report, "twisted-canonical-elements",
            [&] { return check_twisted_canonical_identities(h, *f, twisted.structure); });

  // Without --out the structure goes to stdout and the report to stderr.
  const bool to_stdout = args.out_path.empty() && !args.as_json;
  Output o{to_stdout ? err : out, args.as_json};
  o.doc["structure"] = h.name;
  o.doc["twistor"] = f->name;
  o.doc["twisted"] = twisted.structure.name;
  if (args.verify_invariance) {
    TwistInvarianceOptions options;
    options.representations = entry.representations;
    run_suite(report, "twist-invariance",
              [&] { return verify_twist_invariance(h, *f, options); });
    if (h.has_r()) {
      o.element("u", u_operator(h));
      o.element("u_twisted", u_operator(twisted.structure));
    }
  }
  if (!args.out_path.empty()) {
    write_structure_file(args.out_path, twisted);
    o.doc["output"] = args.out_path;
    o.line("wrote " + args.out_path);
  } else if (to_stdout) {
    out << render_structure(twisted);
  }
  return o.finish("twist", report);
}

// ------------------------------------------------------------------ center

int cmd_center(const std::string& file, bool as_json, std::ostream& out) {
  const CatalogEntry entry = load(file, "");
  const GradedSubspace z = center(entry.structure.algebra);
  if (as_json) {
    json even = json::array(), odd = json::array();
    for (const auto& x : z.even) even.push_back(element_json(x));
    for (const auto& x : z.odd) odd.push_back(element_json(x));
    json doc{{"command", "center"}, {"structure", entry.structure.name},
             {"dimension", z.dim()}, {"even", even}, {"odd", odd}};
    out << doc.dump(1) << "\n";
  } else {
    out << "center of " << entry.structure.name << ": dimension " << z.dim() << " ("
        << z.even.size() << " even, " << z.odd.size() << " odd)\n";
    for (const auto& x : z.even) out << "even " << x.to_string() << "\n";
    for (const auto& x : z.odd) out << "odd " << x.to_string() << "\n";
  }
  return kPass;
}

int cmd_export(const std::string& source, const std::string& r_option,
               const std::string& out_path, std::ostream& out) {
  const CatalogEntry entry = load(source, r_option);
  if (out_path.empty()) {
    out << render_structure(entry);
  } else {
    write_structure_file(out_path, entry);
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification, twisting and Casimir invariants of quasi-Hopf superalgebras",
               "qhopf"};
  app.require_subcommand(1);
  const auto kinds = CLI::IsMember({"c1", "c2", "quadratic", "u", "cm", "cmbar"});
  const auto check_names = CLI::IsMember({"axioms", "qtri", "qybe", "identities", "all"});

  std::string file, r_option;
  bool as_json = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("file", file, ".qh structure file or builtin:NAME")->required();
    sub->add_option("--r-option", r_option, "install the named alternative R-matrix");
    sub->add_flag("--json", as_json, "machine-readable report");
  };

  std::vector<std::string> checks;
  auto* verify = app.add_subcommand("verify", "verify the axioms and identities");
  common(verify);
  verify->add_option("--checks", checks, "axioms,qtri,qybe,identities,all")
      ->delimiter(',')
      ->check(check_names);

  CasimirArgs cas;
  auto* casimir = app.add_subcommand("casimir", "build a central element");
  common(casimir);
  casimir->add_option("--kind", cas.kind, "c1, c2, quadratic, u, cm or cmbar")
      ->required()
      ->check(kinds);
  casimir->add_option("--power", cas.power, "power m of (R^T R)");
  casimir->add_option("--rep", cas.rep, "representation for cm and cmbar");
  casimir->add_option("--source", cas.source,
                      "beta, alpha, unit, invariant:K or LABEL=SCALAR,... for c1 and c2");

  TwistArgs tw;
  auto* twist = app.add_subcommand("twist", "twist by a named twistor");
  common(twist);
  twist->add_option("--twistor", tw.twistor, "twistor name")->required();
  twist->add_option("--out", tw.out_path, "write the twisted structure here");
  twist->add_option("--name", tw.name, "name of the twisted structure");
  twist->add_flag("--verify-invariance", tw.verify_invariance,
                  "check that the Casimir invariants survive the twist");

  auto* ctr = app.add_subcommand("center", "basis of the center");
  ctr->add_option("file", file, ".qh structure file or builtin:NAME")->required();
  ctr->add_flag("--json", as_json, "machine-readable report");

  std::string export_out;
  auto* exp = app.add_subcommand("export", "write a structure file");
  exp->add_option("source", file, ".qh structure file or builtin:NAME")->required();
  exp->add_option("--r-option", r_option, "install the named alternative R-matrix");
  exp->add_option("--out", export_out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, checks, r_option, as_json, out);
    if (casimir->parsed()) {
      cas.file = file;
      cas.r_option = r_option;
      cas.as_json = as_json;
      return cmd_casimir(cas, out);
    }
    if (twist->parsed()) {
      tw.file = file;
      tw.r_option = r_option;
      tw.as_json = as_json;
      return cmd_twist(tw, out, err);
    }
    if (ctr->parsed()) return cmd_center(file, as_json, out);
    return cmd_export(file, r_option, export_out, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace qhopf::cli

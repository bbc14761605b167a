#include "entwine/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entwine/catalog.hpp"
#include "entwine/errors.hpp"
#include "entwine/hochschild.hpp"

namespace entwine {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string file;
  std::string kind;
  bool normalized = false;
  bool json = false;
  std::string output;
  std::size_t degree = 1;
  std::string bimodule = "auto";
  std::string over = "auto";
  std::string name;
  std::vector<std::string> params;
  bool list = false;
};

void emit(std::ostream& out, const ordered_json& j, bool json) {
  if (json) {
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [k2, v2] : value.items())
        out << "  " << k2 << ": " << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

const LinMap& require_psi(const Document& d) {
  if (!d.psi) throw InputError("document has no 'psi' section");
  return *d.psi;
}

std::string matrix_text(const Matrix& m) {
  std::string s = to_string(m);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Document d = read_document(o.file);
  ordered_json j;
  bool ok = true;
  auto record = [&](const std::string& what, const CheckReport& r) {
    j[what] = r.passed() ? "pass" : r.str();
    ok = ok && r.passed();
  };
  if (d.algebra) record("algebra", verify_algebra(*d.algebra));
  if (d.coalgebra) record("coalgebra", verify_coalgebra(*d.coalgebra));
  if (d.psi) record("entwining", verify_entwining(trusted_entwining(*d.algebra, *d.coalgebra, *d.psi)));
  if (d.coactionA) record("coactionA", verify_right_comodule(*d.coalgebra, *d.coactionA));
  if (d.actionC) {
    const Algebra& a = *d.algebra;
    record("actionC", verify_right_module(a, d.actionC->reshaped(d.coalgebra->shape() * a.shape(),
                                                                  d.coalgebra->shape())));
  }
  if (d.module && d.psi) {
    const Entwining e = trusted_entwining(*d.algebra, *d.coalgebra, *d.psi);
    record("module", verify_entwined_module(EntwinedModule{e, d.module->action, d.module->coaction}));
  }
  if (d.bimodule) record("bimodule", verify_bimodule(*d.algebra, Bimodule{d.bimodule->left, d.bimodule->right}));
  if (d.morphism) {
    const MorphismData& m = *d.morphism;
    const EntwiningMorphism mor{trusted_entwining(*d.algebra, *d.coalgebra, require_psi(d)),
                                trusted_entwining(m.alg, m.coalg, m.psi), m.f, m.g};
    CheckReport r = verify_entwining(mor.dst);
    r.merge(verify_morphism(mor));
    record("morphism", r);
  }
  if (d.certificate) record("certificate", verify_certificate(d));
  if (j.empty()) j["note"] = "nothing to check";
  emit(out, j, o.json);
  return ok ? kPass : kFail;
}


std::optional<WitnessKind> parse_kind(const std::string& s) {
  for (WitnessKind k : {WitnessKind::Integral, WitnessKind::Cointegral, WitnessKind::IntegralMap,
                        WitnessKind::CointegralMap})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

int cmd_solve(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  ordered_json j;
  j["kind"] = o.kind;
  j["normalized"] = o.normalized;
  AffineSolutionSet s;
  std::optional<Certificate> cert;
  if (const auto kind = parse_kind(o.kind)) {
    const Entwining e = document_entwining(d);
    s = solve_witness(*kind, e, o.normalized);
    if (s.feasible()) {
      const Witness w{*kind, witness_value(*kind, e, *s.particular), o.normalized};
      j["value"] = matrix_text(w.value.matrix());
      cert = to_certificate(w);
    }
  } else {
    const EntwiningMorphism mor = document_morphism(d);
    const bool lambda = o.kind == "lambda";
    const LinearSystem sys = lambda ? lambda_system(mor, o.normalized) : frakz_system(mor, o.normalized);
    s = sys.solve();
    if (s.feasible()) {
      const MorphismWitness w{lambda ? MorphismWitness::Side::Lambda : MorphismWitness::Side::FrakZ, mor,
                              sys.unpack(*s.particular).front(), o.normalized};
      j["value"] = matrix_text(w.map.matrix());
      cert = to_certificate(w);
    }
  }
  j["result"] = s.feasible() ? "feasible" : "infeasible";
  j["homogeneous_dim"] = s.homogeneous.dim();
  if (cert && !o.output.empty()) {
    d.certificate = cert;
    write_file(o.output, write_document(d));
  }
  emit(out, j, o.json);
  return s.feasible() ? kPass : kFail;
}

Subspace choose_B(const Document& d, const std::string& over) {
  const Algebra& a = *d.algebra;
  const bool fixed = over == "fixed" || (over == "auto" && d.coactionA);
  if (!fixed) return Subspace::span(a.field(), a.shape(), {a.unit});
  if (!d.coactionA || !d.coalgebra) throw InputError("--over fixed needs 'coalgebra' and 'coactionA'");
  return fixed_subalgebra(a, *d.coalgebra, *d.coactionA).first;
}

ordered_json h1_summary(const Algebra& a, const Subspace& b) {
  ordered_json h;
  h["A"] = cohomology_dim(relative_complex(a, b, regular_bimodule(a), 2), 1).dim;
  h["A⊗A"] = cohomology_dim(relative_complex(a, b, outer_bimodule(a), 2), 1).dim;
  return h;
}

int cmd_extension(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  ordered_json j;
  GaloisExtension g;
  try {
    g = document_extension(d);
  } catch (const GaloisError& e) {
    j["galois"] = false;
    j["reason"] = e.what();
    emit(out, j, o.json);
    return kFail;
  }
  j["galois"] = true;
  j["dim_B"] = g.B.dim();
  j["copointed"] = copointed_grouplike(g).has_value();
  const auto sep = check_separable(g);
  j["separable"] = sep.has_value();
  if (sep) j["u"] = to_string(g.AtensBA.section().apply(sep->u));
  const SplitResult split = check_split(g);
  j["split"] = split.cert.has_value();
  if (split.cert) j["split_family_dim"] = split.family.homogeneous.dim();
  const StrongResult strong = check_strongly_separable(g);
  ordered_json sj;
  sj["found"] = strong.cert.has_value();
  if (strong.cert) sj["tau"] = strong.cert->tau.str();
  if (strong.inconclusive) sj["inconclusive"] = true;
  if (!strong.diagnostic.empty()) sj["diagnostic"] = strong.diagnostic;
  sj["free_over_B"] = strong.free_over_B;
  j["strong"] = sj;
  ordered_json h = h1_summary(g.alg, g.B);
  h["note"] = "vanishing on these bimodules does not decide separability";
  j["hochschild_H1"] = h;
  if (!o.output.empty()) {
    if (strong.cert) d.certificate = to_certificate(g, *strong.cert);
    else if (sep) d.certificate = to_certificate(g, *sep);
    else if (split.cert) d.certificate = to_certificate(*split.cert);
    if (d.certificate) write_file(o.output, write_document(d));
  }
  emit(out, j, o.json);
  return kPass;
}

int cmd_coextension(const Options& o, std::ostream& out) {
  Document d = read_document(o.file);
  ordered_json j;
  Coextension x;
  try {
    x = document_coextension(d);
  } catch (const GaloisError& e) {
    j["galois"] = false;
    j["reason"] = e.what();
    emit(out, j, o.json);
    return kFail;
  }
  j["galois"] = true;
  j["dim_B"] = x.B.coalgebra.dim();
  j["pointed"] = pointed_kappa(x).has_value();
  const auto cosep = check_coseparable(x);
  j["coseparable"] = cosep.has_value();
  j["normalized_integral_map"] = solve_witness(WitnessKind::IntegralMap, x.psi, true).feasible();
  if (x.B.coalgebra.dim() == 1) {
    const LinMap gamma = cotranslation_map(x);
    j["cotranslation"] = verify_cotranslation(x, gamma).passed() ? "pass" : "fail";
  }
  if (cosep && !o.output.empty()) {
    d.certificate = to_certificate(x, *cosep);
    write_file(o.output, write_document(d));
  }
  emit(out, j, o.json);
  return kPass;
}

int cmd_hochschild(const Options& o, std::ostream& out) {
  const Document d = read_document(o.file);
  if (!d.algebra) throw InputError("document has no 'algebra' section");
  const Algebra& a = *d.algebra;
  if (o.degree > 2) throw InputError("--n must be 0, 1 or 2");
  const Subspace b = choose_B(d, o.over);
  std::string which = o.bimodule;
  if (which == "auto") which = d.bimodule ? "file" : "regular";
  Bimodule m;
  if (which == "file") {
    if (!d.bimodule) throw InputError("document has no 'bimodule' section");
    m = make_bimodule(a, d.bimodule->left, d.bimodule->right);
  } else if (which == "regular") {
    m = regular_bimodule(a);
  } else {
    m = outer_bimodule(a);
  }
  const RelativeComplex c = relative_complex(a, b, m, o.degree + 1);
  ordered_json j;
  j["dim_B"] = b.dim();
  j["bimodule"] = which;
  ordered_json dims;
  for (std::size_t n = 0; n < c.cochains.size(); ++n) dims.push_back(c.cochains[n].dim());
  j["cochain_dims"] = dims;
  const Cohomology h = cohomology_dim(c, o.degree);
  j["H" + std::to_string(o.degree)] = h.dim;
  if (!h.representatives.empty()) {
    const LinMap rep = unvec(a.field(), TensorShape(std::vector<std::size_t>(o.degree, a.dim())),
                             TensorShape{m.dim()}, h.representatives.front());
    j["representative"] = matrix_text(rep.matrix());
  }
  emit(out, j, o.json);
  return kPass;
}

int cmd_catalog(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.list || o.name.empty()) {
    for (const auto& n : catalog_names()) out << n << "\n";
    return o.list ? kPass : kMalformed;
  }
  std::map<std::string, std::string> params;
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw InputError("parameter '" + p + "' must be key=value");
    params[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const CatalogEntry e = make_example(o.name, params);
  for (const auto& w : e.warnings) err << "warning: " << w << "\n";
  const std::string text = write_document(e.payload);
  if (o.output.empty()) out << text;
  else write_file(o.output, text);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entwining structures, Galois extensions and their separability witnesses", "entwine"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Verify every structure present in a file");
  check->add_option("file", o.file)->required();
  check->add_flag("--json", o.json, "JSON output");

  auto* solve = app.add_subcommand("solve", "Solve for a witness");
  solve->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"integral", "cointegral", "integral-map", "cointegral-map", "lambda", "frakz"}));
  solve->add_flag("--normalized", o.normalized, "Impose normalisation (totality for lambda/frakz)");
  solve->add_option("-o,--output", o.output, "Write the file with a certificate");
  solve->add_option("file", o.file)->required();
  solve->add_flag("--json", o.json, "JSON output");

  auto* ext = app.add_subcommand("extension", "Coalgebra-Galois extension tools");
  auto* ext_report = ext->add_subcommand("report", "Galois, separable, split, strong and H^1 summary");
  ext->require_subcommand(1);
  ext_report->add_option("file", o.file)->required();
  ext_report->add_option("-o,--output", o.output, "Write the file with the strongest certificate");
  ext_report->add_flag("--json", o.json, "JSON output");

  auto* coext = app.add_subcommand("coextension", "Algebra-Galois coextension tools");
  auto* coext_report = coext->add_subcommand("report", "Galois, coseparable and cotranslation summary");
  coext->require_subcommand(1);
  coext_report->add_option("file", o.file)->required();
  coext_report->add_option("-o,--output", o.output, "Write the file with a coseparability certificate");
  coext_report->add_flag("--json", o.json, "JSON output");

  auto* hoch = app.add_subcommand("hochschild", "Relative Hochschild cohomology");
  hoch->add_option("--n", o.degree, "Degree (0, 1 or 2)")->default_val(1);
  hoch->add_option("--bimodule", o.bimodule, "file, regular or outer")
      ->check(CLI::IsMember({"auto", "file", "regular", "outer"}));
  hoch->add_option("--over", o.over, "B = ground field or fixed subalgebra")
      ->check(CLI::IsMember({"auto", "ground", "fixed"}));
  hoch->add_option("file", o.file)->required();
  hoch->add_flag("--json", o.json, "JSON output");

  auto* cat = app.add_subcommand("catalog", "Write a catalog example");
  cat->add_option("--name", o.name);
  cat->add_option("--param", o.params, "key=value (field, n, d, m, e, twisted)");
  cat->add_option("-o,--output", o.output);
  cat->add_flag("--list", o.list, "List catalog names");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kMalformed;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (ext_report->parsed()) return cmd_extension(o, out);
    if (coext_report->parsed()) return cmd_coextension(o, out);
    if (hoch->parsed()) return cmd_hochschild(o, out);
    if (cat->parsed()) return cmd_catalog(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kMalformed;
}

}  // namespace entwine

#include "entwine/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "entwine/errors.hpp"

namespace entwine {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

const char* const kSchema = "entwine/1";

// Reads one JSON object, tracking the path for diagnostics and rejecting
// keys that were never asked for.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) error("expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json& at(const std::string& key) {
    seen_.push_back(key);
    if (!j_.contains(key)) throw InputError(path_ + ": missing field '" + key + "'");
    return j_.at(key);
  }

  std::string sub(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  std::size_t size(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
      throw InputError(sub(key) + ": expected a positive integer");
    return v.get<std::size_t>();
  }

  bool boolean(const std::string& key) {
    const json& v = at(key);
    if (!v.is_boolean()) throw InputError(sub(key) + ": expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key) {
    const json& v = at(key);
    if (!v.is_string()) throw InputError(sub(key) + ": expected a string");
    return v.get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end())
        throw InputError((path_.empty() ? std::string("document") : path_) + ": unknown field '" + key + "'");
  }

  [[noreturn]] void error(const std::string& what) const {
    throw InputError((path_.empty() ? std::string("document") : path_) + ": " + what);
  }

 private:
  const json& j_;
  std::string path_;
  std::vector<std::string> seen_;
};

Scalar read_scalar(FieldSpec k, const json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) {
      if (k.is_rational()) return k.from_int(v.get<long long>());
      const long long x = v.get<long long>();
      if (x < 0 || static_cast<unsigned long long>(x) >= k.p())
        throw InputError("residue must lie in [0, " + std::to_string(k.p()) + ")");
      return k.from_int(x);
    }
    if (v.is_string() && k.is_rational()) return k.parse(v.get<std::string>());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
  throw InputError(path + (k.is_rational() ? ": expected an integer or a \"num/den\" string"
                                           : ": expected an integer residue"));
}

Vector read_vector(FieldSpec k, const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  if (v.size() != n)
    throw InputError(path + ": expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_scalar(k, v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix read_matrix(FieldSpec k, const json& v, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array of rows");
  if (v.size() != rows)
    throw InputError(path + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  Matrix m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = read_vector(k, v[r], cols, path + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

// Matrix of unknown shape, for certificates whose shapes depend on context.
Matrix read_any_matrix(FieldSpec k, const json& v, const std::string& path) {
  if (!v.is_array() || v.empty() || !v[0].is_array())
    throw InputError(path + ": expected a non-empty array of rows");
  return read_matrix(k, v, v.size(), v[0].size(), path);
}

LinMap read_map(FieldSpec k, Reader& r, const std::string& key, TensorShape dom, TensorShape cod) {
  return LinMap(dom, cod, read_matrix(k, r.at(key), cod.total(), dom.total(), r.sub(key)));
}

Algebra read_algebra(FieldSpec k, const json& j, const std::string& path) {
  Reader r(j, path);
  const std::size_t n = r.size("dim");
  const LinMap mult = read_map(k, r, "mult", TensorShape{n, n}, TensorShape{n});
  Vector unit = read_vector(k, r.at("unit"), n, r.sub("unit"));
  r.finish();
  return make_algebra(mult, std::move(unit));
}

Coalgebra read_coalgebra(FieldSpec k, const json& j, const std::string& path) {
  Reader r(j, path);
  const std::size_t n = r.size("dim");
  const LinMap comult = read_map(k, r, "comult", TensorShape{n}, TensorShape{n, n});
  Vector counit = read_vector(k, r.at("counit"), n, r.sub("counit"));
  r.finish();
  return make_coalgebra(comult, std::move(counit));
}

FieldSpec read_field(const json& j) {
  Reader r(j, "field");
  const std::string kind = r.string("kind");
  FieldSpec k = FieldSpec::rationals();
  if (kind == "Fp") {
    const json& p = r.at("p");
    if (!p.is_number_unsigned()) throw InputError("field.p: expected a prime");
    try {
      k = FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      throw InputError(std::string("field.p: ") + e.what());
    }
  } else if (kind != "Q") {
    throw InputError("field.kind: expected \"Q\" or \"Fp\", got \"" + kind + "\"");
  }
  r.finish();
  return k;
}

Certificate read_certificate(FieldSpec k, const json& j) {
  Reader r(j, "certificate");
  Certificate c;
  c.kind = r.string("kind");
  if (r.has("normalized")) c.normalized = r.boolean("normalized");
  for (const char* key : {"value", "phi", "E", "upsilon"})
    if (r.has(key)) c.maps.emplace(key, read_any_matrix(k, r.at(key), r.sub(key)));
  if (r.has("u")) {
    const json& u = r.at("u");
    if (!u.is_array()) throw InputError("certificate.u: expected an array");
    c.vectors.emplace("u", read_vector(k, u, u.size(), "certificate.u"));
  }
  if (r.has("tau")) c.tau = read_scalar(k, r.at("tau"), "certificate.tau");
  r.finish();
  return c;
}

ordered_json scalar_json(const Scalar& s) {
  if (s.field().is_rational()) return s.str();
  return s.residue();
}

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const Scalar& s : v) out.push_back(scalar_json(s));
  return out;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row_vector(r)));
  return out;
}

ordered_json algebra_json(const Algebra& a) {
  return ordered_json{{"dim", a.dim()}, {"mult", matrix_json(a.mult.matrix())}, {"unit", vector_json(a.unit)}};
}

ordered_json coalgebra_json(const Coalgebra& c) {
  return ordered_json{
      {"dim", c.dim()}, {"comult", matrix_json(c.comult.matrix())}, {"counit", vector_json(c.counit)}};
}

template <class T>
const T& need(const std::optional<T>& v, const char* section) {
  if (!v) throw InputError(std::string("document has no '") + section + "' section");
  return *v;
}

const Matrix& need_map(const Certificate& c, const std::string& key) {
  const auto it = c.maps.find(key);
  if (it == c.maps.end()) throw InputError("certificate." + key + " is missing");
  return it->second;
}

LinMap shaped(const Matrix& m, TensorShape dom, TensorShape cod, const std::string& key) {
  if (m.rows() != cod.total() || m.cols() != dom.total())
    throw InputError("certificate." + key + ": expected a " + std::to_string(cod.total()) + "x" +
                     std::to_string(dom.total()) + " matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  return LinMap(std::move(dom), std::move(cod), m);
}

Vector need_u(const GaloisExtension& g, const Certificate& c) {
  const auto it = c.vectors.find("u");
  if (it == c.vectors.end()) throw InputError("certificate.u is missing");
  const std::size_t da = g.alg.dim();
  if (it->second.size() != da * da)
    throw InputError("certificate.u: expected " + std::to_string(da * da) + " entries");
  return g.AtensBA.projection().apply(it->second);
}

std::optional<WitnessKind> witness_kind(const std::string& s) {
  for (WitnessKind k : {WitnessKind::Integral, WitnessKind::Cointegral, WitnessKind::IntegralMap,
                        WitnessKind::CointegralMap})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

TensorShape witness_domain(WitnessKind k, const Entwining& e) {
  switch (k) {
    case WitnessKind::Integral: return TensorShape{};
    case WitnessKind::Cointegral: return e.c() * e.a();
    case WitnessKind::IntegralMap: return e.c() * e.c();
    case WitnessKind::CointegralMap: return e.c();
  }
  return {};
}

TensorShape witness_codomain(WitnessKind k, const Entwining& e) {
  switch (k) {
    case WitnessKind::Integral: return e.a() * e.c();
    case WitnessKind::Cointegral: return TensorShape{};
    case WitnessKind::IntegralMap: return e.a();
    case WitnessKind::CointegralMap: return e.a() * e.a();
  }
  return {};
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  Reader r(j, "");
  const std::string schema = r.string("schema");
  if (schema != kSchema) throw InputError("schema: expected \"" + std::string(kSchema) + "\", got \"" + schema + "\"");
  Document d;
  d.field = read_field(r.at("field"));
  const FieldSpec k = d.field;
  if (r.has("algebra")) d.algebra = read_algebra(k, r.at("algebra"), "algebra");
  if (r.has("coalgebra")) d.coalgebra = read_coalgebra(k, r.at("coalgebra"), "coalgebra");
  auto dims = [&](const char* key) {
    if (!d.algebra || !d.coalgebra)
      throw InputError(std::string(key) + " needs both 'algebra' and 'coalgebra'");
    return std::pair{d.algebra->shape(), d.coalgebra->shape()};
  };
  if (r.has("psi")) {
    const auto [a, c] = dims("psi");
    d.psi = read_map(k, r, "psi", c * a, a * c);
  }
  if (r.has("coactionA")) {
    const auto [a, c] = dims("coactionA");
    d.coactionA = read_map(k, r, "coactionA", a, a * c);
  }
  if (r.has("actionC")) {
    const auto [a, c] = dims("actionC");
    d.actionC = read_map(k, r, "actionC", c * a, c);
  }
  if (r.has("module")) {
    const auto [a, c] = dims("module");
    Reader m(r.at("module"), "module");
    const TensorShape ms{m.size("dim")};
    ModuleData md{read_map(k, m, "action", ms * a, ms), read_map(k, m, "coaction", ms, ms * c)};
    m.finish();
    d.module = std::move(md);
  }
  if (r.has("bimodule")) {
    if (!d.algebra) throw InputError("bimodule needs 'algebra'");
    const TensorShape a = d.algebra->shape();
    Reader m(r.at("bimodule"), "bimodule");
    const TensorShape ms{m.size("dim")};
    BimoduleData bd{read_map(k, m, "left", a * ms, ms), read_map(k, m, "right", ms * a, ms)};
    m.finish();
    d.bimodule = std::move(bd);
  }
  if (r.has("morphism")) {
    const auto [a, c] = dims("morphism");
    Reader m(r.at("morphism"), "morphism");
    Algebra at = read_algebra(k, m.at("algebra"), "morphism.algebra");
    Coalgebra ct = read_coalgebra(k, m.at("coalgebra"), "morphism.coalgebra");
    const LinMap psi = read_map(k, m, "psi", ct.shape() * at.shape(), at.shape() * ct.shape());
    const LinMap f = read_map(k, m, "f", a, at.shape());
    const LinMap g = read_map(k, m, "g", c, ct.shape());
    m.finish();
    d.morphism = MorphismData{std::move(at), std::move(ct), psi, f, g};
  }
  if (r.has("certificate")) d.certificate = read_certificate(k, r.at("certificate"));
  r.finish();
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string write_document(const Document& d) {
  ordered_json j;
  j["schema"] = kSchema;
  j["field"] = d.field.is_rational() ? ordered_json{{"kind", "Q"}} : ordered_json{{"kind", "Fp"}, {"p", d.field.p()}};
  if (d.algebra) j["algebra"] = algebra_json(*d.algebra);
  if (d.coalgebra) j["coalgebra"] = coalgebra_json(*d.coalgebra);
  if (d.psi) j["psi"] = matrix_json(d.psi->matrix());
  if (d.coactionA) j["coactionA"] = matrix_json(d.coactionA->matrix());
  if (d.actionC) j["actionC"] = matrix_json(d.actionC->matrix());
  if (d.module)
    j["module"] = ordered_json{{"dim", d.module->action.codomain().total()},
                               {"action", matrix_json(d.module->action.matrix())},
                               {"coaction", matrix_json(d.module->coaction.matrix())}};
  if (d.bimodule)
    j["bimodule"] = ordered_json{{"dim", d.bimodule->left.codomain().total()},
                                 {"left", matrix_json(d.bimodule->left.matrix())},
                                 {"right", matrix_json(d.bimodule->right.matrix())}};
  if (d.morphism)
    j["morphism"] = ordered_json{{"algebra", algebra_json(d.morphism->alg)},
                                 {"coalgebra", coalgebra_json(d.morphism->coalg)},
                                 {"psi", matrix_json(d.morphism->psi.matrix())},
                                 {"f", matrix_json(d.morphism->f.matrix())},
                                 {"g", matrix_json(d.morphism->g.matrix())}};
  if (d.certificate) {
    const Certificate& c = *d.certificate;
    ordered_json cj{{"kind", c.kind}, {"normalized", c.normalized}};
    for (const auto& [key, m] : c.maps) cj[key] = matrix_json(m);
    for (const auto& [key, v] : c.vectors) cj[key] = vector_json(v);
    if (c.tau) cj["tau"] = scalar_json(*c.tau);
    j["certificate"] = std::move(cj);
  }
  return j.dump(2) + "\n";
}

Entwining document_entwining(const Document& d) {
  return make_entwining(need(d.algebra, "algebra"), need(d.coalgebra, "coalgebra"), need(d.psi, "psi"));
}

EntwiningMorphism document_morphism(const Document& d) {
  const MorphismData& m = need(d.morphism, "morphism");
  EntwiningMorphism mor{document_entwining(d), make_entwining(m.alg, m.coalg, m.psi), m.f, m.g};
  const CheckReport r = verify_morphism(mor);
  if (!r.passed()) throw DomainError("not an entwining morphism:\n" + r.str());
  return mor;
}

GaloisExtension document_extension(const Document& d) {
  return build_galois(need(d.algebra, "algebra"), need(d.coalgebra, "coalgebra"), need(d.coactionA, "coactionA"));
}

Coextension document_coextension(const Document& d) {
  return build_coextension(need(d.coalgebra, "coalgebra"), need(d.algebra, "algebra"), need(d.actionC, "actionC"));
}

Certificate to_certificate(const Witness& w) {
  return Certificate{to_string(w.kind), w.normalized, {{"value", w.value.matrix()}}, {}, {}};
}

Certificate to_certificate(const MorphismWitness& w) {
  return Certificate{w.side == MorphismWitness::Side::Lambda ? "lambda" : "frakz", w.total,
                     {{"value", w.map.matrix()}}, {}, {}};
}

Certificate to_certificate(const GaloisExtension& g, const SeparabilityCertificate& c) {
  return Certificate{"separability", true, {}, {{"u", g.AtensBA.section().apply(c.u)}}, {}};
}

Certificate to_certificate(const SplitCertificate& c) {
  return Certificate{"split", true, {{"phi", c.phi.matrix()}, {"E", c.E.matrix()}}, {}, {}};
}

Certificate to_certificate(const GaloisExtension& g, const StrongCertificate& c) {
  return Certificate{"strong",
                     true,
                     {{"phi", c.split.phi.matrix()}, {"E", c.split.E.matrix()}},
                     {{"u", g.AtensBA.section().apply(c.sep.u)}},
                     c.tau};
}

Certificate to_certificate(const Coextension& x, const CoseparabilityCertificate& c) {
  const LinMap full = c.upsilon.reshaped(x.CcotBC.coordinate_shape(), TensorShape{}) * x.CcotBC.retraction();
  return Certificate{"coseparability", true, {{"upsilon", full.matrix()}}, {}, {}};
}

CheckReport verify_certificate(const Document& d) {
  const Certificate& c = need(d.certificate, "certificate");
  if (const auto kind = witness_kind(c.kind)) {
    const Entwining e = document_entwining(d);
    const LinMap v = shaped(need_map(c, "value"), witness_domain(*kind, e), witness_codomain(*kind, e), "value");
    return verify_witness(Witness{*kind, v, c.normalized}, e);
  }
  if (c.kind == "lambda" || c.kind == "frakz") {
    const EntwiningMorphism mor = document_morphism(d);
    const bool lambda = c.kind == "lambda";
    const LinearSystem sys = lambda ? lambda_system(mor, c.normalized) : frakz_system(mor, c.normalized);
    const auto& x = sys.unknowns()[0];
    const LinMap v = shaped(need_map(c, "value"), x.domain, x.codomain, "value");
    return verify_morphism_witness(
        MorphismWitness{lambda ? MorphismWitness::Side::Lambda : MorphismWitness::Side::FrakZ, mor, v, c.normalized});
  }
  if (c.kind == "separability") {
    const GaloisExtension g = document_extension(d);
    return verify_separability_idempotent(g, need_u(g, c));
  }
  if (c.kind == "split" || c.kind == "strong") {
    const GaloisExtension g = document_extension(d);
    const SplitCertificate s{shaped(need_map(c, "phi"), g.coalg.shape(), g.alg.shape(), "phi"),
                             shaped(need_map(c, "E"), g.alg.shape(), g.alg.shape(), "E")};
    CheckReport r = verify_split(g, s);
    if (c.kind == "split") return r;
    const Vector u = need_u(g, c);
    r.merge(verify_separability_idempotent(g, u));
    if (!c.tau) throw InputError("certificate.tau is missing");
    const std::optional<Scalar> tau = strong_tau(g, u, s.E, &r);
    if (tau && !(*tau == *c.tau))
      r.fail("τ", {}, "recorded τ = " + c.tau->str() + ", computed " + tau->str());
    else if (!tau)
      r.fail("τ", {}, "no nonzero τ for these u and E");
    return r;
  }
  if (c.kind == "coseparability") {
    const Coextension x = document_coextension(d);
    const std::size_t dc = x.coalg.dim();
    const LinMap full = shaped(need_map(c, "upsilon"), TensorShape{dc, dc}, TensorShape{}, "upsilon");
    return verify_coseparability(x, full * x.CcotBC.inclusion());
  }
  throw InputError("certificate.kind: unknown kind '" + c.kind + "'");
}

}  // namespace entwine

#include "entwine/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "entwine/errors.hpp"

namespace entwine {

namespace {

using Entries = std::vector<std::pair<std::size_t, Scalar>>;

// Matrix of a map given by the image of each domain basis vector.
LinMap table(FieldSpec k, TensorShape dom, TensorShape cod,
             const std::function<Entries(std::size_t)>& image) {
  Matrix m(k, cod.total(), dom.total());
  for (std::size_t c = 0; c < dom.total(); ++c)
    for (const auto& [r, v] : image(c)) m(r, c) += v;
  return LinMap(std::move(dom), std::move(cod), std::move(m));
}

void require(const CheckReport& r, const std::string& what) {
  if (!r.passed()) throw InconsistencyError(what + ":\n" + r.str());
}

std::size_t parse_size(const std::map<std::string, std::string>& params, const std::string& key,
                       std::size_t fallback) {
  const auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
  if (ec != std::errc() || ptr != it->second.data() + it->second.size())
    throw InputError("parameter " + key + " must be a non-negative integer, got '" + it->second + "'");
  return v;
}

FieldSpec parse_field(const std::map<std::string, std::string>& params) {
  const auto it = params.find("field");
  if (it == params.end() || it->second == "Q") return FieldSpec::rationals();
  std::uint64_t p = 0;
  const auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), p);
  if (ec != std::errc() || ptr != it->second.data() + it->second.size())
    throw InputError("field must be Q or a prime, got '" + it->second + "'");
  return FieldSpec::prime(p);
}

}  // namespace

CheckReport verify_hopf(const HopfAlgebra& h) {
  CheckReport r;
  r.merge(verify_algebra(h.alg));
  r.merge(verify_coalgebra(h.coalg));
  const Algebra hh = tensor_algebra(h.alg, h.alg);
  r.expect_equal("Δ multiplicative", h.coalg.comult * h.alg.mult,
                 hh.mult * kron(h.coalg.comult, h.coalg.comult));
  r.expect_equal("Δ unital", h.coalg.comult * h.alg.unit_map(), hh.unit_map());
  r.expect_equal("ε multiplicative", h.coalg.counit_map() * h.alg.mult,
                 kron(h.coalg.counit_map(), h.coalg.counit_map()));
  r.expect_equal("ε unital", h.coalg.counit_map() * h.alg.unit_map(),
                 LinMap::identity(h.field(), TensorShape{}));
  const LinMap one_eps = h.alg.unit_map() * h.coalg.counit_map();
  r.expect_equal("left antipode", h.alg.mult * kron(h.antipode, h.alg.id()) * h.coalg.comult, one_eps);
  r.expect_equal("right antipode", h.alg.mult * kron(h.alg.id(), h.antipode) * h.coalg.comult, one_eps);
  return r;
}

HopfAlgebra group_hopf(FieldSpec k, std::size_t n) {
  if (n == 0) throw InputError("group order must be at least 1");
  const TensorShape s{n};
  const LinMap mult = table(k, s * s, s, [&](std::size_t c) {
    return Entries{{(c / n + c % n) % n, k.one()}};
  });
  const LinMap comult = table(k, s, s * s, [&](std::size_t c) { return Entries{{c * n + c, k.one()}}; });
  const LinMap anti = table(k, s, s, [&](std::size_t c) { return Entries{{(n - c) % n, k.one()}}; });
  Vector unit = unit_vector(k, n, 0);
  HopfAlgebra h{make_algebra(mult, unit), make_coalgebra(comult, Vector(n, k.one())), anti};
  require(verify_hopf(h), "k[C_n]");
  return h;
}

HopfAlgebra function_hopf(FieldSpec k, std::size_t n) {
  const HopfAlgebra g = group_hopf(k, n);
  HopfAlgebra h{dual_swap(g.coalg), dual_swap(g.alg), g.antipode.transpose()};
  require(verify_hopf(h), "k^{C_n}");
  return h;
}

HopfAlgebra sweedler_hopf(FieldSpec k) {
  if (k.characteristic() == 2) throw InputError("Sweedler's algebra needs characteristic other than 2");
  // Basis index a + 2b for g^a x^b.
  const TensorShape s{4};
  const LinMap mult = table(k, s * s, s, [&](std::size_t c) {
    const std::size_t u = c / 4, v = c % 4;
    const std::size_t a = u % 2, b = u / 2, cc = v % 2, d = v / 2;
    if (b + d >= 2) return Entries{};
    const Scalar sign = (b * cc) % 2 ? -k.one() : k.one();
    return Entries{{(a + cc) % 2 + 2 * (b + d), sign}};
  });
  Algebra alg = make_algebra(mult, unit_vector(k, 4, 0));
  const Algebra hh = tensor_algebra(alg, alg);
  // Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, extended multiplicatively.
  Vector dg = zero_vector(k, 16), dx = zero_vector(k, 16);
  dg[1 * 4 + 1] = k.one();
  dx[2 * 4 + 0] = k.one();
  dx[1 * 4 + 2] = k.one();
  const std::vector<Vector> images{hh.unit, dg, dx, hh.multiply(dg, dx)};
  const LinMap comult = table(k, s, s * s, [&](std::size_t c) {
    Entries out;
    for (std::size_t r = 0; r < 16; ++r)
      if (!images[c][r].is_zero()) out.emplace_back(r, images[c][r]);
    return out;
  });
  // S(g) = g, S(x) = -gx, S(gx) = x.
  const LinMap anti = table(k, s, s, [&](std::size_t c) {
    switch (c) {
      case 0: return Entries{{0, k.one()}};
      case 1: return Entries{{1, k.one()}};
      case 2: return Entries{{3, -k.one()}};
      default: return Entries{{2, k.one()}};
    }
  });
  Vector eps{k.one(), k.one(), k.zero(), k.zero()};
  HopfAlgebra h{std::move(alg), make_coalgebra(comult, std::move(eps)), anti};
  require(verify_hopf(h), "Sweedler's algebra");
  return h;
}

Algebra group_algebra(FieldSpec k, std::size_t n) { return group_hopf(k, n).alg; }

Coalgebra group_function_coalgebra(FieldSpec k, std::size_t n) { return function_hopf(k, n).coalg; }

GaloisExtension hopf_self_galois(const HopfAlgebra& h) {
  return build_galois(h.alg, h.coalg, h.coalg.comult);
}

QuotientGalois hopf_quotient_galois(FieldSpec k, std::size_t n, std::size_t d) {
  if (d == 0 || n % d != 0) throw InputError("d must divide the group order");
  const HopfAlgebra h = group_hopf(k, n);
  const HopfAlgebra q = group_hopf(k, d);
  const TensorShape sa{n}, sc{d};
  const LinMap rho = table(k, sa, sa * sc, [&](std::size_t i) { return Entries{{i * d + i % d, k.one()}}; });
  const LinMap act = table(k, sc * sa, sc, [&](std::size_t c) {
    return Entries{{(c / n + c % n) % d, k.one()}};
  });
  GaloisExtension ext = build_galois(h.alg, q.coalg, rho);
  // The fixed part must be k[<g^d>].
  std::vector<Vector> sub;
  for (std::size_t i = 0; i < n; i += d) sub.push_back(unit_vector(k, n, i));
  if (!(ext.B == Subspace::span(k, sa, sub)))
    throw InconsistencyError("fixed subalgebra differs from k[<g^d>]");
  return QuotientGalois{std::move(ext), act, h.coalg.counit};
}

ComoduleAlgebra comodule_algebra_entwining(FieldSpec k, std::size_t m, std::size_t n, std::size_t e) {
  if (m == 0 || n == 0) throw InputError("group orders must be at least 1");
  if ((e * m) % n != 0) throw InputError("g |-> h^e is a grading only if n divides e*m");
  const HopfAlgebra a = group_hopf(k, m);
  const HopfAlgebra c = group_hopf(k, n);
  const TensorShape sa{m}, sc{n};
  const LinMap rho = table(k, sa, sa * sc, [&](std::size_t i) { return Entries{{i * n + (e * i) % n, k.one()}}; });
  const LinMap psi = table(k, sc * sa, sa * sc, [&](std::size_t col) {
    const std::size_t j = col / m, i = col % m;
    return Entries{{i * n + (j + e * i) % n, k.one()}};
  });
  Entwining ent = make_entwining(a.alg, c.coalg, psi);
  require(verify_right_comodule(c.coalg, rho), "grading coaction");
  return ComoduleAlgebra{std::move(ent), rho, c.alg.unit};
}

Coextension self_coextension(const HopfAlgebra& h, const std::optional<Vector>& character) {
  const FieldSpec k = h.field();
  LinMap act = h.alg.mult;
  if (character) {
    const LinMap chi = LinMap::from_covector(h.alg.shape(), *character);
    require(verify_algebra_map(chi.reshaped(h.alg.shape(), TensorShape{1}), h.alg, ground_algebra(k)),
            "character");
    act = h.alg.mult * kron(h.alg.id(), kron(chi, h.alg.id()) * h.coalg.comult);
  }
  return build_coextension(h.coalg, h.alg, act);
}

Vector sign_character(FieldSpec k, std::size_t n) {
  if (n % 2 != 0) throw InputError("the sign character needs an even group order");
  Vector chi(n, k.one());
  for (std::size_t i = 1; i < n; i += 2) chi[i] = -k.one();
  return chi;
}

Entwining trivial_entwining(const Algebra& a, const Coalgebra& c) { return twist_entwining(a, c); }

Entwining flip_entwining(const Entwining& e) {
  return make_entwining(dual_swap(e.coalg), dual_swap(e.alg),
                        e.psi.transpose().reshaped(e.a() * e.c(), e.c() * e.a()));
}

std::vector<std::string> catalog_names() {
  return {"group_algebra",    "group_function_coalgebra", "hopf_self_galois",
          "hopf_quotient_galois", "comodule_algebra_entwining", "self_coextension",
          "trivial_entwining", "flip_entwining",           "sweedler"};
}

CatalogEntry make_example(const std::string& name, const std::map<std::string, std::string>& params) {
  static const std::vector<std::string> known{"field", "n", "d", "m", "e", "twisted"};
  for (const auto& [key, value] : params)
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError("unknown parameter '" + key + "'");
  const FieldSpec k = parse_field(params);
  const std::size_t n = parse_size(params, "n", 2);
  if (n == 0) throw InputError("group order n must be at least 1");
  CatalogEntry entry{name, params, Document{}, {}};
  entry.payload.field = k;
  if (k.characteristic() != 0 && n % k.characteristic() == 0)
    entry.warnings.push_back("characteristic " + std::to_string(k.characteristic()) +
                             " divides the group order " + std::to_string(n));
  Document& doc = entry.payload;

  auto put_galois = [&](const GaloisExtension& g) {
    doc.algebra = g.alg;
    doc.coalgebra = g.coalg;
    doc.coactionA = g.rhoA;
    doc.psi = g.psi.psi;
  };

  if (name == "group_algebra" || name == "group_function_coalgebra") {
    const HopfAlgebra h = name == "group_algebra" ? group_hopf(k, n) : function_hopf(k, n);
    doc.algebra = h.alg;
    doc.coalgebra = h.coalg;
  } else if (name == "hopf_self_galois") {
    put_galois(hopf_self_galois(group_hopf(k, n)));
  } else if (name == "hopf_quotient_galois") {
    put_galois(hopf_quotient_galois(k, n, parse_size(params, "d", 1)).ext);
  } else if (name == "comodule_algebra_entwining") {
    const std::size_t m = parse_size(params, "m", n);
    const ComoduleAlgebra c = comodule_algebra_entwining(k, m, n, parse_size(params, "e", 1));
    doc.algebra = c.ent.alg;
    doc.coalgebra = c.ent.coalg;
    doc.psi = c.ent.psi;
    doc.coactionA = c.rhoA;
  } else if (name == "self_coextension") {
    const bool twisted = parse_size(params, "twisted", 0) != 0;
    const Coextension x = self_coextension(group_hopf(k, n),
                                           twisted ? std::optional<Vector>(sign_character(k, n))
                                                   : std::nullopt);
    doc.algebra = x.alg;
    doc.coalgebra = x.coalg;
    doc.actionC = x.rhoC;
    doc.psi = x.psi.psi;
  } else if (name == "trivial_entwining") {
    const Entwining e = trivial_entwining(group_algebra(k, n), group_hopf(k, n).coalg);
    doc.algebra = e.alg;
    doc.coalgebra = e.coalg;
    doc.psi = e.psi;
  } else if (name == "flip_entwining") {
    const Entwining e = flip_entwining(hopf_self_galois(group_hopf(k, n)).psi);
    doc.algebra = e.alg;
    doc.coalgebra = e.coalg;
    doc.psi = e.psi;
  } else if (name == "sweedler") {
    put_galois(hopf_self_galois(sweedler_hopf(k)));
  } else {
    throw InputError("unknown catalog entry '" + name + "'");
  }
  return entry;
}

std::vector<NamedEntwining> catalog_entwinings(FieldSpec k, bool include_sweedler) {
  std::vector<NamedEntwining> out;
  const HopfAlgebra c2 = group_hopf(k, 2);
  const HopfAlgebra c3 = group_hopf(k, 3);
  out.push_back({"hopf_self_galois(2)", hopf_self_galois(c2).psi});
  out.push_back({"hopf_self_galois(3)", hopf_self_galois(c3).psi});
  out.push_back({"hopf_self_galois(k^C2)", hopf_self_galois(function_hopf(k, 2)).psi});
  out.push_back({"hopf_quotient_galois(4,2)", hopf_quotient_galois(k, 4, 2).ext.psi});
  out.push_back({"comodule_algebra_entwining(2,2,1)", comodule_algebra_entwining(k, 2, 2, 1).ent});
  out.push_back({"comodule_algebra_entwining(4,2,1)", comodule_algebra_entwining(k, 4, 2, 1).ent});
  out.push_back({"self_coextension(2)", self_coextension(c2).psi});
  out.push_back({"self_coextension(2,twisted)", self_coextension(c2, sign_character(k, 2)).psi});
  out.push_back({"self_coextension(k^C2)", self_coextension(function_hopf(k, 2)).psi});
  out.push_back({"trivial_entwining(2,2)", trivial_entwining(c2.alg, c2.coalg)});
  out.push_back({"trivial_entwining(k,3)", trivial_entwining(ground_algebra(k), c3.coalg)});
  out.push_back({"flip_entwining(2)", flip_entwining(hopf_self_galois(c2).psi)});
  if (include_sweedler && k.characteristic() != 2)
    out.push_back({"sweedler", hopf_self_galois(sweedler_hopf(k)).psi});
  return out;
}

}  // namespace entwine

#include "entwine/entwining.hpp"

#include "entwine/errors.hpp"

namespace entwine {

namespace {

LinMap shaped_psi(const Algebra& a, const Coalgebra& c, const LinMap& psi) {
  if (psi.domain().total() != c.dim() * a.dim() || psi.codomain().total() != a.dim() * c.dim())
    throw InputError("psi must be a map [" + std::to_string(c.dim()) + "," +
                     std::to_string(a.dim()) + "] -> [" + std::to_string(a.dim()) + "," +
                     std::to_string(c.dim()) + "]");
  if (!(a.field() == c.field()) || !(psi.field() == a.field()))
    throw InputError("algebra, coalgebra and psi use different fields");
  return psi.reshaped(c.shape() * a.shape(), a.shape() * c.shape());
}

}  // namespace

CheckReport verify_entwining(const Entwining& e) {
  const LinMap psi = shaped_psi(e.alg, e.coalg, e.psi);
  const LinMap ia = e.alg.id(), ic = e.coalg.id();
  CheckReport r;
  r.expect_equal("psi multiplicative", psi * kron(ic, e.alg.mult),
                 kron(e.alg.mult, ic) * kron(ia, psi) * kron(psi, ia));
  r.expect_equal("psi unital", psi * kron(ic, e.alg.unit_map()), kron(e.alg.unit_map(), ic));
  r.expect_equal("psi comultiplicative", kron(ia, e.coalg.comult) * psi,
                 kron(psi, ic) * kron(ic, psi) * kron(e.coalg.comult, ia));
  r.expect_equal("psi counital", kron(ia, e.coalg.counit_map()) * psi,
                 kron(e.coalg.counit_map(), ia));
  return r;
}

Entwining trusted_entwining(Algebra a, Coalgebra c, const LinMap& psi) {
  LinMap p = shaped_psi(a, c, psi);
  return Entwining{std::move(a), std::move(c), std::move(p)};
}

Entwining make_entwining(Algebra a, Coalgebra c, const LinMap& psi) {
  CheckReport r;
  r.merge(verify_algebra(a), "algebra: ");
  r.merge(verify_coalgebra(c), "coalgebra: ");
  Entwining e = trusted_entwining(std::move(a), std::move(c), psi);
  r.merge(verify_entwining(e));
  if (!r.passed()) throw DomainError("not an entwining structure:\n" + r.str());
  return e;
}

Entwining twist_entwining(Algebra a, Coalgebra c) {
  const LinMap t = LinMap::twist(a.field(), c.shape(), a.shape());
  return make_entwining(std::move(a), std::move(c), t);
}

CheckReport verify_morphism(const EntwiningMorphism& m) {
  CheckReport r;
  r.merge(verify_algebra_map(m.f, m.src.alg, m.dst.alg), "f: ");
  r.merge(verify_coalgebra_map(m.g, m.src.coalg, m.dst.coalg), "g: ");
  const LinMap f = m.f.reshaped(m.src.a(), m.dst.a());
  const LinMap g = m.g.reshaped(m.src.c(), m.dst.c());
  r.expect_equal("intertwining", kron(f, g) * m.src.psi, m.dst.psi * kron(g, f));
  return r;
}

EntwiningMorphism identity_morphism(const Entwining& e) {
  return EntwiningMorphism{e, e, e.alg.id(), e.coalg.id()};
}

EntwiningMorphism counit_morphism(const Entwining& e) {
  Entwining dst = twist_entwining(e.alg, ground_coalgebra(e.field()));
  return EntwiningMorphism{e, std::move(dst), e.alg.id(),
                           e.coalg.counit_map().reshaped(e.c(), TensorShape{1})};
}

EntwiningMorphism unit_morphism(const Entwining& e) {
  Entwining src = twist_entwining(ground_algebra(e.field()), e.coalg);
  return EntwiningMorphism{std::move(src), e, e.alg.unit_map().reshaped(TensorShape{1}, e.a()),
                           e.coalg.id()};
}

Entwining tensor_entwining(const Entwining& e1, const Entwining& e2) {
  if (!(e1.field() == e2.field())) throw InputError("tensor product of entwinings over different fields");
  const FieldSpec k = e1.field();
  const LinMap in = kron({e1.coalg.id(), LinMap::twist(k, e2.c(), e1.a()), e2.alg.id()});
  const LinMap out = kron({e1.alg.id(), LinMap::twist(k, e1.c(), e2.a()), e2.coalg.id()});
  const LinMap psi = out * kron(e1.psi, e2.psi) * in;
  return make_entwining(tensor_algebra(e1.alg, e2.alg), tensor_coalgebra(e1.coalg, e2.coalg), psi);
}

}  // namespace entwine

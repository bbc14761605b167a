#include "entwine/entmod.hpp"

#include "entwine/equation.hpp"
#include "entwine/errors.hpp"

namespace entwine {

namespace {

LinMap id(FieldSpec k, std::size_t n) { return LinMap::identity(k, TensorShape{n}); }

bool same_entwining(const Entwining& a, const Entwining& b) {
  return a.alg.mult == b.alg.mult && a.alg.unit == b.alg.unit && a.coalg.comult == b.coalg.comult &&
         a.coalg.counit == b.coalg.counit && a.psi == b.psi;
}

LinearSystem hom_system(const EntwinedModule& m, const EntwinedModule& n) {
  const FieldSpec k = m.field();
  const std::size_t da = m.ent.alg.dim(), dc = m.ent.coalg.dim();
  LinearSystem sys(k, {{"phi", m.shape(), n.shape()}});
  sys.add("A-linear", {term(0, n.id(), 1, 1, m.action),
                       term(0, n.action, 1, da, kron(m.id(), id(k, da)), -1)});
  sys.add("C-colinear", {term(0, n.coaction, 1, 1, m.id()),
                         term(0, kron(n.id(), id(k, dc)), 1, dc, m.coaction, -1)});
  return sys;
}

}  // namespace

EntwinedModule make_entwined_module(const Entwining& e, const LinMap& action, const LinMap& coaction) {
  const std::size_t m = action.codomain().total();
  const std::size_t da = e.alg.dim(), dc = e.coalg.dim();
  if (action.domain().total() != m * da)
    throw InputError("module action must be a map [" + std::to_string(m) + "," +
                     std::to_string(da) + "] -> [" + std::to_string(m) + "]");
  if (coaction.domain().total() != m || coaction.codomain().total() != m * dc)
    throw InputError("module coaction must be a map [" + std::to_string(m) + "] -> [" +
                     std::to_string(m) + "," + std::to_string(dc) + "]");
  return EntwinedModule{e, action.reshaped(TensorShape{m, da}, TensorShape{m}),
                        coaction.reshaped(TensorShape{m}, TensorShape{m, dc})};
}

CheckReport verify_entwined_module(const EntwinedModule& m) {
  CheckReport r;
  r.merge(verify_right_module(m.ent.alg, m.action), "");
  r.merge(verify_right_comodule(m.ent.coalg, m.coaction), "");
  const LinMap ia = m.ent.alg.id();
  r.expect_equal("compatibility", m.coaction * m.action,
                 kron(m.action, m.ent.coalg.id()) * kron(m.id(), m.ent.psi) * kron(m.coaction, ia));
  return r;
}

EntwinedModule regular_module(const Entwining& e, const LinMap& rhoA) {
  return make_entwined_module(e, e.alg.mult, rhoA);
}

EntwinedModule coregular_module(const Entwining& e, const LinMap& rhoC) {
  return make_entwined_module(e, rhoC, e.coalg.comult);
}

EntwinedModule standard_module(StandardKind kind, const LinMap& base, const Entwining& e) {
  const FieldSpec k = e.field();
  const std::size_t da = e.alg.dim(), dc = e.coalg.dim();
  if (kind == StandardKind::ModTensorC) {
    const CheckReport r = verify_right_module(e.alg, base);
    if (!r.passed()) throw DomainError("base is not a right module:\n" + r.str());
    const std::size_t m = base.codomain().total();
    const LinMap act = base.reshaped(TensorShape{m, da}, TensorShape{m});
    const LinMap action = kron(act, e.coalg.id()) * kron(id(k, m), e.psi);
    const LinMap coaction = kron(id(k, m), e.coalg.comult);
    return make_entwined_module(e, action, coaction);
  }
  const CheckReport r = verify_right_comodule(e.coalg, base);
  if (!r.passed()) throw DomainError("base is not a right comodule:\n" + r.str());
  const std::size_t v = base.domain().total();
  const LinMap co = base.reshaped(TensorShape{v}, TensorShape{v, dc});
  const LinMap action = kron(id(k, v), e.alg.mult);
  const LinMap coaction = kron(id(k, v), e.psi) * kron(co, e.alg.id());
  return make_entwined_module(e, action, coaction);
}

Subspace cotensor(const LinMap& right_coaction, const LinMap& left_coaction) {
  const FieldSpec k = right_coaction.field();
  const std::size_t v = right_coaction.domain().total();
  const std::size_t w = left_coaction.domain().total();
  const std::size_t c = v ? right_coaction.codomain().total() / v
                          : (w ? left_coaction.codomain().total() / w : 0);
  if (right_coaction.codomain().total() != v * c || left_coaction.codomain().total() != c * w)
    throw InputError("cotensor: coactions over coalgebras of different dimension");
  const LinMap eq = kron(right_coaction.reshaped(TensorShape{v}, TensorShape{v, c}), id(k, w)) -
                    kron(id(k, v), left_coaction.reshaped(TensorShape{w}, TensorShape{c, w}));
  return kernel_image(eq.reshaped(TensorShape{v, w}, TensorShape{v, c, w})).first;
}

QuotientModule tensor_over_A(const LinMap& right_action, const LinMap& left_action) {
  const FieldSpec k = right_action.field();
  const std::size_t m = right_action.codomain().total();
  const std::size_t n = left_action.codomain().total();
  const std::size_t a = m ? right_action.domain().total() / m
                          : (n ? left_action.domain().total() / n : 0);
  if (right_action.domain().total() != m * a || left_action.domain().total() != a * n)
    throw InputError("tensor over A: actions of algebras of different dimension");
  const LinMap eq = kron(right_action, id(k, n)) - kron(id(k, m), left_action);
  return Quotient(kernel_image(eq.reshaped(TensorShape{m, a, n}, TensorShape{m, n})).second);
}

InducedModule induce(const EntwiningMorphism& mor, const EntwinedModule& m) {
  if (!same_entwining(m.ent, mor.src)) throw InputError("induction needs a module over the source entwining");
  const FieldSpec k = m.field();
  const Entwining& t = mor.dst;
  const std::size_t dat = t.alg.dim(), dct = t.coalg.dim();
  const LinMap left = t.alg.mult * kron(mor.f, t.alg.id());
  QuotientModule q = tensor_over_A(m.action, left);
  const LinMap& pi = q.projection();

  const LinMap act = pi * kron(m.id(), t.alg.mult);
  const LinMap action = descend(act, q, 1, dat, "induced action");
  const LinMap co = kron(pi, id(k, dct)) * kron(m.id(), t.psi) *
                    kron({m.id(), mor.g, t.alg.id()}) * kron(m.coaction, t.alg.id());
  const LinMap coaction = descend(co, q, 1, 1, "induced coaction");
  return InducedModule{make_entwined_module(t, action, coaction), std::move(q)};
}

CoinducedModule coinduce(const EntwiningMorphism& mor, const EntwinedModule& mt) {
  if (!same_entwining(mt.ent, mor.dst)) throw InputError("coinduction needs a module over the target entwining");
  const FieldSpec k = mt.field();
  const Entwining& s = mor.src;
  const std::size_t dm = mt.dim(), da = s.alg.dim(), dc = s.coalg.dim();
  const LinMap left = kron(mor.g, s.coalg.id()) * s.coalg.comult;
  Subspace space = cotensor(mt.coaction, left);
  const LinMap inc = space.inclusion();

  const LinMap act = kron(mt.action, s.coalg.id()) * kron({id(k, dm), mor.f, s.coalg.id()}) *
                     kron(id(k, dm), s.psi);
  const LinMap action = corestrict(act * kron(inc, id(k, da)), space, "coinduced action");
  const LinMap co = kron(id(k, dm), s.coalg.comult) * inc;
  const LinMap coaction = corestrict(co, space, 1, dc, "coinduced coaction");
  return CoinducedModule{make_entwined_module(s, action, coaction), std::move(space)};
}

EntwinedModule functor_apply(FunctorDirection dir, const EntwiningMorphism& mor,
                             const EntwinedModule& m) {
  if (dir == FunctorDirection::Induce) return induce(mor, m).module;
  return coinduce(mor, m).module;
}

LinMap induce_map(const InducedModule& from, const InducedModule& to, const LinMap& phi) {
  const FieldSpec k = phi.field();
  const std::size_t dat = from.module.ent.alg.dim();
  const LinMap f = to.quotient.projection() * kron(phi, id(k, dat));
  return descend(f, from.quotient, 1, 1, "induced map");
}

LinMap coinduce_map(const CoinducedModule& from, const CoinducedModule& to, const LinMap& phi) {
  const FieldSpec k = phi.field();
  const std::size_t dc = from.module.ent.coalg.dim();
  const LinMap f = kron(phi, id(k, dc)) * from.space.inclusion();
  return corestrict(f, to.space, "coinduced map");
}

UnitMap adjunction_unit(const EntwiningMorphism& mor, const EntwinedModule& m) {
  InducedModule fm = induce(mor, m);
  CoinducedModule gfm = coinduce(mor, fm.module);
  const LinMap one = mor.dst.alg.unit_map();
  const LinMap f = kron(fm.quotient.projection(), m.ent.coalg.id()) *
                   kron({m.id(), one, m.ent.coalg.id()}) * m.coaction;
  LinMap phi = corestrict(f, gfm.space, "adjunction unit");
  return UnitMap{std::move(fm), std::move(gfm), std::move(phi)};
}

CounitMap adjunction_counit(const EntwiningMorphism& mor, const EntwinedModule& mt) {
  CoinducedModule gm = coinduce(mor, mt);
  InducedModule fgm = induce(mor, gm.module);
  const LinMap at = mor.dst.alg.id();
  const LinMap f = mt.action * kron({mt.id(), mor.src.coalg.counit_map(), at}) *
                   kron(gm.space.inclusion(), at);
  LinMap psi = descend(f, fgm.quotient, 1, 1, "adjunction counit");
  return CounitMap{std::move(gm), std::move(fgm), std::move(psi)};
}

AdjunctionMaps adjunction_maps(const EntwiningMorphism& mor, const EntwinedModule& m,
                               const EntwinedModule& mt) {
  return AdjunctionMaps{adjunction_unit(mor, m), adjunction_counit(mor, mt)};
}

CheckReport verify_triangle_identities(const EntwiningMorphism& mor, const EntwinedModule& m,
                                       const EntwinedModule& mt) {
  CheckReport r;
  const UnitMap u = adjunction_unit(mor, m);
  const CounitMap c_fm = adjunction_counit(mor, u.fm.module);
  const LinMap f_phi = induce_map(u.fm, c_fm.fgm, u.phi);
  r.expect_equal("triangle F", c_fm.psi * f_phi, u.fm.module.id());

  const CounitMap c = adjunction_counit(mor, mt);
  const UnitMap u_gm = adjunction_unit(mor, c.gm.module);
  const LinMap g_psi = coinduce_map(u_gm.gfm, c.gm, c.psi);
  r.expect_equal("triangle G", g_psi * u_gm.phi, c.gm.module.id());
  return r;
}

Subspace fixed_part(const EntwinedModule& m, const LinMap& rhoA) {
  const FieldSpec k = m.field();
  const std::size_t dc = m.ent.coalg.dim();
  const LinMap t = m.coaction * m.action - kron(m.action, id(k, dc)) * kron(m.id(), rhoA);
  return kernel_image(curry_domain_tail(t.reshaped(m.shape() * m.ent.a(), t.codomain()), 1)).first;
}

Subspace hom_AC(const EntwinedModule& m, const EntwinedModule& n) {
  const AffineSolutionSet s = hom_system(m, n).solve();
  return Subspace::row_space(TensorShape{n.dim(), m.dim()}, s.homogeneous.basis());
}

CheckReport verify_entwined_morphism(const EntwinedModule& m, const EntwinedModule& n,
                                     const LinMap& phi) {
  return hom_system(m, n).check({phi});
}

}  // namespace entwine

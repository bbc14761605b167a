#include "entwine/witness.hpp"

#include "entwine/errors.hpp"

namespace entwine {

namespace {

LinMap id(FieldSpec k, std::size_t n) { return LinMap::identity(k, TensorShape{n}); }
LinMap one(FieldSpec k) { return LinMap::identity(k, TensorShape{}); }

TensorShape value_domain(WitnessKind kind, const Entwining& e) {
  switch (kind) {
    case WitnessKind::Integral: return TensorShape{};
    case WitnessKind::Cointegral: return e.c() * e.a();
    case WitnessKind::IntegralMap: return e.c() * e.c();
    case WitnessKind::CointegralMap: return e.c();
  }
  return {};
}

TensorShape value_codomain(WitnessKind kind, const Entwining& e) {
  switch (kind) {
    case WitnessKind::Integral: return e.a() * e.c();
    case WitnessKind::Cointegral: return TensorShape{};
    case WitnessKind::IntegralMap: return e.a();
    case WitnessKind::CointegralMap: return e.a() * e.a();
  }
  return {};
}

// Right coaction of C̃ on C⊗Ã: c⊗ã |-> c₁⊗ã_α⊗g(c₂)^α.
LinMap coaction_C_At(const EntwiningMorphism& mor) {
  const Entwining& s = mor.src;
  const Entwining& t = mor.dst;
  return kron(s.coalg.id(), t.psi) * kron({s.coalg.id(), mor.g, t.alg.id()}) *
         kron(s.coalg.comult, t.alg.id());
}

// Left coaction of C̃ on C: (g⊗C)Δ.
LinMap left_coaction_C(const EntwiningMorphism& mor) {
  return kron(mor.g, mor.src.coalg.id()) * mor.src.coalg.comult;
}

// C⊗A⊗Ã -> C⊗A⊗Ã⊗C̃, c⊗a⊗ã |-> c₁⊗a_α⊗ã_β⊗g(c₂^α)^β.
Subspace domain_D2(const EntwiningMorphism& mor) {
  const Entwining& s = mor.src;
  const Entwining& t = mor.dst;
  const LinMap ic = s.coalg.id(), ia = s.alg.id(), iat = t.alg.id();
  const LinMap rho = kron({ic, ia, t.psi}) * kron({ic, ia, mor.g, iat}) * kron({ic, s.psi, iat}) *
                     kron({s.coalg.comult, ia, iat});
  const Subspace d2 = cotensor(rho, left_coaction_C(mor));
  return Subspace::row_space(s.c() * s.a() * t.a() * s.c(), d2.basis());
}

// Right action of A on Ã⊗C: (ã⊗c)·a = ãf(a_α)⊗c^α.
LinMap action_At_C(const EntwiningMorphism& mor) {
  const Entwining& s = mor.src;
  const Entwining& t = mor.dst;
  return kron(t.alg.mult, s.coalg.id()) * kron({t.alg.id(), mor.f, s.coalg.id()}) *
         kron(t.alg.id(), s.psi);
}

// Left action of A on Ã: a·ã = f(a)ã.
LinMap left_action_At(const EntwiningMorphism& mor) {
  return mor.dst.alg.mult * kron(mor.f, mor.dst.alg.id());
}

// (Ã⊗C̃⊗C)⊗_AÃ with (ã⊗c̃⊗c)·a = ãf(a_α)_β⊗c̃^β⊗c^α.
QuotientModule codomain_Q3(const EntwiningMorphism& mor) {
  const Entwining& s = mor.src;
  const Entwining& t = mor.dst;
  const LinMap iat = t.alg.id(), ict = t.coalg.id(), ic = s.coalg.id();
  const LinMap act = kron({t.alg.mult, ict, ic}) * kron({iat, t.psi, ic}) *
                     kron({iat, ict, mor.f, ic}) * kron({iat, ict, s.psi});
  return tensor_over_A(act, left_action_At(mor));
}

void require(const CheckReport& r, const std::string& what) {
  if (!r.passed()) throw DomainError(what + ":\n" + r.str());
}

Witness checked(Witness w, const Entwining& e, const std::string& what) {
  const CheckReport r = verify_witness(w, e);
  if (!r.passed()) throw InconsistencyError(what + " fails:\n" + r.str());
  return w;
}

}  // namespace

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Integral: return "integral";
    case WitnessKind::Cointegral: return "cointegral";
    case WitnessKind::IntegralMap: return "integral-map";
    case WitnessKind::CointegralMap: return "cointegral-map";
  }
  return "?";
}

LinearSystem witness_system(WitnessKind kind, const Entwining& e, bool normalized) {
  const FieldSpec k = e.field();
  const std::size_t da = e.alg.dim(), dc = e.coalg.dim();
  const LinMap ia = e.alg.id(), ic = e.coalg.id();
  const LinMap& mu = e.alg.mult;
  const LinMap& delta = e.coalg.comult;
  const LinMap& psi = e.psi;
  const LinMap unit_eps = e.alg.unit_map() * e.coalg.counit_map();
  LinearSystem sys(k, {{to_string(kind), value_domain(kind, e), value_codomain(kind, e)}});

  switch (kind) {
    case WitnessKind::Integral:
      sys.add("integral", {term(0, kron(mu, ic), da, 1, ia),
                           term(0, kron(mu, ic) * kron(ia, psi), 1, da, ia, -1)});
      if (normalized)
        sys.add("normalisation", {term(0, kron(ia, e.coalg.counit_map()), 1, 1, one(k))},
                e.alg.unit_map());
      break;
    case WitnessKind::Cointegral:
      sys.add("cointegral", {term(0, ic, dc, 1, kron(delta, ia)),
                             term(0, ic, 1, dc, kron(ic, psi) * kron(delta, ia), -1)});
      if (normalized)
        sys.add("normalisation", {term(0, one(k), 1, 1, kron(ic, e.alg.unit_map()))},
                e.coalg.counit_map());
      break;
    case WitnessKind::IntegralMap:
      sys.add("int.i", {term(0, kron(ia, ic), 1, dc, kron(ic, delta)),
                        term(0, psi, dc, 1, kron(delta, ic), -1)});
      sys.add("int.ii", {term(0, mu, 1, da, kron({ic, ic, ia})),
                         term(0, mu, da, 1, kron(psi, ic) * kron(ic, psi), -1)});
      if (normalized) sys.add("normalisation", {term(0, ia, 1, 1, delta)}, unit_eps);
      break;
    case WitnessKind::CointegralMap:
      sys.add("coint.i", {term(0, kron(ia, mu), 1, da, kron(ic, ia)),
                          term(0, kron(mu, ia), da, 1, psi, -1)});
      sys.add("coint.ii", {term(0, kron({ia, ia, ic}), 1, dc, delta),
                           term(0, kron(ia, psi) * kron(psi, ia), dc, 1, delta, -1)});
      if (normalized) sys.add("normalisation", {term(0, mu, 1, 1, ic)}, unit_eps);
      break;
  }
  return sys;
}

AffineSolutionSet solve_witness(WitnessKind kind, const Entwining& e, bool normalized) {
  return witness_system(kind, e, normalized).solve();
}

LinMap witness_value(WitnessKind kind, const Entwining& e, const Vector& x) {
  return witness_system(kind, e, false).unpack(x).front();
}

CheckReport verify_witness(const Witness& w, const Entwining& e) {
  return witness_system(w.kind, e, w.normalized).check({w.value});
}

Subspace lambda_domain(const EntwiningMorphism& mor) {
  const Subspace d = cotensor(coaction_C_At(mor), left_coaction_C(mor));
  return Subspace::row_space(mor.src.c() * mor.dst.a() * mor.src.c(), d.basis());
}

QuotientModule frakz_codomain(const EntwiningMorphism& mor) {
  return tensor_over_A(action_At_C(mor), left_action_At(mor));
}

LinearSystem lambda_system(const EntwiningMorphism& mor, bool total) {
  const Entwining& s = mor.src;
  const Entwining& t = mor.dst;
  const FieldSpec k = s.field();
  const std::size_t da = s.alg.dim(), dc = s.coalg.dim();
  const LinMap ia = s.alg.id(), ic = s.coalg.id(), iat = t.alg.id();

  const Subspace d = lambda_domain(mor);
  const Subspace d2 = domain_D2(mor);
  const LinMap inc = d.inclusion(), inc2 = d2.inclusion();
  const std::size_t nd = d.dim();
  LinearSystem sys(k, {{"lambda", d.coordinate_shape(), s.a()}});

  const LinMap act = corestrict(kron({ic, t.alg.mult, ic}) * kron({ic, iat, mor.f, ic}) *
                                    kron({ic, iat, s.psi}) * kron(inc, ia),
                                d, "A-action on (C⊗Ã)□C");
  sys.add("A-linear", {term(0, ia, 1, 1, act), term(0, s.alg.mult, 1, da, id(k, nd * da), -1)});

  const LinMap t1 = corestrict(kron({s.psi, iat, ic}) * inc2, d, da, 1, "ψ⊗Ã⊗C on the int.a domain");
  const LinMap t2 = corestrict(kron({ic, t.alg.mult, ic}) * kron({ic, mor.f, iat, ic}) * inc2, d,
                               "C⊗μ̃(f⊗Ã)⊗C on the int.a domain");
  sys.add("int.a", {term(0, s.alg.mult, da, 1, t1), term(0, ia, 1, 1, t2, -1)});

  const LinMap s1 = corestrict(kron({ic, iat, s.coalg.comult}) * inc, d, 1, dc, "C⊗Ã⊗Δ on (C⊗Ã)□C");
  const LinMap s2 = corestrict(kron({s.coalg.comult, iat, ic}) * inc, d, dc, 1, "Δ⊗Ã⊗C on (C⊗Ã)□C");
  sys.add("int.b", {term(0, kron(ia, ic), 1, dc, s1), term(0, s.psi, dc, 1, s2, -1)});

  if (total) {
    const LinMap kc = corestrict(kron({ic, t.alg.unit_map(), ic}) * s.coalg.comult, d,
                                 "C⊗1⊗C on Δ(C)");
    sys.add("int.c", {term(0, ia, 1, 1, kc)}, s.alg.unit_map() * s.coalg.counit_map());
  }
  return sys;
}

LinearSystem frakz_system(const EntwiningMorphism& mor, bool total) {
  const Entwining& s = mor.src;
  const Entwining& t = mor.dst;
  const FieldSpec k = s.field();
  const std::size_t dat = t.alg.dim(), dct = t.coalg.dim();
  const LinMap ic = s.coalg.id(), iat = t.alg.id(), ict = t.coalg.id();

  const QuotientModule q = frakz_codomain(mor);
  const QuotientModule q3 = codomain_Q3(mor);
  const LinMap& pi = q.projection();
  const LinMap& pi3 = q3.projection();
  const std::size_t nq = q.dim();
  LinearSystem sys(k, {{"frakz", t.c(), TensorShape{nq}}});

  const LinMap rho = descend(kron(pi, ict) * kron({iat, ic, t.psi}) * kron({iat, ic, mor.g, iat}) *
                                 kron({iat, s.coalg.comult, iat}),
                             q, 1, 1, "C̃-coaction on (Ã⊗C)⊗_AÃ");
  sys.add("C̃-colinear", {term(0, rho, 1, 1, ict), term(0, id(k, nq * dct), 1, dct, t.coalg.comult, -1)});

  const LinMap top = descend(pi3 * kron({iat, mor.g, ic, iat}) * kron({iat, s.coalg.comult, iat}), q,
                             1, 1, "(Ã⊗g⊗C)(Ã⊗Δ)⊗_AÃ");
  const LinMap bottom = descend(pi3 * kron({t.psi, ic, iat}), q, dct, 1, "ψ̃⊗C⊗_AÃ");
  sys.add("coint.a", {term(0, top, 1, 1, ict), term(0, bottom, dct, 1, t.coalg.comult, -1)});

  const LinMap left = descend(pi * kron({t.alg.mult, ic, iat}), q, dat, 1, "(μ̃⊗C)⊗_AÃ");
  const LinMap right = descend(pi * kron({iat, ic, t.alg.mult}), q, 1, dat, "(Ã⊗C)⊗_Aμ̃");
  sys.add("coint.b", {term(0, left, dat, 1, t.psi), term(0, right, 1, dat, kron(ict, iat), -1)});

  if (total) {
    const LinMap n = descend(t.alg.mult * kron({iat, s.coalg.counit_map(), iat}), q, 1, 1,
                             "μ̃(Ã⊗ε⊗Ã)");
    sys.add("coint.c", {term(0, n, 1, 1, ict)}, t.alg.unit_map() * t.coalg.counit_map());
  }
  return sys;
}

AffineSolutionSet solve_total_integrability(const EntwiningMorphism& mor) {
  return lambda_system(mor, true).solve();
}

AffineSolutionSet solve_total_cointegrability(const EntwiningMorphism& mor) {
  return frakz_system(mor, true).solve();
}

CheckReport verify_morphism_witness(const MorphismWitness& w) {
  if (w.side == MorphismWitness::Side::Lambda) return lambda_system(w.mor, w.total).check({w.map});
  return frakz_system(w.mor, w.total).check({w.map});
}

LinMap gamma_from_lambda(const Entwining& e, const LinMap& lambda) {
  const Subspace d = lambda_domain(counit_morphism(e));
  const LinMap full = lambda.reshaped(d.coordinate_shape(), e.a()) * d.retraction();
  return full * kron({e.coalg.id(), e.alg.unit_map(), e.coalg.id()});
}

LinMap lambda_from_gamma(const Entwining& e, const LinMap& gamma) {
  const Subspace d = lambda_domain(counit_morphism(e));
  const LinMap g = gamma.reshaped(e.c() * e.c(), e.a());
  return e.alg.mult * kron(e.alg.id(), g) * kron(e.psi, e.coalg.id()) * d.inclusion();
}

LinMap nu_from_lambda(const MorphismWitness& lambda, const EntwinedModule& m) {
  if (lambda.side != MorphismWitness::Side::Lambda || !lambda.total)
    throw PreconditionError("ν needs a total λ");
  const CheckReport lr = verify_morphism_witness(lambda);
  if (!lr.passed()) throw PreconditionError("λ is not total:\n" + lr.str());
  const EntwiningMorphism& mor = lambda.mor;
  const Entwining& t = mor.dst;
  const FieldSpec k = m.field();
  const std::size_t dm = m.dim();
  const LinMap iat = t.alg.id(), ic = mor.src.coalg.id();

  const UnitMap u = adjunction_unit(mor, m);
  const Subspace& target = u.gfm.space;
  const LinMap& pi = u.fm.quotient.projection();

  const LinMap rho = kron(m.id(), t.psi) * kron({m.id(), mor.g, iat}) * kron(m.coaction, iat);
  const Subspace p = cotensor(rho, left_coaction_C(mor));
  const LinMap ip = p.inclusion();
  const LinMap h = corestrict(kron(pi, ic) * ip, target, "(M⊗Ã)□C -> (M⊗_AÃ)□C");

  const Subspace d = lambda_domain(mor);
  const LinMap into_d = corestrict(kron({m.coaction, iat, ic}) * ip, d, dm, 1, "ρ^M⊗Ã⊗C");
  const LinMap nu_tilde = m.action * kron(m.id(), lambda.map) * into_d;

  const auto [ker, img] = kernel_image(h);
  if (img.dim() != target.dim())
    throw InconsistencyError("(M⊗Ã)□C does not cover (M⊗_AÃ)□C");
  if (!(nu_tilde * ker.inclusion()).matrix().is_zero())
    throw InconsistencyError("ν̃ does not descend to (M⊗_AÃ)□C");

  Matrix l(k, p.dim(), target.dim());
  for (std::size_t j = 0; j < target.dim(); ++j) {
    const AffineSolutionSet s = solve_affine(h, unit_vector(k, target.dim(), j));
    for (std::size_t i = 0; i < p.dim(); ++i) l(i, j) = (*s.particular)[i];
  }
  const LinMap nu = nu_tilde * LinMap(target.coordinate_shape(), p.coordinate_shape(), std::move(l));

  CheckReport r;
  r.expect_equal("ν∘Φ = id", nu * u.phi, m.id());
  r.merge(verify_entwined_morphism(u.gfm.module, m, nu), "ν: ");
  if (!r.passed()) throw InconsistencyError("ν_M fails:\n" + r.str());
  return nu;
}

MorphismWitness lambda_from_nu(const LinMap& nu_on_AC, const EntwiningMorphism& mor) {
  const Entwining& s = mor.src;
  const EntwinedModule m = standard_module(StandardKind::ModTensorC, s.alg.mult, s);
  const UnitMap u = adjunction_unit(mor, m);
  const Subspace& target = u.gfm.space;
  const LinMap nu = nu_on_AC.reshaped(target.coordinate_shape(), m.shape());

  CheckReport r;
  r.expect_equal("ν∘Φ = id", nu * u.phi, m.id());
  r.merge(verify_entwined_morphism(u.gfm.module, m, nu), "ν: ");
  if (!r.passed()) throw InconsistencyError("ν is not a splitting of Φ_{A⊗C}:\n" + r.str());

  const Subspace d = lambda_domain(mor);
  const LinMap embed = corestrict(kron(u.fm.quotient.projection(), s.coalg.id()) *
                                      kron(s.alg.unit_map(), d.inclusion()),
                                  target, "1_A⊗(C⊗Ã)□C");
  const LinMap lambda = kron(s.alg.id(), s.coalg.counit_map()) * nu * embed;
  MorphismWitness w{MorphismWitness::Side::Lambda, mor,
                    lambda.reshaped(d.coordinate_shape(), s.a()), true};
  const CheckReport lr = verify_morphism_witness(w);
  if (!lr.passed()) throw InconsistencyError("λ extracted from ν fails:\n" + lr.str());
  return w;
}

Witness witness_from_structure(const InvariantElement& d) {
  const Entwining& e = d.ent;
  const FieldSpec k = e.field();
  const LinMap act = d.actionC.reshaped(e.c() * e.a(), e.c());
  const LinMap lam = LinMap::from_vector(e.c(), d.lambda);
  const LinMap eps_a = LinMap::from_covector(e.a(), d.epsA);
  CheckReport r;
  r.expect_equal("Λ·a = ε_A(a)Λ", act * kron(lam, e.alg.id()), lam * eps_a);
  r.expect_equal("ε_C(Λ) = 1", e.coalg.counit_map() * lam, one(k));
  require(r, "Λ is not an invariant element");
  return checked(Witness{WitnessKind::Integral, kron(e.alg.unit_map(), lam), true}, e, "1⊗Λ");
}

Witness witness_from_structure(const CasimirFunctional& d) {
  const Entwining& e = d.ent;
  const FieldSpec k = e.field();
  const LinMap rho = d.rhoA.reshaped(e.a(), e.a() * e.c());
  const LinMap kap = LinMap::from_covector(e.a(), d.kappa);
  CheckReport r;
  r.expect_equal("κ(1) = 1", kap * e.alg.unit_map(), one(k));
  r.expect_equal("1_Cκ(a) = κ(a₀)a₁", kron(kap, e.coalg.id()) * rho,
                 LinMap::from_vector(e.c(), d.oneC) * kap);
  require(r, "κ is not a Casimir functional");
  return checked(Witness{WitnessKind::Cointegral, kron(e.coalg.counit_map(), kap), true}, e, "ε⊗κ");
}

Witness witness_from_structure(const Cotranslation& d) {
  const LinMap gamma = cotranslation_map(d.coext);
  return checked(Witness{WitnessKind::IntegralMap, gamma, true}, d.coext.psi, "cotranslation map");
}

Witness witness_from_structure(const CanInvUnit& d) {
  const GaloisExtension& g = d.ext;
  if (g.B.dim() != 1)
    throw PreconditionError("can⁻¹∘(1⊗C) lands in A⊗A only for B = k, but dim B = " +
                            std::to_string(g.B.dim()));
  const LinMap zeta = g.AtensBA.section() * g.canInv * kron(g.alg.unit_map(), g.coalg.id());
  return checked(Witness{WitnessKind::CointegralMap,
                         zeta.reshaped(g.coalg.shape(), g.alg.shape() * g.alg.shape()), true},
                 g.psi, "can⁻¹∘(1⊗C)");
}

}  // namespace entwine

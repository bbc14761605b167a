#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/errors.hpp"
#include "helpers.hpp"

using namespace entwine;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const std::vector<WitnessKind> kKinds{WitnessKind::Integral, WitnessKind::Cointegral, WitnessKind::IntegralMap,
                                      WitnessKind::CointegralMap};

LinMap lambda_value(const EntwiningMorphism& mor, const Vector& x) {
  return lambda_system(mor, true).unpack(x).front();
}

}  // namespace

TEST_CASE("normalised integrals of k[C_n] agree with the oracle") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (std::size_t n : {2u, 3u}) {
      CAPTURE(k.name());
      CAPTURE(n);
      const Entwining e = hopf_self_galois(group_hopf(k, n)).psi;
      const AffineSolutionSet s = solve_witness(WitnessKind::Integral, e, true);
      const auto [a, b] = oracle::cyclic_integral_system(testing::oracle_field(k), n);
      const oracle::Solution o = oracle::solve(a, b, n * n);
      REQUIRE(s.feasible() == o.feasible);
      CHECK(s.homogeneous.dim() == o.nullity);
      if (!s.feasible()) continue;
      CHECK(oracle::satisfies(a, b, testing::to_oracle(*s.particular)));
      for (std::size_t i = 0; i < s.homogeneous.dim(); ++i)
        CHECK(oracle::satisfies(a, oracle::Row(b.size(), testing::oracle_field(k)(0)),
                                testing::to_oracle(s.homogeneous.basis_vector(i))));
    }
}

TEST_CASE("the normalised integral of Q[C_2] is 1/2(1⊗1 + 1⊗g)") {
  const Entwining e = hopf_self_galois(group_hopf(Q, 2)).psi;
  const AffineSolutionSet s = solve_witness(WitnessKind::Integral, e, true);
  REQUIRE(s.feasible());
  CHECK(s.homogeneous.dim() == 0);
  const Vector z = witness_value(WitnessKind::Integral, e, *s.particular).matrix().column_vector(0);
  const Scalar half = Q.from_fraction(1, 2);
  CHECK(z == Vector{half, half, Q.zero(), Q.zero()});
  CHECK(verify_witness(Witness{WitnessKind::Integral, LinMap::from_vector(TensorShape{2, 2}, z), true}, e).passed());
}

TEST_CASE("no normalised integral over F_2") {
  const Entwining e = hopf_self_galois(group_hopf(FieldSpec::prime(2), 2)).psi;
  CHECK_FALSE(solve_witness(WitnessKind::Integral, e, true).feasible());
  CHECK(solve_witness(WitnessKind::Integral, e, false).homogeneous.dim() == 2);
}

TEST_CASE("solution families are closed under their homogeneous directions") {
  for (const FieldSpec k : {Q, FieldSpec::prime(3)})
    for (const NamedEntwining& ne : catalog_entwinings(k))
      for (WitnessKind kind : kKinds)
        for (bool normalized : {false, true}) {
          CAPTURE(ne.name);
          CAPTURE(to_string(kind));
          const AffineSolutionSet s = solve_witness(kind, ne.ent, normalized);
          if (!s.feasible()) continue;
          const LinearSystem sys = witness_system(kind, ne.ent, normalized);
          CHECK(sys.check(*s.particular).passed());
          std::vector<Scalar> coeffs(s.homogeneous.dim(), k.zero());
          for (std::size_t i = 0; i < coeffs.size(); ++i) {
            coeffs.assign(coeffs.size(), k.zero());
            coeffs[i] = k.one();
            const Vector x = s.member(coeffs);
            CHECK(sys.check(x).passed());
            CHECK(verify_witness(Witness{kind, witness_value(kind, ne.ent, x), normalized}, ne.ent).passed());
          }
        }
}

TEST_CASE("wrong witnesses are rejected") {
  const Entwining e = hopf_self_galois(group_hopf(Q, 2)).psi;
  const LinMap zero = LinMap::zero(Q, TensorShape{}, TensorShape{2, 2});
  CHECK(verify_witness(Witness{WitnessKind::Integral, zero, false}, e).passed());
  CHECK(verify_witness(Witness{WitnessKind::Integral, zero, true}, e).failed("normalisation"));
  const LinMap one_one = LinMap::from_vector(TensorShape{2, 2}, kron(e.alg.basis(0), e.coalg.basis(0)));
  CHECK(verify_witness(Witness{WitnessKind::Integral, one_one, true}, e).failed("integral"));
}

TEST_CASE("functor-level and witness-level feasibility agree on the catalog") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const NamedEntwining& ne : catalog_entwinings(k, true)) {
      CAPTURE(k.name());
      CAPTURE(ne.name);
      const Entwining& e = ne.ent;
      CHECK(solve_total_cointegrability(counit_morphism(e)).feasible() ==
            solve_witness(WitnessKind::Integral, e, true).feasible());
      CHECK(solve_total_integrability(counit_morphism(e)).feasible() ==
            solve_witness(WitnessKind::IntegralMap, e, true).feasible());
      CHECK(solve_total_integrability(unit_morphism(e)).feasible() ==
            solve_witness(WitnessKind::Cointegral, e, true).feasible());
      CHECK(solve_total_cointegrability(unit_morphism(e)).feasible() ==
            solve_witness(WitnessKind::CointegralMap, e, true).feasible());
    }
}

TEST_CASE("λ and γ correspond bijectively") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const NamedEntwining& ne : catalog_entwinings(k, true)) {
      CAPTURE(k.name());
      CAPTURE(ne.name);
      const Entwining& e = ne.ent;
      const EntwiningMorphism mor = counit_morphism(e);
      const AffineSolutionSet ls = solve_total_integrability(mor);
      const AffineSolutionSet gs = solve_witness(WitnessKind::IntegralMap, e, true);
      REQUIRE(ls.feasible() == gs.feasible());
      if (!ls.feasible()) continue;
      CHECK(ls.homogeneous.dim() == gs.homogeneous.dim());

      const LinMap lambda = lambda_value(mor, *ls.particular);
      const LinMap gamma = gamma_from_lambda(e, lambda);
      CHECK(verify_witness(Witness{WitnessKind::IntegralMap, gamma, true}, e).passed());
      CHECK(lambda_from_gamma(e, gamma) == lambda);

      const LinMap g0 = witness_value(WitnessKind::IntegralMap, e, *gs.particular);
      const LinMap l0 = lambda_from_gamma(e, g0);
      CHECK(verify_morphism_witness(MorphismWitness{MorphismWitness::Side::Lambda, mor, l0, true}).passed());
      CHECK(gamma_from_lambda(e, l0).matrix() == g0.matrix());

      // Homogeneous directions map into homogeneous directions.
      const LinearSystem lsys = lambda_system(mor, true);
      for (std::size_t i = 0; i < ls.homogeneous.dim(); ++i) {
        const LinMap dl = lsys.unpack(ls.homogeneous.basis_vector(i)).front();
        const Vector dg = vec(gamma_from_lambda(e, dl));
        CHECK(gs.homogeneous.contains(dg));
      }
    }
}

TEST_CASE("ν from λ and back on Q[C_2]") {
  const Entwining e = hopf_self_galois(group_hopf(Q, 2)).psi;
  const EntwiningMorphism mor = counit_morphism(e);
  const AffineSolutionSet ls = solve_total_integrability(mor);
  REQUIRE(ls.feasible());
  const MorphismWitness lambda{MorphismWitness::Side::Lambda, mor, lambda_value(mor, *ls.particular), true};

  const EntwinedModule a = regular_module(e, e.coalg.comult);
  const EntwinedModule ac = standard_module(StandardKind::ModTensorC, e.alg.mult, e);
  for (const EntwinedModule& m : {a, ac}) {
    const LinMap nu = nu_from_lambda(lambda, m);
    const UnitMap u = adjunction_unit(mor, m);
    CHECK(nu * u.phi == m.id());
    CHECK(verify_entwined_morphism(u.gfm.module, m, nu).passed());
  }
  const MorphismWitness back = lambda_from_nu(nu_from_lambda(lambda, ac), mor);
  CHECK(back.map == lambda.map);

  // Naturality over every basis morphism A -> A⊗C.
  const Subspace hom = hom_AC(a, ac);
  REQUIRE(hom.dim() > 0);
  const UnitMap ua = adjunction_unit(mor, a), uac = adjunction_unit(mor, ac);
  const LinMap nu_a = nu_from_lambda(lambda, a), nu_ac = nu_from_lambda(lambda, ac);
  for (std::size_t i = 0; i < hom.dim(); ++i) {
    const LinMap phi = unvec(Q, a.shape(), ac.shape(), hom.basis_vector(i));
    const LinMap gf = coinduce_map(ua.gfm, uac.gfm, induce_map(ua.fm, uac.fm, phi));
    CHECK(nu_ac * gf == phi * nu_a);
  }
}

TEST_CASE("ν needs a total λ") {
  const Entwining e = hopf_self_galois(group_hopf(Q, 2)).psi;
  const EntwiningMorphism mor = counit_morphism(e);
  const LinearSystem sys = lambda_system(mor, false);
  const LinMap zero = sys.unpack(Vector(sys.variables(), Q.zero())).front();
  const MorphismWitness partial{MorphismWitness::Side::Lambda, mor, zero, false};
  CHECK_THROWS_AS(nu_from_lambda(partial, regular_module(e, e.coalg.comult)), PreconditionError);
}

TEST_CASE("morphism witnesses on the unit and counit morphisms") {
  const Entwining e = hopf_self_galois(group_hopf(Q, 2)).psi;
  CHECK(solve_total_integrability(counit_morphism(e)).homogeneous.dim() == 1);
  CHECK(solve_total_cointegrability(counit_morphism(e)).homogeneous.dim() == 0);
  CHECK(solve_total_integrability(unit_morphism(e)).homogeneous.dim() == 0);
  CHECK(solve_total_cointegrability(unit_morphism(e)).homogeneous.dim() == 1);
  const EntwiningMorphism mor = unit_morphism(e);
  const AffineSolutionSet zs = solve_total_cointegrability(mor);
  REQUIRE(zs.feasible());
  const LinMap z = frakz_system(mor, true).unpack(*zs.particular).front();
  CHECK(verify_morphism_witness(MorphismWitness{MorphismWitness::Side::FrakZ, mor, z, true}).passed());
}

TEST_CASE("an invariant element of C gives the integral 1⊗Λ") {
  // A = k[C_4], C = A/B⁺A = k[C_2], Λ = (h⁰ + h¹)/2.
  const QuotientGalois qg = hopf_quotient_galois(Q, 4, 2);
  const Scalar half = Q.from_fraction(1, 2);
  const Vector lambda{half, half};
  const Witness z = witness_from_structure(InvariantElement{qg.ext.psi, qg.actionC, qg.epsA, lambda});
  CHECK(z.kind == WitnessKind::Integral);
  CHECK(z.normalized);
  CHECK(z.value.matrix().column_vector(0) == kron(qg.ext.alg.unit, lambda));
  CHECK(verify_witness(z, qg.ext.psi).passed());
  CHECK_THROWS_AS(witness_from_structure(InvariantElement{qg.ext.psi, qg.actionC, qg.epsA, Vector{Q.one(), Q.zero()}}),
                  DomainError);
}

TEST_CASE("a Casimir functional gives the cointegral ε⊗κ") {
  // A = k[C_4] over C = k[C_2]: κ(g^i) = 1 for i = 0 and 0 otherwise.
  const ComoduleAlgebra ca = comodule_algebra_entwining(Q, 4, 2, 1);
  const Vector kappa{Q.one(), Q.zero(), Q.zero(), Q.zero()};
  const Witness y = witness_from_structure(CasimirFunctional{ca.ent, ca.rhoA, ca.oneC, kappa});
  CHECK(y.kind == WitnessKind::Cointegral);
  CHECK(verify_witness(y, ca.ent).passed());
  CHECK(y.value.matrix().row_vector(0) == kron(ca.ent.coalg.counit, kappa));
  const Vector bad{Q.one(), Q.one(), Q.zero(), Q.zero()};
  CHECK_THROWS_AS(witness_from_structure(CasimirFunctional{ca.ent, ca.rhoA, ca.oneC, bad}), DomainError);
}

TEST_CASE("cotranslation and can⁻¹ witnesses") {
  const Coextension x = self_coextension(group_hopf(Q, 2));
  const Witness gamma = witness_from_structure(Cotranslation{x});
  CHECK(gamma.kind == WitnessKind::IntegralMap);
  CHECK(gamma.normalized);
  CHECK(verify_witness(gamma, x.psi).passed());

  const GaloisExtension g = hopf_self_galois(group_hopf(Q, 2));
  const Witness zeta = witness_from_structure(CanInvUnit{g});
  CHECK(zeta.kind == WitnessKind::CointegralMap);
  CHECK(verify_witness(zeta, g.psi).passed());
  CHECK_THROWS_AS(witness_from_structure(CanInvUnit{hopf_quotient_galois(Q, 4, 2).ext}), PreconditionError);
}

TEST_CASE("normalised integral maps of Q[C_2] form a line") {
  // γ(g_i⊗g_j) = δ_ij·1 + (1 - δ_ij)·β·g. vec(γ)[x*4 + i*2 + j] is the
  // coefficient of g_x in γ(g_i⊗g_j).
  const Entwining e = hopf_self_galois(group_hopf(Q, 2)).psi;
  const AffineSolutionSet s = solve_witness(WitnessKind::IntegralMap, e, true);
  REQUIRE(s.feasible());
  REQUIRE(s.homogeneous.dim() == 1);
  const Vector& p = *s.particular;
  CHECK(p[0].is_one());
  CHECK(p[3].is_one());
  for (std::size_t i : {1u, 2u, 4u, 7u}) CHECK(p[i].is_zero());
  CHECK(p[5] == p[6]);
  const Vector h = s.homogeneous.basis_vector(0);
  for (std::size_t i : {0u, 1u, 2u, 3u, 4u, 7u}) CHECK(h[i].is_zero());
  CHECK(h[5] == h[6]);
  CHECK_FALSE(h[5].is_zero());
}

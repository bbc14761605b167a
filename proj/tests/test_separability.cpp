#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/errors.hpp"
#include "entwine/separability.hpp"
#include "helpers.hpp"

using namespace entwine;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<GaloisExtension> galois_battery(FieldSpec k) {
  std::vector<GaloisExtension> out{hopf_self_galois(group_hopf(k, 2)), hopf_self_galois(group_hopf(k, 3)),
                                   hopf_self_galois(function_hopf(k, 2)), hopf_quotient_galois(k, 4, 2).ext};
  if (k.characteristic() != 2) out.push_back(hopf_self_galois(sweedler_hopf(k)));
  return out;
}

}  // namespace

TEST_CASE("the separability idempotent of Q[C_2]") {
  const GaloisExtension g = hopf_self_galois(group_hopf(Q, 2));
  const auto cert = check_separable(g);
  REQUIRE(cert.has_value());
  const Scalar half = Q.from_fraction(1, 2);
  // u = (1⊗1 + g⊗g)/2
  CHECK(cert->representative == Vector{half, Q.zero(), Q.zero(), half});
  CHECK(verify_separability_idempotent(g, cert->u).passed());
  CHECK(cert->source.kind == WitnessKind::Integral);

  const Vector one_one = g.AtensBA.projection().apply(kron(g.alg.unit, g.alg.unit));
  CHECK(verify_separability_idempotent(g, one_one).failed("a·u = u·a"));
  CHECK_THROWS_AS(separability_from_integral(g, Witness{WitnessKind::Cointegral, LinMap::zero(Q, TensorShape{2, 2},
                                                                                             TensorShape{}), true}),
                  InputError);
}

TEST_CASE("separability is total cointegrability of the counit morphism") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const GaloisExtension& g : galois_battery(k)) {
      CAPTURE(k.name());
      const auto cert = check_separable(g);
      CHECK(cert.has_value() == solve_total_cointegrability(counit_morphism(g.psi)).feasible());
      if (cert) CHECK(verify_separability_idempotent(g, cert->u).passed());
    }
}

TEST_CASE("F_2[C_2] is split but not separable") {
  const GaloisExtension g = hopf_self_galois(group_hopf(FieldSpec::prime(2), 2));
  CHECK_FALSE(check_separable(g).has_value());
  const SplitResult s = check_split(g);
  REQUIRE(s.cert.has_value());
  CHECK(s.family.homogeneous.dim() == 1);
  CHECK(verify_split(g, *s.cert).passed());
  CHECK(s.faithfully_flat_flag);
  const StrongResult r = check_strongly_separable(g);
  CHECK_FALSE(r.cert.has_value());
}

TEST_CASE("splitting maps of k[C_n] agree with the oracle") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (std::size_t n : {2u, 3u}) {
      CAPTURE(k.name());
      CAPTURE(n);
      const GaloisExtension g = hopf_self_galois(group_hopf(k, n));
      const SplitResult s = check_split(g);
      const auto [a, b] = oracle::cyclic_split_system(testing::oracle_field(k), n);
      const oracle::Solution o = oracle::solve(a, b, n * n);
      REQUIRE(o.feasible);
      CHECK(o.nullity == n - 1);
      REQUIRE(s.family.feasible());
      CHECK(s.family.homogeneous.dim() == o.nullity);
      CHECK(oracle::satisfies(a, b, testing::to_oracle(*s.family.particular)));
      for (std::size_t i = 0; i < s.family.homogeneous.dim(); ++i)
        CHECK(oracle::satisfies(a, oracle::Row(b.size(), testing::oracle_field(k)(0)),
                                testing::to_oracle(s.family.homogeneous.basis_vector(i))));
    }
}

TEST_CASE("φ and E determine each other") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const GaloisExtension& g : galois_battery(k)) {
      const SplitResult s = check_split(g);
      if (!s.cert) continue;
      CHECK(verify_split(g, *s.cert).passed());
      CHECK(s.faithfully_flat_flag);
      const LinMap phi = phi_from_expectation(g, s.cert->E);
      CHECK(s.family.homogeneous.contains(vec(phi) - *s.family.particular));
      CHECK(phi == s.cert->phi);
      CHECK(expectation_from_phi(g, phi) == s.cert->E);
    }
}

TEST_CASE("a normalised integral map gives a splitting map") {
  for (const FieldSpec k : {Q, FieldSpec::prime(3)})
    for (const GaloisExtension& g : galois_battery(k)) {
      const AffineSolutionSet gs = solve_witness(WitnessKind::IntegralMap, g.psi, true);
      if (!gs.feasible()) continue;
      const Witness gamma{WitnessKind::IntegralMap, witness_value(WitnessKind::IntegralMap, g.psi, *gs.particular),
                          true};
      const SplitCertificate s = split_from_integral_map(g, gamma);
      CHECK(verify_split(g, s).passed());
    }
}

TEST_CASE("Q[C_2] is strongly separable with τ = 1/2") {
  const GaloisExtension g = hopf_self_galois(group_hopf(Q, 2));
  const StrongResult r = check_strongly_separable(g);
  REQUIRE(r.cert.has_value());
  CHECK(r.cert->tau == Q.from_fraction(1, 2));
  CHECK_FALSE(r.inconclusive);
  CHECK(r.free_over_B);
  const auto tau = strong_tau(g, r.cert->sep.u, r.cert->split.E);
  REQUIRE(tau.has_value());
  CHECK(*tau == r.cert->tau);
}

TEST_CASE("given witnesses are checked, not searched") {
  const GaloisExtension g = hopf_self_galois(group_hopf(Q, 2));
  const StrongResult found = check_strongly_separable(g);
  REQUIRE(found.cert.has_value());

  StrongOptions given;
  given.strategy = StrongStrategy::GivenWitnesses;
  given.u = found.cert->sep.u;
  given.E = found.cert->split.E;
  given.tau = found.cert->tau;
  const StrongResult r = check_strongly_separable(g, given);
  REQUIRE(r.cert.has_value());
  CHECK(r.cert->tau == found.cert->tau);

  given.tau = Q.one();
  CHECK_FALSE(check_strongly_separable(g, given).cert.has_value());
  given.tau.reset();
  CHECK(check_strongly_separable(g, given).cert.has_value());
  given.E.reset();
  CHECK_THROWS_AS(check_strongly_separable(g, given), InputError);
}

TEST_CASE("search over particular solutions agrees with the fixed strategy") {
  for (const GaloisExtension& g : galois_battery(Q)) {
    const StrongResult fixed = check_strongly_separable(g);
    StrongOptions opts;
    opts.strategy = StrongStrategy::SearchParticulars;
    const StrongResult search = check_strongly_separable(g, opts);
    CAPTURE(search.diagnostic);
    if (fixed.cert) CHECK((search.cert.has_value() || search.inconclusive));
    if (search.cert) {
      const auto tau = strong_tau(g, search.cert->sep.u, search.cert->split.E);
      REQUIRE(tau.has_value());
      CHECK(*tau == search.cert->tau);
    } else {
      CHECK((search.inconclusive || !check_separable(g)));
    }
  }
}

TEST_CASE("the grid search finds Q[C_2]") {
  StrongOptions opts;
  opts.strategy = StrongStrategy::SearchParticulars;
  const StrongResult r = check_strongly_separable(hopf_self_galois(group_hopf(Q, 2)), opts);
  REQUIRE(r.cert.has_value());
  CHECK(r.cert->tau == Q.from_fraction(1, 2));
}

TEST_CASE("freeness over B") {
  CHECK(heuristic_free_over_B(hopf_quotient_galois(Q, 4, 2).ext));
  CHECK(heuristic_free_over_B(hopf_self_galois(group_hopf(Q, 3))));
}

TEST_CASE("coseparable coextensions") {
  const Coextension x = self_coextension(group_hopf(Q, 2));
  const auto cert = check_coseparable(x);
  REQUIRE(cert.has_value());
  CHECK(verify_coseparability(x, cert->upsilon).passed());
  CHECK(cert->source.kind == WitnessKind::Cointegral);
  CHECK(cert->source.normalized);

  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (std::size_t n : {2u, 3u}) {
      const Coextension y = self_coextension(group_hopf(k, n));
      CHECK(check_coseparable(y).has_value() == solve_witness(WitnessKind::Cointegral, y.psi, true).feasible());
    }
  const LinMap zero = LinMap::zero(Q, x.CcotBC.coordinate_shape(), TensorShape{});
  CHECK(verify_coseparability(x, zero).failed("υΔ = ε"));
}

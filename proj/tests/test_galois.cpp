#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/errors.hpp"
#include "helpers.hpp"

using namespace entwine;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// ρ(a) = a⊗1 on A = k[C_2] with C = k[C_2]: everything is coinvariant.
LinMap trivial_coaction(const Algebra& a, const Coalgebra& c) {
  return kron(a.id(), LinMap::from_vector(c.shape(), c.basis(0)));
}

}  // namespace

TEST_CASE("k[C_2] over Q is Galois over the ground field") {
  const GaloisExtension g = hopf_self_galois(group_hopf(Q, 2));
  CHECK(g.B.dim() == 1);
  CHECK(g.B.contains(g.alg.unit));
  CHECK(g.AtensBA.dim() == 4);
  CHECK(g.can.matrix().rows() == 4);
  CHECK(g.can.matrix().cols() == 4);
  CHECK(g.can * g.canInv == LinMap::identity(Q, TensorShape{2, 2}));
  CHECK(g.canInv * g.can == LinMap::identity(Q, TensorShape{4}));
  // can(g_x⊗g_y) = g_{x+y}⊗g_y, assembled by hand.
  const oracle::Field k = testing::oracle_field(Q);
  oracle::Mat hand = oracle::zeros(k, 4, 4);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) hand[((x + y) % 2) * 2 + y][x * 2 + y] = k(1);
  CHECK(testing::to_oracle((g.can * g.AtensBA.projection()).matrix()) == hand);
  CHECK(oracle::rank(hand) == 4);
}

TEST_CASE("identities of the canonical map on all Galois catalog entries") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
    std::vector<GaloisExtension> list{hopf_self_galois(group_hopf(k, 2)), hopf_self_galois(group_hopf(k, 3)),
                                      hopf_self_galois(function_hopf(k, 2)), hopf_quotient_galois(k, 4, 2).ext};
    if (k.characteristic() != 2) list.push_back(hopf_self_galois(sweedler_hopf(k)));
    for (const GaloisExtension& g : list) {
      CHECK(verify_galois_identities(g).passed());
      // (A⊗ε)∘can = μ_{A,B}
      CHECK(kron(g.alg.id(), g.coalg.counit_map()) * g.can == g.mu_AB());
      // canInv(a·z·a') = a·canInv(z)·a' on basis triples.
      const LinMap left = g.canInv * left_mult_AC(g);
      const LinMap left2 = left_mult_ABA(g) * kron(g.alg.id(), g.canInv);
      CHECK(left == left2);
      const LinMap right = g.canInv * right_mult_AC(g);
      const LinMap right2 = right_mult_ABA(g) * kron(g.canInv, g.alg.id());
      CHECK(right == right2);
      CHECK(verify_entwining(g.psi).passed());
      CHECK(g.psi.psi * kron(g.coalg.id(), g.alg.unit_map()) == kron(g.alg.unit_map(), g.coalg.id()));
      CHECK(verify_entwined_module(g.regular()).passed());
    }
  }
}

TEST_CASE("quotient Galois extension has B = k[<g^2>]") {
  const QuotientGalois qg = hopf_quotient_galois(Q, 4, 2);
  const GaloisExtension& g = qg.ext;
  CHECK(g.coalg.dim() == 2);
  CHECK(g.B.dim() == 2);
  CHECK(g.B.contains(g.alg.basis(2)));
  CHECK_FALSE(g.B.contains(g.alg.basis(1)));
  CHECK(g.AtensBA.dim() == 8);
  const auto [b, balg] = fixed_subalgebra(g.alg, g.coalg, g.rhoA);
  CHECK(b == g.B);
  CHECK(verify_algebra(balg).passed());
}

TEST_CASE("copointed extensions") {
  const GaloisExtension g = hopf_self_galois(group_hopf(Q, 3));
  const auto e = copointed_grouplike(g);
  REQUIRE(e.has_value());
  CHECK(*e == g.coalg.basis(0));
}

TEST_CASE("a trivial coaction is not Galois") {
  const HopfAlgebra h = group_hopf(Q, 2);
  CHECK_THROWS_AS(build_galois(h.alg, h.coalg, trivial_coaction(h.alg, h.coalg)), GaloisError);
}

TEST_CASE("a non-coaction is rejected") {
  const HopfAlgebra h = group_hopf(Q, 2);
  const LinMap twice = h.coalg.comult * Q.from_int(2);
  CHECK_THROWS_AS(build_galois(h.alg, h.coalg, twice), DomainError);
}

TEST_CASE("pointed self-coextension of k[C_2]") {
  const Coextension x = self_coextension(group_hopf(Q, 2));
  CHECK(x.B.coalgebra.dim() == 1);
  CHECK(x.CcotBC.dim() == 4);
  CHECK(x.cocan * x.cocanInv == LinMap::identity(Q, x.CcotBC.coordinate_shape()));
  CHECK(verify_entwining(x.psi).passed());
  CHECK(verify_entwined_module(x.coregular()).passed());
  REQUIRE(pointed_kappa(x).has_value());
  const LinMap gamma = cotranslation_map(x);
  CHECK(verify_cotranslation(x, gamma).passed());
  // ψ∘cocan⁻¹ = (γ⊗C)∘(C⊗Δ) on C□_kC = C⊗C.
  const LinMap lhs = x.psi.psi * x.cocanInv * x.CcotBC.retraction();
  const LinMap rhs = kron(gamma.reshaped(TensorShape{2, 2}, TensorShape{2}), x.coalg.id()) *
                     kron(x.coalg.id(), x.coalg.comult);
  CHECK(lhs == rhs);
}

TEST_CASE("twisted self-coextensions") {
  for (const FieldSpec k : {Q, FieldSpec::prime(3)}) {
    const Coextension x = self_coextension(group_hopf(k, 2), sign_character(k, 2));
    CHECK(verify_entwining(x.psi).passed());
    CHECK(x.B.coalgebra.dim() == 1);
  }
  CHECK_THROWS_AS(sign_character(Q, 3), InputError);
}

TEST_CASE("a trivial action is not a Galois coextension") {
  const HopfAlgebra h = group_hopf(Q, 2);
  const LinMap trivial = kron(h.coalg.id(), h.coalg.counit_map());
  CHECK_THROWS_AS(build_coextension(h.coalg, h.alg, trivial), GaloisError);
}

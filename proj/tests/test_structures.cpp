#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/errors.hpp"
#include "entwine/structures.hpp"

using namespace entwine;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<HopfAlgebra> hopf_battery(FieldSpec k) {
  std::vector<HopfAlgebra> out{group_hopf(k, 1), group_hopf(k, 2), group_hopf(k, 3), function_hopf(k, 2),
                               function_hopf(k, 3)};
  if (k.characteristic() != 2) out.push_back(sweedler_hopf(k));
  return out;
}

}  // namespace

TEST_CASE("catalog Hopf algebras satisfy every axiom") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (const HopfAlgebra& h : hopf_battery(k)) {
      CAPTURE(k.name());
      CHECK(verify_algebra(h.alg).passed());
      CHECK(verify_coalgebra(h.coalg).passed());
      CHECK(verify_hopf(h).passed());
    }
}

TEST_CASE("group algebra structure constants") {
  const HopfAlgebra h = group_hopf(Q, 3);
  // g^1 g^2 = g^0, Δ(g^2) = g^2⊗g^2, S(g^1) = g^2.
  CHECK(h.alg.multiply(h.alg.basis(1), h.alg.basis(2)) == h.alg.basis(0));
  CHECK(h.coalg.comult.apply(h.alg.basis(2)) == kron(h.alg.basis(2), h.alg.basis(2)));
  CHECK(h.antipode.apply(h.alg.basis(1)) == h.alg.basis(2));
  CHECK(h.alg.unit == h.alg.basis(0));
}

TEST_CASE("dual_swap exchanges the algebra and coalgebra axioms") {
  for (const FieldSpec k : {Q, FieldSpec::prime(3)})
    for (const HopfAlgebra& h : hopf_battery(k)) {
      CHECK(verify_algebra(dual_swap(h.coalg)).passed() == verify_coalgebra(h.coalg).passed());
      CHECK(verify_coalgebra(dual_swap(h.alg)).passed() == verify_algebra(h.alg).passed());
      CHECK(dual_swap(dual_swap(h.alg)).mult == h.alg.mult);
    }
  // g·1 = 0 breaks the unit; the dual coproduct breaks the counit.
  LinMap m = group_algebra(Q, 2).mult;
  Matrix bad = m.matrix();
  bad(1, 2) = Q.zero();
  const Algebra a = make_algebra(LinMap(m.domain(), m.codomain(), bad), group_algebra(Q, 2).unit);
  CHECK_FALSE(verify_algebra(a).passed());
  CHECK_FALSE(verify_coalgebra(dual_swap(a)).passed());
}

TEST_CASE("failures name the axiom and a basis witness") {
  const Algebra g = group_algebra(Q, 2);
  Vector wrong_unit{Q.zero(), Q.one()};
  const CheckReport r = verify_algebra(make_algebra(g.mult, wrong_unit));
  CHECK(r.failed("left unit"));
  CHECK_FALSE(r.failed("associativity"));
  REQUIRE_FALSE(r.failures().empty());
  CHECK_FALSE(r.failures().front().witness.empty());
}

TEST_CASE("shape checks in constructors") {
  const Algebra g = group_algebra(Q, 2);
  CHECK_THROWS_AS(make_algebra(g.mult, Vector{Q.one()}), InputError);
  const Coalgebra c = group_function_coalgebra(Q, 2);
  CHECK_THROWS_AS(make_coalgebra(c.comult, Vector{Q.one(), Q.one(), Q.one()}), InputError);
}

TEST_CASE("tensor algebras and coalgebras") {
  const Algebra a = tensor_algebra(group_algebra(Q, 2), group_algebra(Q, 3));
  CHECK(a.dim() == 6);
  CHECK(verify_algebra(a).passed());
  const Coalgebra c = tensor_coalgebra(group_hopf(Q, 2).coalg, function_hopf(Q, 2).coalg);
  CHECK(verify_coalgebra(c).passed());
}

TEST_CASE("algebra and coalgebra maps") {
  const HopfAlgebra h = group_hopf(Q, 2);
  CHECK(verify_algebra_map(h.alg.id(), h.alg, h.alg).passed());
  const LinMap eps = h.coalg.counit_map();
  CHECK(verify_algebra_map(eps, h.alg, ground_algebra(Q)).passed());
  CHECK(verify_coalgebra_map(eps, h.coalg, ground_coalgebra(Q)).passed());
  CHECK_FALSE(verify_algebra_map(h.alg.id() * Q.from_int(2), h.alg, h.alg).passed());
}

TEST_CASE("modules and comodules") {
  const HopfAlgebra h = group_hopf(Q, 2);
  CHECK(verify_right_module(h.alg, h.alg.mult).passed());
  CHECK(verify_left_module(h.alg, h.alg.mult).passed());
  CHECK(verify_right_comodule(h.coalg, h.coalg.comult).passed());
  CHECK(verify_left_comodule(h.coalg, h.coalg.comult).passed());
  const LinMap zero = LinMap::zero(Q, TensorShape{2}, TensorShape{2, 2});
  CHECK(verify_right_comodule(h.coalg, zero).failed("comodule counit"));
}

TEST_CASE("quotient coalgebra projection is a coalgebra map") {
  // k[C_4] / (k[C_4]·(g^2 - 1)) ≅ k[C_2].
  const HopfAlgebra h = group_hopf(Q, 4);
  const Algebra& a = h.alg;
  const Vector gen = a.basis(2) - a.basis(0);
  std::vector<Vector> span;
  for (std::size_t i = 0; i < 4; ++i) span.push_back(a.multiply(a.basis(i), gen));
  const QuotientCoalgebra q = quotient_coalgebra(h.coalg, Subspace::span(Q, a.shape(), span));
  CHECK(q.coalgebra.dim() == 2);
  CHECK(verify_coalgebra(q.coalgebra).passed());
  const LinMap pi = q.projection();
  CHECK(kron(pi, pi) * h.coalg.comult == q.coalgebra.comult * pi);
  CHECK(q.coalgebra.counit_map() * pi == h.coalg.counit_map());
  CHECK(verify_coalgebra_map(pi, h.coalg, q.coalgebra).passed());
}

TEST_CASE("non-coideals are rejected") {
  const HopfAlgebra h = group_hopf(Q, 2);
  const Subspace not_coideal = Subspace::span(Q, h.alg.shape(), {h.alg.basis(1)});
  CHECK_THROWS_AS(quotient_coalgebra(h.coalg, not_coideal), DomainError);
}

#include <doctest.h>

#include "entwine/catalog.hpp"
#include "entwine/errors.hpp"
#include "entwine/hochschild.hpp"
#include "entwine/separability.hpp"
#include "helpers.hpp"

using namespace entwine;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Subspace ground(const Algebra& a) { return Subspace::span(a.field(), a.shape(), {a.unit}); }

void check_cocycles(const RelativeComplex& c, std::size_t n, const Cohomology& h) {
  CHECK(h.representatives.size() == h.dim);
  for (const Vector& r : h.representatives) {
    REQUIRE(c.cochains[n].contains(r));
    const Vector d = c.coboundaries[n].apply(c.cochains[n].coordinates(r));
    for (const Scalar& s : d) CHECK(s.is_zero());
  }
}

}  // namespace

TEST_CASE("coboundaries of k[C_n] over k agree with the oracle") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)})
    for (std::size_t n : {2u, 3u}) {
      CAPTURE(k.name());
      CAPTURE(n);
      const Algebra a = group_algebra(k, n);
      const RelativeComplex c = relative_complex(a, ground(a), regular_bimodule(a));
      REQUIRE(c.cochains.size() == 3);
      REQUIRE(c.coboundaries.size() == 2);
      CHECK(c.cochains[0].dim() == n);
      CHECK(c.cochains[1].dim() == n * n);
      CHECK(c.cochains[2].dim() == n * n * n);
      // Over k nothing is cut out, so the coordinates are the standard ones.
      CHECK(c.cochains[1].basis() == Matrix::identity(k, n * n));

      const oracle::Field f = testing::oracle_field(k);
      const oracle::Mat d0 = oracle::cyclic_delta0(f, n);
      const oracle::Mat d1 = oracle::cyclic_delta1(f, n);
      CHECK(testing::to_oracle(c.coboundaries[0].matrix()) == d0);
      CHECK(testing::to_oracle(c.coboundaries[1].matrix()) == d1);
      CHECK(oracle::product(d1, d0, f) == oracle::zeros(f, n * n * n, n));

      const Cohomology h1 = cohomology_dim(c, 1);
      CHECK(h1.dim == n * n - oracle::rank(d1) - oracle::rank(d0));
      check_cocycles(c, 1, h1);
      const Cohomology h0 = cohomology_dim(c, 0);
      CHECK(h0.dim == n);
    }
}

TEST_CASE("H^1 of k[C_2] is 0 over Q and 2 over F_2") {
  const Algebra aq = group_algebra(Q, 2);
  CHECK(cohomology_dim(relative_complex(aq, ground(aq), regular_bimodule(aq)), 1).dim == 0);

  const FieldSpec f2 = FieldSpec::prime(2);
  const Algebra a = group_algebra(f2, 2);
  const RelativeComplex c = relative_complex(a, ground(a), regular_bimodule(a));
  const Cohomology h = cohomology_dim(c, 1);
  CHECK(h.dim == 2);
  // The derivation 1 |-> 0, g |-> 1 is not inner since A is commutative.
  const Vector d{f2.zero(), f2.one(), f2.zero(), f2.zero()};
  CHECK(c.cochains[1].contains(d));
  const Vector dd = c.coboundaries[1].apply(c.cochains[1].coordinates(d));
  for (const Scalar& s : dd) CHECK(s.is_zero());
}

TEST_CASE("δ∘δ = 0 on catalog algebras") {
  for (const FieldSpec k : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
    std::vector<Algebra> algebras{group_algebra(k, 2), function_hopf(k, 2).alg, group_algebra(k, 3)};
    if (k.characteristic() != 2) algebras.push_back(sweedler_hopf(k).alg);
    for (const Algebra& a : algebras) {
      const RelativeComplex c = relative_complex(a, ground(a), regular_bimodule(a), a.dim() <= 2 ? 3 : 2);
      for (std::size_t n = 0; n + 1 < c.coboundaries.size(); ++n)
        CHECK((c.coboundaries[n + 1] * c.coboundaries[n]).matrix().is_zero());
      for (std::size_t n = 0; n < c.coboundaries.size(); ++n) check_cocycles(c, n, cohomology_dim(c, n));
    }
  }
}

TEST_CASE("separable extensions have vanishing relative cohomology") {
  for (const FieldSpec k : {Q, FieldSpec::prime(3)}) {
    std::vector<GaloisExtension> list{hopf_self_galois(group_hopf(k, 2)), hopf_quotient_galois(k, 4, 2).ext,
                                      hopf_self_galois(function_hopf(k, 2))};
    for (const GaloisExtension& g : list) {
      if (!check_separable(g)) continue;
      const Algebra& a = g.alg;
      std::vector<Bimodule> battery{regular_bimodule(a), outer_bimodule(a)};
      if (a.dim() == 2 || a.dim() == 4) battery.push_back(twisted_bimodule(a, group_hopf(k, a.dim()).antipode));
      for (const Bimodule& m : battery) {
        REQUIRE(verify_bimodule(a, m).passed());
        const RelativeComplex c = relative_complex(a, g.B, m);
        CHECK(cohomology_dim(c, 1).dim == 0);
      }
    }
  }
}

TEST_CASE("relative cochains are balanced over B") {
  // A = k[C_4] is free of rank 2 over the central B = k[<g^2>], so C^n is
  // Hom_B(B^{2^n}, B^2) of dimension 2^n·2·2.
  const QuotientGalois qg = hopf_quotient_galois(Q, 4, 2);
  const RelativeComplex c = relative_complex(qg.ext.alg, qg.ext.B, regular_bimodule(qg.ext.alg));
  CHECK(c.cochains[0].dim() == 4);
  CHECK(c.cochains[1].dim() == 8);
  CHECK(c.cochains[2].dim() == 16);
}

TEST_CASE("bimodule constructions and their errors") {
  const Algebra a = group_algebra(Q, 3);
  CHECK(verify_bimodule(a, regular_bimodule(a)).passed());
  CHECK(verify_bimodule(a, outer_bimodule(a)).passed());
  CHECK(outer_bimodule(a).dim() == 9);
  const LinMap inverse = group_hopf(Q, 3).antipode;
  CHECK(verify_bimodule(a, twisted_bimodule(a, inverse)).passed());
  CHECK_THROWS_AS(twisted_bimodule(a, a.id() * Q.from_int(2)), InputError);
  CHECK_THROWS_AS(make_bimodule(a, a.mult, LinMap::zero(Q, TensorShape{2, 3}, TensorShape{2})), InputError);

  const Bimodule broken{a.mult, LinMap::zero(Q, TensorShape{3, 3}, TensorShape{3})};
  CHECK_FALSE(verify_bimodule(a, broken).passed());
  CHECK_THROWS_AS(relative_complex(a, ground(a), broken), InputError);
}

TEST_CASE("relative_complex argument checks") {
  const Algebra a = group_algebra(Q, 2);
  const Bimodule m = regular_bimodule(a);
  CHECK_THROWS_AS(relative_complex(a, ground(a), m, 0), InputError);
  CHECK_THROWS_AS(relative_complex(a, ground(a), m, 4), InputError);
  CHECK_THROWS_AS(relative_complex(a, Subspace::span(Q, a.shape(), {a.basis(1)}), m), InputError);
  const RelativeComplex c = relative_complex(a, ground(a), m, 1);
  CHECK(c.coboundaries.size() == 1);
  CHECK_NOTHROW(cohomology_dim(c, 0));
  CHECK_THROWS_AS(cohomology_dim(c, 1), InputError);
}

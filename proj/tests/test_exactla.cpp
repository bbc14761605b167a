#include <doctest.h>

#include <random>

#include "entwine/errors.hpp"
#include "entwine/equation.hpp"
#include "entwine/linalg.hpp"
#include "helpers.hpp"

using namespace entwine;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

}  // namespace

TEST_CASE("rational scalars stay reduced") {
  const Scalar a = Q.parse("6/-4");
  CHECK(a.str() == "-3/2");
  CHECK((a + Q.from_fraction(3, 2)).is_zero());
  CHECK((a * a).str() == "9/4");
  CHECK((Q.one() / Q.from_int(3)).str() == "1/3");
  CHECK(Q.parse("5").str() == "5");
  CHECK_THROWS_AS(Q.parse("1/0"), InputError);
  CHECK_THROWS_AS(Q.parse("x"), InputError);
  CHECK_THROWS_AS(Q.zero().inverse(), DomainError);
}

TEST_CASE("rationals past 64 bits agree with GMP") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> seeds{"9223372036854775807", "-9223372036854775807", "4611686018427387904",
                                       "3037000499",          "1/9223372036854775807", "-7/3",
                                       "9223372036854775808", "-9223372036854775808"};
  std::vector<Scalar> xs;
  for (const std::string& t : seeds) xs.push_back(Q.parse(t));
  for (int i = 0; i < 40; ++i) {
    const long long num = static_cast<long long>(rng() >> 1) * (i % 2 ? 1 : -1);
    xs.push_back(Q.from_fraction(num, static_cast<long long>(rng() % 1000000) + 1));
  }
  for (const Scalar& a : xs)
    for (const Scalar& b : xs) {
      const mpq_class qa = a.rational(), qb = b.rational();
      CHECK((a + b).rational() == qa + qb);
      CHECK((a - b).rational() == qa - qb);
      CHECK((a * b).rational() == qa * qb);
      if (!b.is_zero()) CHECK((a / b).rational() == qa / qb);
      Scalar c = a;
      c.add_product(a, b);
      CHECK(c.rational() == qa + qa * qb);
      // One representation per value: equality and text agree with GMP.
      CHECK(((a + b) - b == a));
      CHECK((a == b) == (qa == qb));
      CHECK((a * b).str() == mpq_class(qa * qb).get_str());
    }
  const Scalar big = Q.parse("9223372036854775808");
  CHECK((big - Q.one()).str() == "9223372036854775807");
  CHECK((big - Q.one() + Q.one()) == big);
}

TEST_CASE("prime field arithmetic") {
  CHECK((F3.from_int(2) + F3.from_int(2)).str() == "1");
  CHECK(F3.from_int(-1).str() == "2");
  CHECK((F3.one() / F3.from_int(2)).str() == "2");
  CHECK(F2.from_fraction(1, 1).is_one());
  CHECK_THROWS_AS(F3.parse("3"), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(4), InputError);
  CHECK_THROWS_AS(Q.one() + F3.one(), InputError);
}

TEST_CASE("flatten and unflatten are inverse") {
  const TensorShape s{2, 3, 4};
  CHECK(s.total() == 24);
  for (std::size_t i = 0; i < s.total(); ++i) {
    const auto idx = s.unflatten(i);
    CHECK(s.flatten(idx) == i);
  }
  const std::vector<std::size_t> idx{1, 2, 3};
  CHECK(s.flatten(idx) == 1 * 12 + 2 * 4 + 3);
  CHECK(TensorShape{}.total() == 1);
}

TEST_CASE("kron is associative and matches the row-major convention") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap f(TensorShape{2}, TensorShape{3}, testing::random_matrix(Q, 3, 2, rng));
    const LinMap g(TensorShape{2}, TensorShape{2}, testing::random_matrix(Q, 2, 2, rng));
    const LinMap h(TensorShape{3}, TensorShape{1}, testing::random_matrix(Q, 1, 3, rng));
    CHECK(kron(kron(f, g), h) == kron(f, kron(g, h)));
    CHECK(kron({f, g, h}) == kron(f, kron(g, h)));
    const LinMap fg = kron(f, g);
    CHECK(fg.domain() == TensorShape({2, 2}));
    // (f⊗g)(e_i⊗e_j) = f(e_i)⊗g(e_j)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const Vector lhs = fg.apply(kron(unit_vector(Q, 2, i), unit_vector(Q, 2, j)));
        const Vector rhs = kron(f.matrix().column_vector(i), g.matrix().column_vector(j));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("twist and permutation") {
  const LinMap t = LinMap::twist(Q, TensorShape{2}, TensorShape{3});
  const Vector v = kron(unit_vector(Q, 2, 1), unit_vector(Q, 3, 2));
  CHECK(t.apply(v) == kron(unit_vector(Q, 3, 2), unit_vector(Q, 2, 1)));
  const TensorShape s{2, 3, 2};
  const LinMap p = LinMap::permutation(Q, s, {2, 0, 1});
  const LinMap back = LinMap::permutation(Q, p.codomain(), {1, 2, 0});
  CHECK(back * p == LinMap::identity(Q, s));
}

TEST_CASE("vec and unvec are inverse") {
  std::mt19937 rng(3);
  const LinMap f(TensorShape{2, 2}, TensorShape{3}, testing::random_matrix(Q, 3, 4, rng));
  CHECK(unvec(Q, f.domain(), f.codomain(), vec(f)) == f);
  CHECK(vec(f)[1 * 4 + 2] == f.matrix()(1, 2));
}

TEST_CASE("row reduction against the oracle") {
  std::mt19937 rng(11);
  for (const FieldSpec k : {Q, F2, F3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      const Matrix m = testing::random_matrix(k, r, c, rng);
      CHECK(rank(m) == oracle::rank(testing::to_oracle(m)));
      const EchelonForm e = row_reduce(m);
      CHECK(row_reduce(e.reduced).reduced == e.reduced);
    }
  }
}

TEST_CASE("solve_affine: every member solves the system") {
  std::mt19937 rng(5);
  for (const FieldSpec k : {Q, F3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
      const Matrix m = testing::random_matrix(k, r, c, rng);
      const Vector b = testing::random_matrix(k, r, 1, rng).column_vector(0);
      const AffineSolutionSet s = solve_affine(m, b);
      const oracle::Solution o = oracle::solve(testing::to_oracle(m), testing::to_oracle(b), c);
      REQUIRE(s.feasible() == o.feasible);
      CHECK(s.homogeneous.dim() == o.nullity);
      if (!s.feasible()) continue;
      CHECK(m.apply(*s.particular) == b);
      std::vector<Scalar> coeffs(s.homogeneous.dim(), k.zero());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs.assign(coeffs.size(), k.zero());
        coeffs[i] = k.from_int(static_cast<long long>(i) + 2);
        CHECK(m.apply(s.member(coeffs)) == b);
      }
    }
  }
}

TEST_CASE("subspaces are canonical") {
  const TensorShape amb{3};
  const Vector a{Q.from_int(1), Q.from_int(2), Q.from_int(0)};
  const Vector b{Q.from_int(0), Q.from_int(1), Q.from_int(1)};
  const Subspace s1 = Subspace::span(Q, amb, {a, b});
  const Subspace s2 = Subspace::span(Q, amb, {a + b, a - b, a});
  CHECK(s1 == s2);
  CHECK(Subspace::row_space(amb, s1.basis()) == s1);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(a + b));
  CHECK_FALSE(s1.contains(unit_vector(Q, 3, 2)));
  CHECK(s1.retraction() * s1.inclusion() == LinMap::identity(Q, s1.coordinate_shape()));
  const Vector coords = s1.coordinates(a);
  CHECK(s1.inclusion().apply(coords) == a);
  CHECK_THROWS_AS(s1.coordinates(unit_vector(Q, 3, 2)), DomainError);
  CHECK((s1 + Subspace::span(Q, amb, {unit_vector(Q, 3, 2)})) == Subspace::whole(Q, amb));
  CHECK(Subspace::zero(Q, amb).dim() == 0);
}

TEST_CASE("quotient projection and section") {
  const TensorShape amb{3};
  const Subspace rel = Subspace::span(Q, amb, {Vector{Q.one(), Q.one(), Q.zero()}});
  const Quotient q(rel);
  CHECK(q.dim() == 2);
  CHECK(q.projection() * q.section() == LinMap::identity(Q, TensorShape{2}));
  CHECK(is_zero(q.projection().apply(rel.basis_vector(0))));
}

TEST_CASE("kernel, image and inverse") {
  const Matrix m = Matrix::from_rows(Q, {{1, 2, 3}, {2, 4, 6}});
  const LinMap f(TensorShape{3}, TensorShape{2}, m);
  const auto [ker, img] = kernel_image(f);
  CHECK(ker.dim() == 2);
  CHECK(img.dim() == 1);
  for (std::size_t i = 0; i < ker.dim(); ++i) CHECK(is_zero(f.apply(ker.basis_vector(i))));
  const LinMap g(TensorShape{2}, TensorShape{2}, Matrix::from_rows(Q, {{2, 1}, {1, 1}}));
  CHECK(inverse(g) * g == LinMap::identity(Q, TensorShape{2}));
  CHECK_THROWS_AS(inverse(f), DomainError);
}

TEST_CASE("corestrict and descend detect violations") {
  const TensorShape amb{2};
  const Subspace line = Subspace::span(Q, amb, {Vector{Q.one(), Q.one()}});
  const LinMap into(TensorShape{1}, amb, Matrix::from_rows(Q, {{3}, {3}}));
  CHECK(corestrict(into, line, "ok").matrix()(0, 0) == Q.from_int(3));
  const LinMap off(TensorShape{1}, amb, Matrix::from_rows(Q, {{1}, {0}}));
  CHECK_THROWS_AS(corestrict(off, line, "off"), InconsistencyError);

  const Quotient q(line);
  const LinMap kills(amb, TensorShape{1}, Matrix::from_rows(Q, {{1, -1}}));
  const LinMap induced = descend(kills, q, 1, 1, "kills");
  CHECK(induced * q.projection() == kills);
  const LinMap keeps(amb, TensorShape{1}, Matrix::from_rows(Q, {{1, 0}}));
  CHECK_THROWS_AS(descend(keeps, q, 1, 1, "keeps"), InconsistencyError);
}

TEST_CASE("linear system coefficients act on vectorised unknowns") {
  std::mt19937 rng(19);
  const LinMap outer(TensorShape{2, 3}, TensorShape{2}, testing::random_matrix(Q, 2, 6, rng));
  const LinMap inner(TensorShape{2}, TensorShape{2, 2}, testing::random_matrix(Q, 4, 2, rng));
  LinearSystem sys(Q, {{"X", TensorShape{2}, TensorShape{3}}});
  sys.add("eq", {term(0, outer, 2, 1, inner)});
  const Matrix coeff = sys.coefficients();
  for (int trial = 0; trial < 5; ++trial) {
    const LinMap x(TensorShape{2}, TensorShape{3}, testing::random_matrix(Q, 3, 2, rng));
    const LinMap direct = outer * kron(LinMap::identity(Q, TensorShape{2}), x) * inner;
    CHECK(coeff.apply(vec(x)) == vec(direct));
    CHECK(sys.check({x}, true).passed() == is_zero(vec(direct)));
  }
}

TEST_CASE("linear system solve with right-hand side") {
  // X: k -> [2] with X = (1, 2) and the sum of coordinates equal to 3.
  LinearSystem sys(Q, {{"X", TensorShape{}, TensorShape{2}}});
  const LinMap id2 = LinMap::identity(Q, TensorShape{2});
  sys.add("value", {term(0, id2, 1, 1, LinMap::identity(Q, TensorShape{}))},
          LinMap::from_vector(TensorShape{2}, Vector{Q.one(), Q.from_int(2)}));
  const AffineSolutionSet s = sys.solve();
  REQUIRE(s.feasible());
  CHECK(s.homogeneous.dim() == 0);
  CHECK(sys.check(*s.particular).passed());
  sys.add("inconsistent", {term(0, id2, 1, 1, LinMap::identity(Q, TensorShape{}))},
          LinMap::from_vector(TensorShape{2}, Vector{Q.zero(), Q.zero()}));
  CHECK_FALSE(sys.solve().feasible());
}

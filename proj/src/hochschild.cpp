#include "entwine/hochschild.hpp"

#include "entwine/equation.hpp"
#include "entwine/errors.hpp"
#include "entwine/galois.hpp"

namespace entwine {

namespace {

LinMap id(FieldSpec k, std::size_t n) { return LinMap::identity(k, TensorShape{n}); }

std::size_t power(std::size_t base, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= base;
  return r;
}

// Unknown f: A^{⊗n} -> M.
LinearSystem cochain_system(const Algebra& a, const Subspace& b, const Bimodule& m, std::size_t n) {
  const FieldSpec k = a.field();
  const std::size_t da = a.dim(), db = b.dim(), dm = m.dim();
  const LinMap ib = b.inclusion();
  const LinMap im = id(k, dm);
  LinearSystem sys(k, {{"f", TensorShape{power(da, n)}, TensorShape{dm}}});
  if (n == 0) {
    sys.add("b·m = m·b", {term(0, m.left * kron(ib, im), db, 1, id(k, db)),
                          term(0, m.right * kron(im, ib), 1, db, id(k, db), -1)});
    return sys;
  }
  const LinMap bl = a.mult * kron(ib, a.id());  // B⊗A -> A
  const LinMap br = a.mult * kron(a.id(), ib);  // A⊗B -> A
  sys.add("left B-linear", {term(0, im, 1, 1, kron(bl, id(k, power(da, n - 1)))),
                            term(0, m.left * kron(ib, im), db, 1, id(k, db * power(da, n)), -1)});
  sys.add("right B-linear", {term(0, im, 1, 1, kron(id(k, power(da, n - 1)), br)),
                             term(0, m.right * kron(im, ib), 1, db, id(k, power(da, n) * db), -1)});
  for (std::size_t i = 1; i < n; ++i) {
    const LinMap before = id(k, power(da, i - 1));
    const LinMap after = id(k, power(da, n - i - 1));
    sys.add("balanced at " + std::to_string(i),
            {term(0, im, 1, 1, kron({before, br, a.id(), after})),
             term(0, im, 1, 1, kron({before, a.id(), bl, after}), -1)});
  }
  return sys;
}

// δ on all of Hom(A^{⊗n}, M) as a matrix on vectorised maps.
Matrix coboundary_matrix(const Algebra& a, const Bimodule& m, std::size_t n) {
  const FieldSpec k = a.field();
  const std::size_t da = a.dim(), dm = m.dim();
  LinearSystem sys(k, {{"f", TensorShape{power(da, n)}, TensorShape{dm}}});
  std::vector<LinearSystem::Term> terms;
  const std::size_t dom = power(da, n + 1);
  terms.push_back(term(0, m.left, da, 1, id(k, dom)));
  for (std::size_t i = 1; i <= n; ++i) {
    const LinMap inner = kron({id(k, power(da, i - 1)), a.mult, id(k, power(da, n - i))});
    terms.push_back(term(0, id(k, dm), 1, 1, inner, i % 2 ? -1 : 1));
  }
  terms.push_back(term(0, m.right, 1, da, id(k, dom), (n + 1) % 2 ? -1 : 1));
  sys.add("δ", std::move(terms));
  return sys.coefficients();
}

}  // namespace

Bimodule make_bimodule(const Algebra& a, const LinMap& left, const LinMap& right) {
  const std::size_t n = left.codomain().total(), da = a.dim();
  if (left.domain().total() != da * n || right.domain().total() != n * da ||
      right.codomain().total() != n)
    throw InputError("bimodule actions must be maps [" + std::to_string(da) + "," +
                     std::to_string(n) + "] -> [" + std::to_string(n) + "] and [" +
                     std::to_string(n) + "," + std::to_string(da) + "] -> [" + std::to_string(n) + "]");
  return Bimodule{left.reshaped(TensorShape{da, n}, TensorShape{n}),
                  right.reshaped(TensorShape{n, da}, TensorShape{n})};
}

CheckReport verify_bimodule(const Algebra& a, const Bimodule& m) {
  CheckReport r;
  r.merge(verify_left_module(a, m.left), "left ");
  r.merge(verify_right_module(a, m.right), "right ");
  r.expect_equal("bimodule", m.right * kron(m.left, a.id()), m.left * kron(a.id(), m.right));
  return r;
}

Bimodule regular_bimodule(const Algebra& a) { return make_bimodule(a, a.mult, a.mult); }

Bimodule outer_bimodule(const Algebra& a) {
  const LinMap ia = a.id();
  return make_bimodule(a, kron(a.mult, ia), kron(ia, a.mult));
}

Bimodule twisted_bimodule(const Algebra& a, const LinMap& sigma) {
  const CheckReport r = verify_algebra_map(sigma, a, a);
  if (!r.passed()) throw InputError("σ is not an algebra map:\n" + r.str());
  if (rank(sigma.matrix()) != a.dim()) throw InputError("σ is not invertible");
  return make_bimodule(a, a.mult, a.mult * kron(a.id(), sigma.reshaped(a.shape(), a.shape())));
}

RelativeComplex relative_complex(const Algebra& a, const Subspace& b, const Bimodule& m,
                                 std::size_t max_degree) {
  if (max_degree < 1 || max_degree > 3) throw InputError("maximal degree must be 1, 2 or 3");
  if (b.ambient().total() != a.dim()) throw InputError("B is not a subspace of A");
  try {
    (void)subalgebra(a, b);
  } catch (const InputError& e) {
    throw InputError(std::string("B is not a unital subalgebra: ") + e.what());
  }
  const CheckReport br = verify_bimodule(a, m);
  if (!br.passed()) throw InputError("not a bimodule:\n" + br.str());

  RelativeComplex c{b, {}, {}};
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const AffineSolutionSet s = cochain_system(a, b, m, n).solve();
    c.cochains.push_back(Subspace::row_space(TensorShape{m.dim(), power(a.dim(), n)},
                                             s.homogeneous.basis()));
  }
  for (std::size_t n = 0; n < max_degree; ++n) {
    const Subspace& from = c.cochains[n];
    const Subspace& to = c.cochains[n + 1];
    const LinMap full(TensorShape{from.ambient().total()}, TensorShape{to.ambient().total()},
                      coboundary_matrix(a, m, n));
    c.coboundaries.push_back(corestrict(full * from.inclusion(), to, "δ on relative cochains"));
  }
  for (std::size_t n = 0; n + 1 < max_degree; ++n) {
    const LinMap dd = c.coboundaries[n + 1] * c.coboundaries[n];
    if (!dd.matrix().is_zero())
      throw InconsistencyError("δ∘δ ≠ 0 from degree " + std::to_string(n));
  }
  return c;
}

Cohomology cohomology_dim(const RelativeComplex& c, std::size_t n) {
  if (n + 1 > c.coboundaries.size())
    throw InputError("H^" + std::to_string(n) + " needs the complex up to degree " +
                     std::to_string(n + 1));
  const Subspace& cn = c.cochains[n];
  const FieldSpec k = cn.field();
  const Subspace ker = kernel_image(c.coboundaries[n]).first;
  const Subspace img = n == 0 ? Subspace::zero(k, cn.coordinate_shape())
                              : kernel_image(c.coboundaries[n - 1]).second;
  Cohomology h{ker.dim() - img.dim(), {}};
  const LinMap inc = cn.inclusion();
  Subspace span = img;
  for (std::size_t i = 0; i < ker.dim() && h.representatives.size() < h.dim; ++i) {
    const Vector v = ker.basis_vector(i);
    if (span.contains(v)) continue;
    span = span + Subspace::span(k, cn.coordinate_shape(), {v});
    h.representatives.push_back(inc.apply(v));
  }
  return h;
}

}  // namespace entwine

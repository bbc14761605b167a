#include "entwine/structures.hpp"

#include "entwine/errors.hpp"

namespace entwine {

Algebra make_algebra(const LinMap& mult, Vector unit) {
  const std::size_t n = unit.size();
  if (n == 0) throw InputError("algebra dimension must be positive");
  if (mult.domain().total() != n * n || mult.codomain().total() != n)
    throw InputError("multiplication must be a map [" + std::to_string(n) + "," +
                     std::to_string(n) + "] -> [" + std::to_string(n) + "]");
  for (const auto& s : unit)
    if (!(s.field() == mult.field())) throw InputError("unit and multiplication use different fields");
  return Algebra{mult.reshaped(TensorShape{n, n}, TensorShape{n}), std::move(unit)};
}

Coalgebra make_coalgebra(const LinMap& comult, Vector counit) {
  const std::size_t n = counit.size();
  if (n == 0) throw InputError("coalgebra dimension must be positive");
  if (comult.domain().total() != n || comult.codomain().total() != n * n)
    throw InputError("comultiplication must be a map [" + std::to_string(n) + "] -> [" +
                     std::to_string(n) + "," + std::to_string(n) + "]");
  for (const auto& s : counit)
    if (!(s.field() == comult.field()))
      throw InputError("counit and comultiplication use different fields");
  return Coalgebra{comult.reshaped(TensorShape{n}, TensorShape{n, n}), std::move(counit)};
}

Algebra ground_algebra(FieldSpec field) {
  return make_algebra(LinMap::identity(field, TensorShape{1}), {field.one()});
}

Coalgebra ground_coalgebra(FieldSpec field) {
  return make_coalgebra(LinMap::identity(field, TensorShape{1}), {field.one()});
}

CheckReport verify_algebra(const Algebra& a) {
  CheckReport r;
  const LinMap id = a.id();
  r.expect_equal("associativity", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult));
  r.expect_equal("left unit", a.mult * kron(a.unit_map(), id), id);
  r.expect_equal("right unit", a.mult * kron(id, a.unit_map()), id);
  return r;
}

CheckReport verify_coalgebra(const Coalgebra& c) {
  CheckReport r;
  const LinMap id = c.id();
  r.expect_equal("coassociativity", kron(c.comult, id) * c.comult, kron(id, c.comult) * c.comult);
  r.expect_equal("left counit", kron(c.counit_map(), id) * c.comult, id);
  r.expect_equal("right counit", kron(id, c.counit_map()) * c.comult, id);
  return r;
}

Coalgebra dual_swap(const Algebra& a) {
  return make_coalgebra(a.mult.transpose(), a.unit);
}

Algebra dual_swap(const Coalgebra& c) {
  return make_algebra(c.comult.transpose(), c.counit);
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const FieldSpec k = a.field();
  const LinMap mid = kron({a.id(), LinMap::twist(k, b.shape(), a.shape()), b.id()});
  const LinMap mult = kron(a.mult, b.mult) * mid;
  const std::size_t n = a.dim() * b.dim();
  return make_algebra(mult.reshaped(TensorShape{n, n}, TensorShape{n}), kron(a.unit, b.unit));
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  const FieldSpec k = c.field();
  const LinMap mid = kron({c.id(), LinMap::twist(k, c.shape(), d.shape()), d.id()});
  const LinMap comult = mid * kron(c.comult, d.comult);
  const std::size_t n = c.dim() * d.dim();
  return make_coalgebra(comult.reshaped(TensorShape{n}, TensorShape{n, n}),
                        kron(c.counit, d.counit));
}

CheckReport verify_algebra_map(const LinMap& f, const Algebra& a, const Algebra& b) {
  if (f.domain().total() != a.dim() || f.codomain().total() != b.dim())
    throw InputError("algebra map has the wrong shape");
  CheckReport r;
  r.expect_equal("multiplicative", f * a.mult, b.mult * kron(f, f));
  r.expect_equal("unital", f * a.unit_map(), b.unit_map());
  return r;
}

CheckReport verify_coalgebra_map(const LinMap& g, const Coalgebra& c, const Coalgebra& d) {
  if (g.domain().total() != c.dim() || g.codomain().total() != d.dim())
    throw InputError("coalgebra map has the wrong shape");
  CheckReport r;
  r.expect_equal("comultiplicative", d.comult * g, kron(g, g) * c.comult);
  r.expect_equal("counital", d.counit_map() * g, c.counit_map());
  return r;
}

namespace {

std::size_t module_dim(const LinMap& action, std::size_t n, bool left) {
  const std::size_t m = action.codomain().total();
  if (action.domain().total() != m * n)
    throw InputError(std::string(left ? "left" : "right") + " action has the wrong shape");
  return m;
}

std::size_t comodule_dim(const LinMap& coaction, std::size_t n, bool left) {
  const std::size_t m = coaction.domain().total();
  if (coaction.codomain().total() != m * n)
    throw InputError(std::string(left ? "left" : "right") + " coaction has the wrong shape");
  return m;
}

}  // namespace

CheckReport verify_right_module(const Algebra& a, const LinMap& action) {
  const std::size_t m = module_dim(action, a.dim(), false);
  const FieldSpec k = a.field();
  const LinMap idm = LinMap::identity(k, TensorShape{m});
  const LinMap act = action.reshaped(TensorShape{m, a.dim()}, TensorShape{m});
  CheckReport r;
  r.expect_equal("module associativity", act * kron(act, a.id()), act * kron(idm, a.mult));
  r.expect_equal("module unit", act * kron(idm, a.unit_map()), idm);
  return r;
}

CheckReport verify_left_module(const Algebra& a, const LinMap& action) {
  const std::size_t m = module_dim(action, a.dim(), true);
  const FieldSpec k = a.field();
  const LinMap idm = LinMap::identity(k, TensorShape{m});
  const LinMap act = action.reshaped(TensorShape{a.dim(), m}, TensorShape{m});
  CheckReport r;
  r.expect_equal("module associativity", act * kron(a.id(), act), act * kron(a.mult, idm));
  r.expect_equal("module unit", act * kron(a.unit_map(), idm), idm);
  return r;
}

CheckReport verify_right_comodule(const Coalgebra& c, const LinMap& coaction) {
  const std::size_t m = comodule_dim(coaction, c.dim(), false);
  const FieldSpec k = c.field();
  const LinMap idm = LinMap::identity(k, TensorShape{m});
  const LinMap co = coaction.reshaped(TensorShape{m}, TensorShape{m, c.dim()});
  CheckReport r;
  r.expect_equal("comodule coassociativity", kron(co, c.id()) * co, kron(idm, c.comult) * co);
  r.expect_equal("comodule counit", kron(idm, c.counit_map()) * co, idm);
  return r;
}

CheckReport verify_left_comodule(const Coalgebra& c, const LinMap& coaction) {
  const std::size_t m = comodule_dim(coaction, c.dim(), true);
  const FieldSpec k = c.field();
  const LinMap idm = LinMap::identity(k, TensorShape{m});
  const LinMap co = coaction.reshaped(TensorShape{m}, TensorShape{c.dim(), m});
  CheckReport r;
  r.expect_equal("comodule coassociativity", kron(c.id(), co) * co, kron(c.comult, idm) * co);
  r.expect_equal("comodule counit", kron(c.counit_map(), idm) * co, idm);
  return r;
}

QuotientCoalgebra quotient_coalgebra(const Coalgebra& c, const Subspace& i) {
  if (i.ambient().total() != c.dim()) throw InputError("coideal does not live in the coalgebra");
  const LinMap eps = c.counit_map();
  for (std::size_t k = 0; k < i.dim(); ++k) {
    const Vector v = i.basis_vector(k);
    if (!eps.apply(v)[0].is_zero())
      throw DomainError("not a coideal: counit is nonzero on " + to_string(v));
  }
  Quotient q(i);
  const LinMap& pi = q.projection();
  const LinMap both = kron(pi, pi) * c.comult;
  for (std::size_t k = 0; k < i.dim(); ++k) {
    const Vector v = i.basis_vector(k);
    if (!is_zero(both.apply(v)))
      throw DomainError("not a coideal: comultiplication of " + to_string(v) +
                        " leaves I⊗C + C⊗I");
  }
  const std::size_t n = q.dim();
  Coalgebra quot{(both * q.section()).reshaped(TensorShape{n}, TensorShape{n, n}),
                 (eps * q.section()).matrix().row_vector(0)};
  if (n == 0) throw DomainError("quotient by the whole coalgebra");
  return QuotientCoalgebra{std::move(quot), std::move(q)};
}

}  // namespace entwine

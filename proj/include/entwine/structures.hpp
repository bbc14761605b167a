#pragma once

// Finite-dimensional algebras and coalgebras given by structure constants,
// together with module and comodule structures over them.


#include "entwine/linalg.hpp"
#include "entwine/report.hpp"

namespace entwine {

struct Algebra {
  LinMap mult;  // [n,n] -> [n]
  Vector unit;

  FieldSpec field() const { return mult.field(); }
  std::size_t dim() const { return unit.size(); }
  TensorShape shape() const { return TensorShape{dim()}; }
  LinMap id() const { return LinMap::identity(field(), shape()); }
  /// k -> A, 1 |-> 1_A.
  LinMap unit_map() const { return LinMap::from_vector(shape(), unit); }
  Vector multiply(const Vector& a, const Vector& b) const { return mult.apply(kron(a, b)); }
  Vector basis(std::size_t i) const { return unit_vector(field(), dim(), i); }
};

struct Coalgebra {
  LinMap comult;  // [n] -> [n,n]
  Vector counit;

  FieldSpec field() const { return comult.field(); }
  std::size_t dim() const { return counit.size(); }
  TensorShape shape() const { return TensorShape{dim()}; }
  LinMap id() const { return LinMap::identity(field(), shape()); }
  /// C -> k.
  LinMap counit_map() const { return LinMap::from_covector(shape(), counit); }
  Vector basis(std::size_t i) const { return unit_vector(field(), dim(), i); }
};

/// Shape-checked constructors; they do not verify the axioms.
Algebra make_algebra(const LinMap& mult, Vector unit);
Coalgebra make_coalgebra(const LinMap& comult, Vector counit);

/// The ground field as a one-dimensional algebra / coalgebra.
Algebra ground_algebra(FieldSpec field);
Coalgebra ground_coalgebra(FieldSpec field);

CheckReport verify_algebra(const Algebra& a);
CheckReport verify_coalgebra(const Coalgebra& c);

Coalgebra dual_swap(const Algebra& a);
Algebra dual_swap(const Coalgebra& c);

Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

CheckReport verify_algebra_map(const LinMap& f, const Algebra& a, const Algebra& b);
CheckReport verify_coalgebra_map(const LinMap& g, const Coalgebra& c, const Coalgebra& d);

/// action: [m, a] -> [m]
CheckReport verify_right_module(const Algebra& a, const LinMap& action);
/// action: [a, m] -> [m]
CheckReport verify_left_module(const Algebra& a, const LinMap& action);
/// coaction: [m] -> [m, c]
CheckReport verify_right_comodule(const Coalgebra& c, const LinMap& coaction);
/// coaction: [m] -> [c, m]
CheckReport verify_left_comodule(const Coalgebra& c, const LinMap& coaction);

struct QuotientCoalgebra {
  Coalgebra coalgebra;
  Quotient quotient;  // C / I with projection and section
  const LinMap& projection() const { return quotient.projection(); }
};

/// C / I for a coideal I. Throws DomainError (naming a witness vector of I)
/// if I is not a coideal.
QuotientCoalgebra quotient_coalgebra(const Coalgebra& c, const Subspace& i);

}  // namespace entwine

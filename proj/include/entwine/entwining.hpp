#pragma once

// Entwining structures (A,C)_ψ with ψ: C⊗A -> A⊗C, written c⊗a |-> a_α⊗c^α.

#include "entwine/structures.hpp"

namespace entwine {

struct Entwining {
  Algebra alg;
  Coalgebra coalg;
  LinMap psi;  // [dimC, dimA] -> [dimA, dimC]

  FieldSpec field() const { return alg.field(); }
  TensorShape a() const { return alg.shape(); }
  TensorShape c() const { return coalg.shape(); }
};

/// Checks the four axioms:
///   psi multiplicative    ψ(C⊗μ) = (μ⊗C)(A⊗ψ)(ψ⊗A)
///   psi unital            ψ(C⊗1) = 1⊗C
///   psi comultiplicative  (A⊗Δ)ψ = (ψ⊗C)(C⊗ψ)(Δ⊗A)
///   psi counital          (A⊗ε)ψ = ε⊗A
CheckReport verify_entwining(const Entwining& e);

/// Verifies the algebra, coalgebra and entwining axioms; throws DomainError
/// carrying the report if any fails.
Entwining make_entwining(Algebra a, Coalgebra c, const LinMap& psi);
/// Skips verification. Only for internal code that has just proven the
/// axioms for ψ.
Entwining trusted_entwining(Algebra a, Coalgebra c, const LinMap& psi);

Entwining twist_entwining(Algebra a, Coalgebra c);

struct EntwiningMorphism {
  Entwining src;
  Entwining dst;
  LinMap f;  // A -> Ã
  LinMap g;  // C -> C̃
};

CheckReport verify_morphism(const EntwiningMorphism& m);

EntwiningMorphism identity_morphism(const Entwining& e);
/// (A, ε_C): (A,C)_ψ -> (A,k)_twist.
EntwiningMorphism counit_morphism(const Entwining& e);
/// (1_A, C): (k,C)_twist -> (A,C)_ψ.
EntwiningMorphism unit_morphism(const Entwining& e);

/// (A⊗Ã, C⊗C̃) with ψ = (A⊗twist⊗C̃)(ψ⊗ψ̃)(C⊗twist⊗Ã).
Entwining tensor_entwining(const Entwining& e1, const Entwining& e2);

}  // namespace entwine

#pragma once

// Entwined modules over (A,C)_ψ: right A-modules and right C-comodules with
// ρ^M(m·a) = m₀·a_α ⊗ m₁^α, the induction and coinduction functors along a
// morphism of entwinings, and the unit/counit of their adjunction.
//
// Over a field every morphism of entwinings is admissible and the cotensor
// functors involved are exact, so none of that is checked at runtime.
// Well-definedness of maps on quotients and corestrictions to subspaces is
// asserted on basis elements instead.

#include "entwine/entwining.hpp"

namespace entwine {

using QuotientModule = Quotient;

struct EntwinedModule {
  Entwining ent;
  LinMap action;    // [m, dimA] -> [m]
  LinMap coaction;  // [m] -> [m, dimC]

  FieldSpec field() const { return ent.field(); }
  std::size_t dim() const { return action.codomain().total(); }
  TensorShape shape() const { return TensorShape{dim()}; }
  LinMap id() const { return LinMap::identity(field(), shape()); }
};

/// Shape-checked constructor; does not verify axioms.
EntwinedModule make_entwined_module(const Entwining& e, const LinMap& action, const LinMap& coaction);

/// Module axioms, comodule axioms and "compatibility"
/// ρ^M∘ρ_M = (ρ_M⊗C)∘(M⊗ψ)∘(ρ^M⊗A).
CheckReport verify_entwined_module(const EntwinedModule& m);

/// A with μ_A and a coaction ρ^A: A -> A⊗C.
EntwinedModule regular_module(const Entwining& e, const LinMap& rhoA);
/// C with a right action ρ_C: C⊗A -> C and Δ_C.
EntwinedModule coregular_module(const Entwining& e, const LinMap& rhoC);

enum class StandardKind { ModTensorC, ComodTensorA };

/// ModTensorC: base is a right A-action M⊗A -> M; result M⊗C with
/// (m⊗c)·a = m·a_α⊗c^α and coaction M⊗Δ.
/// ComodTensorA: base is a right C-coaction V -> V⊗C; result V⊗A with
/// action V⊗μ and coaction v⊗a |-> v₀⊗ψ(v₁⊗a).
/// Throws DomainError if base violates its own axioms.
EntwinedModule standard_module(StandardKind kind, const LinMap& base, const Entwining& e);

/// Kernel of ρ^V⊗W - V⊗ρ^W inside V⊗W, for ρ^V: V -> V⊗C, ρ^W: W -> C⊗W.
Subspace cotensor(const LinMap& right_coaction, const LinMap& left_coaction);
/// Cokernel of ρ_M⊗N - M⊗ρ_N: M⊗A⊗N -> M⊗N, for ρ_M: M⊗A -> M, ρ_N: A⊗N -> N.
QuotientModule tensor_over_A(const LinMap& right_action, const LinMap& left_action);

/// M⊗_A Ã for M over mor.src, with (m⊗ã)·ã' = m⊗ãã' and
/// m⊗ã |-> m₀⊗ã_α⊗g(m₁)^α.
struct InducedModule {
  EntwinedModule module;
  QuotientModule quotient;
};

/// M̃□_C̃ C for M̃ over mor.dst, with (m⊗c)·a = m·f(a_α)⊗c^α and M̃⊗Δ.
struct CoinducedModule {
  EntwinedModule module;
  Subspace space;
};

enum class FunctorDirection { Induce, Coinduce };

InducedModule induce(const EntwiningMorphism& mor, const EntwinedModule& m);
CoinducedModule coinduce(const EntwiningMorphism& mor, const EntwinedModule& mt);
/// Throws InputError if m does not live over the required side of mor.
EntwinedModule functor_apply(FunctorDirection dir, const EntwiningMorphism& mor,
                             const EntwinedModule& m);

/// φ⊗_A Ã and φ̃□_C̃ C.
LinMap induce_map(const InducedModule& from, const InducedModule& to, const LinMap& phi);
LinMap coinduce_map(const CoinducedModule& from, const CoinducedModule& to, const LinMap& phi);

/// Φ_M: M -> (M⊗_AÃ)□_C̃C, m |-> m₀⊗1⊗m₁.
struct UnitMap {
  InducedModule fm;
  CoinducedModule gfm;
  LinMap phi;
};
/// Ψ_M̃: (M̃□_C̃C)⊗_AÃ -> M̃, m⊗c⊗ã |-> ε(c) m·ã.
struct CounitMap {
  CoinducedModule gm;
  InducedModule fgm;
  LinMap psi;
};

UnitMap adjunction_unit(const EntwiningMorphism& mor, const EntwinedModule& m);
CounitMap adjunction_counit(const EntwiningMorphism& mor, const EntwinedModule& mt);

struct AdjunctionMaps {
  UnitMap unit;
  CounitMap counit;
};
AdjunctionMaps adjunction_maps(const EntwiningMorphism& mor, const EntwinedModule& m,
                               const EntwinedModule& mt);

/// Ψ_{FM}∘F(Φ_M) = id and G(Ψ_M̃)∘Φ_{GM̃} = id.
CheckReport verify_triangle_identities(const EntwiningMorphism& mor, const EntwinedModule& m,
                                       const EntwinedModule& mt);

/// {m | ρ^M(m·a) = m·a₀⊗a₁ for all a}.
Subspace fixed_part(const EntwinedModule& m, const LinMap& rhoA);

/// All A-linear C-colinear maps M -> N, as a subspace of the vectorised
/// map space with ambient shape [dimN, dimM].
Subspace hom_AC(const EntwinedModule& m, const EntwinedModule& n);
CheckReport verify_entwined_morphism(const EntwinedModule& m, const EntwinedModule& n,
                                     const LinMap& phi);

}  // namespace entwine

#pragma once

// Witnesses for the separability of the functors attached to an entwining
// structure: integrals, cointegrals, integral maps and cointegral maps of a
// single entwining, and the maps λ and 𝔷 of a morphism of entwinings.
//
// Every witness is described by one LinearSystem. Solving and checking both
// go through it.

#include <string>

#include "entwine/equation.hpp"
#include "entwine/galois.hpp"

namespace entwine {

enum class WitnessKind { Integral, Cointegral, IntegralMap, CointegralMap };

std::string to_string(WitnessKind kind);

/// value has shape
///   Integral       []    -> [a,c]   𝔷 ∈ A⊗C
///   Cointegral     [c,a] -> []      𝔶: C⊗A -> k
///   IntegralMap    [c,c] -> [a]     γ
///   CointegralMap  [c]   -> [a,a]   ζ
struct Witness {
  WitnessKind kind;
  LinMap value;
  bool normalized = false;
};

/// Defining identities:
///   integral        (μ⊗C)(A⊗𝔷) = (μ⊗C)(A⊗ψ)(𝔷⊗A)
///   cointegral      (C⊗𝔶)(Δ⊗A) = (𝔶⊗C)(C⊗ψ)(Δ⊗A)
///   int.i           (γ⊗C)(C⊗Δ) = ψ(C⊗γ)(Δ⊗C)
///   int.ii          μ(γ⊗A) = μ(A⊗γ)(ψ⊗C)(C⊗ψ)
///   coint.i         (A⊗μ)(ζ⊗A) = (μ⊗A)(A⊗ζ)ψ
///   coint.ii        (ζ⊗C)Δ = (A⊗ψ)(ψ⊗A)(C⊗ζ)Δ
/// and with `normalized` the matching "normalisation" row block.
LinearSystem witness_system(WitnessKind kind, const Entwining& e, bool normalized);

/// Solution vectors are vec(value); use witness_value to unpack.
AffineSolutionSet solve_witness(WitnessKind kind, const Entwining& e, bool normalized);
LinMap witness_value(WitnessKind kind, const Entwining& e, const Vector& x);
CheckReport verify_witness(const Witness& w, const Entwining& e);

/// Morphism-level witnesses of (f,g): (A,C)_ψ -> (Ã,C̃)_ψ̃.
///   Lambda: λ on D = (C⊗Ã)□_C̃C, given in coordinates of lambda_domain(mor),
///           map [dim D] -> [a].
///   FrakZ:  𝔷: C̃ -> Q = (Ã⊗C)⊗_AÃ, given in coordinates of
///           frakz_codomain(mor), map [c̃] -> [dim Q].
struct MorphismWitness {
  enum class Side { Lambda, FrakZ };
  Side side;
  EntwiningMorphism mor;
  LinMap map;
  bool total = false;
};

Subspace lambda_domain(const EntwiningMorphism& mor);
QuotientModule frakz_codomain(const EntwiningMorphism& mor);

/// "A-linear", "int.a", "int.b" and with total "int.c".
LinearSystem lambda_system(const EntwiningMorphism& mor, bool total);
/// "C̃-colinear", "coint.a", "coint.b" and with total "coint.c".
LinearSystem frakz_system(const EntwiningMorphism& mor, bool total);

AffineSolutionSet solve_total_integrability(const EntwiningMorphism& mor);
AffineSolutionSet solve_total_cointegrability(const EntwiningMorphism& mor);

CheckReport verify_morphism_witness(const MorphismWitness& w);

/// For (A,ε_C): γ = λ∘(C⊗1_A⊗C) and λ(c⊗a⊗c') = a_α γ(c^α⊗c').
LinMap gamma_from_lambda(const Entwining& e, const LinMap& lambda);
LinMap lambda_from_gamma(const Entwining& e, const LinMap& gamma);

/// ν_M: (M⊗_AÃ)□_C̃C -> M, m⊗ã⊗c |-> m₀·λ(m₁⊗ã⊗c), in the coordinates of
/// adjunction_unit(mor, m).gfm.space. Verified to split Φ_M and to be a
/// morphism of entwined modules. Throws PreconditionError if lambda is not
/// a total λ and InconsistencyError if a verification fails.
LinMap nu_from_lambda(const MorphismWitness& lambda, const EntwinedModule& m);

/// λ = (A⊗ε_C)∘ν_{A⊗C}∘(1_A⊗-) for a splitting ν of Φ_{A⊗C}, where A⊗C is
/// standard_module(ModTensorC, μ_A). Throws InconsistencyError if nu does
/// not split Φ, is not a morphism, or yields a λ that is not total.
MorphismWitness lambda_from_nu(const LinMap& nu_on_AC, const EntwiningMorphism& mor);

/// C a right A-module with ψ(c⊗a) = a₁⊗c·a₂, Λ ∈ C with Λ·a = ε_A(a)Λ and
/// ε_C(Λ) = 1. Yields the normalised integral 1⊗Λ.
struct InvariantElement {
  Entwining ent;
  LinMap actionC;  // [c,a] -> [c]
  Vector epsA;
  Vector lambda;
};

/// A a right C-comodule algebra with ψ(c⊗a) = a₀⊗ca₁, κ ∈ A* with
/// κ(1) = 1 and 1_Cκ(a) = κ(a₀)a₁. Yields the normalised cointegral ε_C⊗κ.
struct CasimirFunctional {
  Entwining ent;
  LinMap rhoA;  // [a] -> [a,c]
  Vector oneC;  // unit of the Hopf algebra C
  Vector kappa;
};

/// The cotranslation map of a coextension of k, as an integral map.
struct Cotranslation {
  Coextension coext;
};

/// ζ = can⁻¹∘(1_A⊗C) for an extension of k, as a cointegral map.
struct CanInvUnit {
  GaloisExtension ext;
};

/// Each checks its hypotheses (DomainError naming the violated identity if
/// one fails) and re-verifies the result (InconsistencyError).
Witness witness_from_structure(const InvariantElement& d);
Witness witness_from_structure(const CasimirFunctional& d);
Witness witness_from_structure(const Cotranslation& d);
Witness witness_from_structure(const CanInvUnit& d);

}  // namespace entwine

#pragma once

// Coalgebra-Galois extensions A(B)^C and algebra-Galois coextensions
// C(B)_A with their canonical maps and canonical entwining structures.

#include <optional>
#include <utility>

#include "entwine/entmod.hpp"

namespace entwine {

/// Fixed part {b | ρ^A(ba) = bρ^A(a)} with its induced algebra structure.
/// Throws DomainError if rhoA is not a coaction.
std::pair<Subspace, Algebra> fixed_subalgebra(const Algebra& a, const Coalgebra& c,
                                              const LinMap& rhoA);
/// Algebra structure on a subspace closed under multiplication and
/// containing 1; throws InputError otherwise.
Algebra subalgebra(const Algebra& a, const Subspace& b);

struct GaloisExtension {
  Algebra alg;
  Coalgebra coalg;
  LinMap rhoA;  // [a] -> [a,c]
  Subspace B;
  Algebra Balg;
  QuotientModule AtensBA;  // A⊗_B A
  LinMap can;              // [q] -> [a,c]
  LinMap canInv;           // [a,c] -> [q]
  Entwining psi;           // canonical entwining

  FieldSpec field() const { return alg.field(); }
  /// μ_{A,B}: A⊗_BA -> A.
  LinMap mu_AB() const;
  /// ρ^A(1_A) as a vector of A⊗C.
  Vector rho_one() const { return rhoA.apply(alg.unit); }
  EntwinedModule regular() const { return regular_module(psi, rhoA); }
};

/// Throws DomainError for invalid input structures and GaloisError if can
/// is not bijective.
GaloisExtension build_galois(const Algebra& a, const Coalgebra& c, const LinMap& rhoA);

/// e with ρ^A(1) = 1⊗e, Δe = e⊗e, ε(e) = 1, if any.
std::optional<Vector> copointed_grouplike(const GaloisExtension& g);

/// Left and right multiplications on A⊗C (through ψ) and on A⊗_BA.
LinMap left_mult_AC(const GaloisExtension& g);   // [a, a,c] -> [a,c]
LinMap right_mult_AC(const GaloisExtension& g);  // [a,c, a] -> [a,c]
LinMap left_mult_ABA(const GaloisExtension& g);  // [a, q] -> [q]
LinMap right_mult_ABA(const GaloisExtension& g); // [q, a] -> [q]

/// canInv is an (A,A)-bimodule map and (A⊗ε)∘can = μ_{A,B}.
CheckReport verify_galois_identities(const GaloisExtension& g);

struct Coextension {
  Coalgebra coalg;
  Algebra alg;
  LinMap rhoC;  // [c,a] -> [c]
  Subspace I;
  QuotientCoalgebra B;
  Subspace CcotBC;  // C□_B C inside [c,c]
  LinMap cocan;     // [c,a] -> [k]
  LinMap cocanInv;  // [k] -> [c,a]
  Entwining psi;

  FieldSpec field() const { return alg.field(); }
  EntwinedModule coregular() const { return coregular_module(psi, rhoC); }
};

/// Throws DomainError for invalid input structures and GaloisError if cocan
/// is not bijective.
Coextension build_coextension(const Coalgebra& c, const Algebra& a, const LinMap& rhoC);

/// Algebra map κ with ε∘ρ_C = ε⊗κ, if any (as a covector on A).
std::optional<Vector> pointed_kappa(const Coextension& x);

/// γ = (ε⊗A)∘cocan⁻¹ for a coextension of k; checked against
///   cot.2          μ(γ⊗A) = γ(C⊗ρ_C)
///   cot.3          μ(γ⊗γ)(C⊗Δ⊗C) = γ(C⊗ε⊗C)
///   normalisation  γΔ = 1ε
/// Throws PreconditionError if B is not one-dimensional.
LinMap cotranslation_map(const Coextension& x);
CheckReport verify_cotranslation(const Coextension& x, const LinMap& gamma);

}  // namespace entwine

#pragma once

// Certificates for separable, split and strongly separable coalgebra-Galois
// extensions, and for separable (coseparable) coextensions.

#include <optional>
#include <string>

#include "entwine/witness.hpp"

namespace entwine {

struct SeparabilityCertificate {
  Vector u;               // coordinates in A⊗_BA
  Vector representative;  // section of u in A⊗A
  Witness source;         // the normalised integral u came from
};

/// "a·u = u·a" for all basis a and "μ(u) = 1".
CheckReport verify_separability_idempotent(const GaloisExtension& g, const Vector& u);

/// u = can⁻¹(𝔷). Throws InputError if z is not a normalised integral and
/// InconsistencyError if u fails verification.
SeparabilityCertificate separability_from_integral(const GaloisExtension& g, const Witness& z);
std::optional<SeparabilityCertificate> check_separable(const GaloisExtension& g);

struct SplitCertificate {
  LinMap phi;  // C -> A
  LinMap E;    // A -> A, image in B
};

/// Conditions on φ: C -> A:
///   (i)   ψ(C⊗φ)Δ = (μ⊗C)(A⊗ρ(1))φ
///   (ii)  μ(A⊗φ)ρ(1) = 1
///   (iii) μ(A⊗φ)ψ(C⊗ι_B) = μ(φ⊗ι_B)
LinearSystem split_system(const GaloisExtension& g);

/// E = μ(A⊗φ)ρ^A.
LinMap expectation_from_phi(const GaloisExtension& g, const LinMap& phi);
/// φ = (A⊗_BE)∘can⁻¹∘(1_A⊗C).
LinMap phi_from_expectation(const GaloisExtension& g, const LinMap& E);

/// φ satisfies (i)-(iii) and E is "E unital", "E into B" and
/// "E B-bilinear" on basis triples.
CheckReport verify_split(const GaloisExtension& g, const SplitCertificate& s);

struct SplitResult {
  AffineSolutionSet family;  // φ, vectorised as [c] -> [a]
  std::optional<SplitCertificate> cert;
  /// B⊂A split implies that A is faithfully flat as a left B-module. Recorded,
  /// not checked.
  bool faithfully_flat_flag = false;
};
SplitResult check_split(const GaloisExtension& g);

/// φ(c) = Σ a^i_α γ(c^α⊗c_i) for ρ(1) = Σ a^i⊗c_i.
SplitCertificate split_from_integral_map(const GaloisExtension& g, const Witness& gamma);

struct StrongCertificate {
  SeparabilityCertificate sep;
  SplitCertificate split;
  Scalar tau;
};

/// Σ E(au_i)u^i = aτ and Σ u_iE(u^ia) = aτ for all basis a. τ is read off
/// at a = 1; returns it when both identities hold with τ ≠ 0.
std::optional<Scalar> strong_tau(const GaloisExtension& g, const Vector& u, const LinMap& E,
                                 CheckReport* report = nullptr);

enum class StrongStrategy { GivenWitnesses, SearchParticulars, FixedIntegralLinearPhi };

struct StrongOptions {
  StrongStrategy strategy = StrongStrategy::FixedIntegralLinearPhi;
  // GivenWitnesses
  std::optional<Vector> u;  // coordinates in A⊗_BA
  std::optional<LinMap> E;
  std::optional<Scalar> tau;
  // SearchParticulars: coefficients in [-radius, radius] on every
  // homogeneous basis vector, at most max_points combinations.
  int radius = 1;
  std::size_t max_points = 6561;
};

struct StrongResult {
  std::optional<StrongCertificate> cert;
  bool inconclusive = false;
  std::string diagnostic;
  bool free_over_B = false;  // heuristic freeness of A_B
};

StrongResult check_strongly_separable(const GaloisExtension& g, const StrongOptions& opts = {});

/// Greedy search for a basis of A as a right B-module.
bool heuristic_free_over_B(const GaloisExtension& g);

struct CoseparabilityCertificate {
  LinMap upsilon;  // [dim C□_BC] -> []
  Witness source;  // the normalised cointegral
};

/// "υ colinear": (C⊗υ)(Δ⊗C) = (υ⊗C)(C⊗Δ) on C□_BC, and "υΔ = ε".
CheckReport verify_coseparability(const Coextension& x, const LinMap& upsilon);
std::optional<CoseparabilityCertificate> check_coseparable(const Coextension& x);

}  // namespace entwine

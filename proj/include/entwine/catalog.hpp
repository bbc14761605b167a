#pragma once

// Small deterministic examples: group algebras of cyclic groups and their
// duals, the Galois data built from them, and Sweedler's algebra.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entwine/galois.hpp"
#include "entwine/io.hpp"

namespace entwine {

/// A Hopf algebra: an algebra and a coalgebra on the same space, with an
/// antipode.
struct HopfAlgebra {
  Algebra alg;
  Coalgebra coalg;
  LinMap antipode;

  FieldSpec field() const { return alg.field(); }
  std::size_t dim() const { return alg.dim(); }
};

/// Δ and ε are algebra maps, and μ(S⊗H)Δ = 1ε = μ(H⊗S)Δ.
CheckReport verify_hopf(const HopfAlgebra& h);

/// k[C_n] with basis g^0, ..., g^{n-1}.
HopfAlgebra group_hopf(FieldSpec k, std::size_t n);
/// k^{C_n} with basis δ_{g^0}, ..., δ_{g^{n-1}}.
HopfAlgebra function_hopf(FieldSpec k, std::size_t n);
/// Sweedler's algebra with basis 1, g, x, gx; needs characteristic ≠ 2.
HopfAlgebra sweedler_hopf(FieldSpec k);

Algebra group_algebra(FieldSpec k, std::size_t n);
Coalgebra group_function_coalgebra(FieldSpec k, std::size_t n);

/// A = C = H with ρ^A = Δ.
GaloisExtension hopf_self_galois(const HopfAlgebra& h);

/// A = k[C_n], B = k[<g^d>] for d | n, C = A/B⁺A ≅ k[C_d] with
/// ρ^A = (A⊗π)Δ. actionC is the right A-action on C by multiplication.
struct QuotientGalois {
  GaloisExtension ext;
  LinMap actionC;  // [c,a] -> [c]
  Vector epsA;
};
QuotientGalois hopf_quotient_galois(FieldSpec k, std::size_t n, std::size_t d);

/// A = k[C_m] as a right k[C_n]-comodule algebra via g^i |-> g^i⊗h^{ei}
/// (needs n | em), with ψ(h^j⊗g^i) = g^i⊗h^{j+ei}.
struct ComoduleAlgebra {
  Entwining ent;
  LinMap rhoA;  // [a] -> [a,c]
  Vector oneC;
};
ComoduleAlgebra comodule_algebra_entwining(FieldSpec k, std::size_t m, std::size_t n, std::size_t e);

/// C = A = H with c·a = c χ(a₁)a₂ for a character χ (ε if absent).
Coextension self_coextension(const HopfAlgebra& h, const std::optional<Vector>& character = {});
/// χ(g^i) = (-1)^i on k[C_n], n even.
Vector sign_character(FieldSpec k, std::size_t n);

Entwining trivial_entwining(const Algebra& a, const Coalgebra& c);
/// (C*, A*) with ψᵀ.
Entwining flip_entwining(const Entwining& e);

struct CatalogEntry {
  std::string name;
  std::map<std::string, std::string> params;
  Document payload;
  std::vector<std::string> warnings;
};

/// Names: group_algebra, group_function_coalgebra, hopf_self_galois,
/// hopf_quotient_galois, comodule_algebra_entwining, self_coextension,
/// trivial_entwining, flip_entwining, sweedler. Params (all optional):
/// field ("Q" or a prime), n, d, m, e, twisted ("0"/"1"). Throws InputError
/// on an unknown name or invalid params.
CatalogEntry make_example(const std::string& name, const std::map<std::string, std::string>& params);
std::vector<std::string> catalog_names();

/// Named entwinings used by cross-checks; every one verified.
struct NamedEntwining {
  std::string name;
  Entwining ent;
};
std::vector<NamedEntwining> catalog_entwinings(FieldSpec k, bool include_sweedler = false);

}  // namespace entwine

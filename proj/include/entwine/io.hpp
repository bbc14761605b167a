#pragma once

// Structure files and certificates in the "entwine/1" JSON schema.
//
//   {"schema": "entwine/1",
//    "field": {"kind": "Q"} | {"kind": "Fp", "p": 3},
//    "algebra":   {"dim": n, "mult": [[...]], "unit": [...]},
//    "coalgebra": {"dim": n, "comult": [[...]], "counit": [...]},
//    "psi": [[...]], "coactionA": [[...]], "actionC": [[...]],
//    "module":    {"dim": m, "action": [[...]], "coaction": [[...]]},
//    "bimodule":  {"dim": m, "left": [[...]], "right": [[...]]},
//    "morphism":  {"algebra": {...}, "coalgebra": {...}, "psi": [[...]],
//                  "f": [[...]], "g": [[...]]},
//    "certificate": {"kind": "...", "normalized": bool, ...}}
//
// Matrices are lists of rows, codomain rows by domain columns, with tensor
// factors flattened row-major in the order given by the comment on each
// field. Rational entries are "num/den" strings or integers; F_p entries
// are integers in [0, p). Unknown keys are rejected.

#include <map>
#include <optional>
#include <string>

#include "entwine/separability.hpp"

namespace entwine {

struct ModuleData {
  LinMap action;    // [m,a] -> [m]
  LinMap coaction;  // [m] -> [m,c]
};

struct MorphismData {
  Algebra alg;
  Coalgebra coalg;
  LinMap psi;
  LinMap f;  // [a] -> [ã]
  LinMap g;  // [c] -> [c̃]
};

struct BimoduleData {
  LinMap left;   // [a,m] -> [m]
  LinMap right;  // [m,a] -> [m]
};

/// kind is one of integral, cointegral, integral-map, cointegral-map,
/// lambda, frakz, separability, split, strong, coseparability.
///
///   witness kinds   "value": the witness map
///   lambda          "value": [dim D] -> [ã] on lambda_domain coordinates
///   frakz           "value": [c̃] -> [dim Q] on frakz_codomain coordinates
///   separability    "u": representative in A⊗A
///   split           "phi": [c] -> [a], "E": [a] -> [a]
///   strong          "u", "phi", "E" and "tau"
///   coseparability  "upsilon": functional on C⊗C, read on C□_BC
struct Certificate {
  std::string kind;
  bool normalized = false;
  std::map<std::string, Matrix> maps;
  std::map<std::string, Vector> vectors;
  std::optional<Scalar> tau;
};

struct Document {
  FieldSpec field = FieldSpec::rationals();
  std::optional<Algebra> algebra;
  std::optional<Coalgebra> coalgebra;
  std::optional<LinMap> psi;        // [c,a] -> [a,c]
  std::optional<LinMap> coactionA;  // [a] -> [a,c]
  std::optional<LinMap> actionC;    // [c,a] -> [c]
  std::optional<ModuleData> module;
  std::optional<MorphismData> morphism;
  std::optional<BimoduleData> bimodule;
  std::optional<Certificate> certificate;
};

/// Throws InputError naming the offending line/column or field path.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);
/// Deterministic: equal documents give identical text.
std::string write_document(const Document& d);

/// The sections needed by each consumer; InputError names the missing one.
Entwining document_entwining(const Document& d);
EntwiningMorphism document_morphism(const Document& d);
GaloisExtension document_extension(const Document& d);
Coextension document_coextension(const Document& d);

Certificate to_certificate(const Witness& w);
Certificate to_certificate(const MorphismWitness& w);
Certificate to_certificate(const GaloisExtension& g, const SeparabilityCertificate& c);
Certificate to_certificate(const SplitCertificate& c);
Certificate to_certificate(const GaloisExtension& g, const StrongCertificate& c);
Certificate to_certificate(const Coextension& x, const CoseparabilityCertificate& c);

/// Re-verifies d.certificate against the structures in d.
CheckReport verify_certificate(const Document& d);

}  // namespace entwine

#pragma once

// Linear systems whose unknowns are linear maps.
//
// Every defining diagram of a witness is an identity between composites in
// which the unknown map X occurs at most once per term, as
//
//     outer ∘ (id_left ⊗ X ⊗ id_right) ∘ inner.
//
// A LinearSystem collects such identities, assembles the coefficient matrix
// over the entries of the unknowns, and evaluates the same identities on
// concrete values. Solvers and checkers therefore share one description of
// each diagram.

#include <optional>
#include <string>
#include <vector>

#include "entwine/linalg.hpp"
#include "entwine/report.hpp"

namespace entwine {

class LinearSystem {
 public:
  struct Unknown {
    std::string name;
    TensorShape domain;
    TensorShape codomain;
  };

  struct Term {
    std::size_t unknown;
    LinMap outer;
    std::size_t left;   // total dimension of the identity factor left of X
    std::size_t right;  // total dimension of the identity factor right of X
    LinMap inner;
    int sign = 1;
  };

  LinearSystem(FieldSpec field, std::vector<Unknown> unknowns);

  FieldSpec field() const { return field_; }
  const std::vector<Unknown>& unknowns() const { return unknowns_; }
  std::size_t variables() const { return offsets_.back(); }

  /// Σ terms = rhs, all sides maps D -> E. A missing rhs means zero.
  void add(std::string name, std::vector<Term> terms, std::optional<LinMap> rhs = std::nullopt);

  AffineSolutionSet solve() const;
  /// The homogeneous coefficient matrix, one row per (codomain, domain)
  /// entry of each equation in order, in the row-major layout of vec().
  Matrix coefficients() const;

  Vector pack(const std::vector<LinMap>& values) const;
  std::vector<LinMap> unpack(const Vector& x) const;

  /// Evaluates every identity at the given values. With homogeneous = true
  /// every right-hand side is taken to be zero.
  CheckReport check(const std::vector<LinMap>& values, bool homogeneous = false) const;
  CheckReport check(const Vector& x, bool homogeneous = false) const {
    return check(unpack(x), homogeneous);
  }

 private:
  struct Equation {
    std::string name;
    std::vector<Term> terms;
    TensorShape domain;
    TensorShape codomain;
    std::optional<LinMap> rhs;
  };

  LinMap evaluate(const Equation& eq, const std::vector<LinMap>& values) const;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> assemble_block(const Equation& eq) const;

  FieldSpec field_;
  std::vector<Unknown> unknowns_;
  std::vector<std::size_t> offsets_;
  std::vector<Equation> equations_;
};

/// Term helper with the unknown in position `unknown`.
LinearSystem::Term term(std::size_t unknown, LinMap outer, std::size_t left, std::size_t right,
                        LinMap inner, int sign = 1);

}  // namespace entwine

#pragma once

// Exact dense linear algebra: reduced row echelon form, canonical subspaces,
// quotients with explicit sections, and affine solution families.

#include <optional>
#include <utility>
#include <vector>

#include "entwine/tensor.hpp"

namespace entwine {

struct EchelonForm {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// A subspace of a tensor-shaped space, stored as a reduced echelon basis.
/// Two Subspaces of the same ambient space are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(FieldSpec field, TensorShape ambient, const std::vector<Vector>& vectors);
  /// Span of the rows of `rows`.
  static Subspace row_space(TensorShape ambient, const Matrix& rows);
  static Subspace zero(FieldSpec field, TensorShape ambient);
  static Subspace whole(FieldSpec field, TensorShape ambient);

  FieldSpec field() const { return basis_.field(); }
  const TensorShape& ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  /// dim() x ambient().total(), reduced row echelon.
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Shape [dim] used for coordinates on the subspace.
  TensorShape coordinate_shape() const { return TensorShape{dim()}; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Throws DomainError if v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  /// [dim] -> ambient.
  LinMap inclusion() const;
  /// ambient -> [dim], reading the pivot entries; a left inverse of inclusion().
  LinMap retraction() const;

  Subspace operator+(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_.total() == b.ambient_.total() && a.basis_ == b.basis_;
  }

 private:
  Subspace(TensorShape ambient, EchelonForm echelon);

  TensorShape ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// ambient / relations. The complement basis consists of the unit vectors at
/// the non-pivot columns of the relations' echelon basis.
class Quotient {
 public:
  Quotient() = default;
  explicit Quotient(Subspace relations);

  const TensorShape& ambient() const { return relations_.ambient(); }
  const Subspace& relations() const { return relations_; }
  std::size_t dim() const { return section_.domain().total(); }
  /// ambient -> [dim]
  const LinMap& projection() const { return projection_; }
  /// [dim] -> ambient with projection() ∘ section() = id.
  const LinMap& section() const { return section_; }

 private:
  Subspace relations_;
  LinMap projection_;
  LinMap section_;
};

struct AffineSolutionSet {
  std::optional<Vector> particular;
  Subspace homogeneous;

  bool feasible() const { return particular.has_value(); }
  /// particular + Σ coeffs[i] * homogeneous basis i.
  Vector member(const std::vector<Scalar>& coeffs) const;
};

/// All x with M x = b.
AffineSolutionSet solve_affine(const Matrix& m, const Vector& b);
AffineSolutionSet solve_affine(const LinMap& m, const Vector& b);
/// (kernel, image) of M.
std::pair<Subspace, Subspace> kernel_image(const LinMap& m);

/// Inverse of a square bijective map; throws DomainError otherwise.
LinMap inverse(const LinMap& m);

/// Verifies that `map` sends every domain basis vector into `target`, and
/// returns the co-restricted map with codomain coordinates on `target`.
/// Throws InconsistencyError naming `what` otherwise.
LinMap corestrict(const LinMap& map, const Subspace& target, const char* what);
/// Same for a target L ⊗ S ⊗ R with identity factors of totals left, right.
LinMap corestrict(const LinMap& map, const Subspace& target, std::size_t left, std::size_t right,
                  const char* what);

/// Given F: L ⊗ ambient ⊗ R -> Y, verifies that F kills L ⊗ relations ⊗ R
/// and returns the induced map L ⊗ [q] ⊗ R -> Y. Throws InconsistencyError
/// naming `what` otherwise.
LinMap descend(const LinMap& map, const Quotient& q, std::size_t left, std::size_t right,
               const char* what);

}  // namespace entwine

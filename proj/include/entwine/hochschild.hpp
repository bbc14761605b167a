#pragma once

// Relative Hochschild cohomology H^n(A,B,M) of an algebra A over a
// subalgebra B with coefficients in an (A,A)-bimodule M.
//
// An n-cochain is a map f: A^{⊗n} -> M that is balanced over B in every
// slot and B-bilinear, i.e. a map on A⊗_B...⊗_BA. Cochains are stored
// vectorised as in vec(), so C^n is a subspace of [dim M · (dim A)^n].

#include <vector>

#include "entwine/linalg.hpp"
#include "entwine/report.hpp"
#include "entwine/structures.hpp"

namespace entwine {

struct Bimodule {
  LinMap left;   // [a,m] -> [m]
  LinMap right;  // [m,a] -> [m]

  std::size_t dim() const { return left.codomain().total(); }
};

/// Shape-checked constructor.
Bimodule make_bimodule(const Algebra& a, const LinMap& left, const LinMap& right);
/// Both actions are module structures and (a·m)·b = a·(m·b).
CheckReport verify_bimodule(const Algebra& a, const Bimodule& m);

/// A acting on itself.
Bimodule regular_bimodule(const Algebra& a);
/// A⊗A with a·(x⊗y)·b = ax⊗yb.
Bimodule outer_bimodule(const Algebra& a);
/// A with a·m·b = am σ(b) for an algebra automorphism σ.
Bimodule twisted_bimodule(const Algebra& a, const LinMap& sigma);

struct RelativeComplex {
  Subspace B;
  std::vector<Subspace> cochains;    // C^0, ..., C^maxDegree
  std::vector<LinMap> coboundaries;  // δ_n: C^n -> C^{n+1} in coordinates
};

/// Builds C^0, ..., C^maxDegree (maxDegree in 1..3) and the coboundaries
/// between them; checks δ∘δ = 0. Throws InputError if b is not a unital
/// subalgebra or m is not a bimodule, InconsistencyError if δ∘δ ≠ 0.
RelativeComplex relative_complex(const Algebra& a, const Subspace& b, const Bimodule& m,
                                 std::size_t max_degree = 2);

struct Cohomology {
  std::size_t dim;
  /// Cocycles (vectorised maps) whose classes form a basis of H^n.
  std::vector<Vector> representatives;
};

/// dim ker δ_n - dim im δ_{n-1}. Throws InputError unless n + 1 is a
/// computed degree.
Cohomology cohomology_dim(const RelativeComplex& c, std::size_t n);

}  // namespace entwine

#include "entwine/linalg.hpp"

#include <string>

#include "entwine/errors.hpp"

namespace entwine {

EchelonForm row_reduce(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const FieldSpec field = m.field();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t r = lead;
    while (r < rows && m(r, c).is_zero()) ++r;
    if (r == rows) continue;
    if (r != lead)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(lead, j));

    const Scalar inv = m(lead, c).inverse();
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (m(lead, j).is_zero()) continue;
      m(lead, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, c).is_zero()) continue;
      const Scalar factor = -m(i, c);
      for (std::size_t j : support) m(i, j).add_product(factor, m(lead, j));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(field, pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < cols; ++j) reduced(r, j) = m(r, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

// ------------------------------------------------------------------- Subspace

Subspace::Subspace(TensorShape ambient, EchelonForm echelon)
    : ambient_(std::move(ambient)),
      basis_(std::move(echelon.reduced)),
      pivots_(std::move(echelon.pivots)) {
  if (basis_.cols() != ambient_.total()) throw InputError("subspace basis does not fit ambient shape");
}

Subspace Subspace::span(FieldSpec field, TensorShape ambient, const std::vector<Vector>& vectors) {
  Matrix rows(field, vectors.size(), ambient.total());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient.total()) throw InputError("spanning vector has wrong length");
    for (std::size_t c = 0; c < ambient.total(); ++c) rows(r, c) = vectors[r][c];
  }
  return row_space(std::move(ambient), rows);
}

Subspace Subspace::row_space(TensorShape ambient, const Matrix& rows) {
  return Subspace(std::move(ambient), row_reduce(rows));
}

Subspace Subspace::zero(FieldSpec field, TensorShape ambient) {
  const std::size_t n = ambient.total();
  return Subspace(std::move(ambient), EchelonForm{Matrix(field, 0, n), {}});
}

Subspace Subspace::whole(FieldSpec field, TensorShape ambient) {
  const std::size_t n = ambient.total();
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(std::move(ambient), EchelonForm{Matrix::identity(field, n), std::move(piv)});
}

namespace {

// v minus its projection along the echelon basis; zero iff v is in the span.
Vector reduce_against(const Matrix& basis, const std::vector<std::size_t>& pivots, Vector v) {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (v[pivots[r]].is_zero()) continue;
    const Scalar factor = -v[pivots[r]];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!basis(r, j).is_zero()) v[j].add_product(factor, basis(r, j));
  }
  return v;
}

}  // namespace

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_.total()) throw InputError("vector does not live in the ambient space");
  return is_zero(reduce_against(basis_, pivots_, v));
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DomainError("vector " + to_string(v) + " is not in the subspace");
  Vector coords;
  coords.reserve(dim());
  for (std::size_t p : pivots_) coords.push_back(v[p]);
  return coords;
}

LinMap Subspace::inclusion() const {
  return LinMap(coordinate_shape(), ambient_, basis_.transpose());
}

LinMap Subspace::retraction() const {
  Matrix m(field(), dim(), ambient_.total());
  for (std::size_t r = 0; r < dim(); ++r) m(r, pivots_[r]) = field().one();
  return LinMap(ambient_, coordinate_shape(), std::move(m));
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_.total() != other.ambient_.total()) throw InputError("sum of subspaces of different spaces");
  return row_space(ambient_, vstack(basis_, other.basis_));
}

// ------------------------------------------------------------------- Quotient

Quotient::Quotient(Subspace relations) : relations_(std::move(relations)) {
  const FieldSpec field = relations_.field();
  const std::size_t n = relations_.ambient().total();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : relations_.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> position(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) {
      position[j] = free_cols.size();
      free_cols.push_back(j);
    }
  const std::size_t q = free_cols.size();

  Matrix sec(field, n, q);
  for (std::size_t i = 0; i < q; ++i) sec(free_cols[i], i) = field.one();

  // e_j for a free column maps to its own coordinate; e_p for the pivot of
  // relation row r is congruent to -(row r restricted to free columns).
  Matrix proj(field, q, n);
  for (std::size_t i = 0; i < q; ++i) proj(i, free_cols[i]) = field.one();
  const Matrix& basis = relations_.basis();
  for (std::size_t r = 0; r < relations_.dim(); ++r) {
    const std::size_t p = relations_.pivots()[r];
    for (std::size_t j : free_cols)
      if (!basis(r, j).is_zero()) proj(position[j], p) = -basis(r, j);
  }
  projection_ = LinMap(relations_.ambient(), TensorShape{q}, std::move(proj));
  section_ = LinMap(TensorShape{q}, relations_.ambient(), std::move(sec));
}

// ------------------------------------------------------------ Affine solving

Vector AffineSolutionSet::member(const std::vector<Scalar>& coeffs) const {
  if (!particular) throw PreconditionError("member() of an infeasible solution set");
  if (coeffs.size() != homogeneous.dim()) throw InputError("coefficient count mismatch");
  Vector v = *particular;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j].add_product(coeffs[i], homogeneous.basis()(i, j));
  }
  return v;
}

AffineSolutionSet solve_affine(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw InputError("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                     std::to_string(m.rows()));
  const FieldSpec field = m.field();
  const std::size_t n = m.cols();
  Matrix aug(field, m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  const EchelonForm ef = row_reduce(std::move(aug));

  AffineSolutionSet out;
  std::vector<bool> is_pivot(n, false);
  bool consistent = true;
  for (std::size_t p : ef.pivots) {
    if (p == n) consistent = false;
    else is_pivot[p] = true;
  }
  if (consistent) {
    Vector x(n, field.zero());
    for (std::size_t r = 0; r < ef.rank(); ++r) x[ef.pivots[r]] = ef.reduced(r, n);
    out.particular = std::move(x);
  }
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector k(n, field.zero());
    k[f] = field.one();
    for (std::size_t r = 0; r < ef.rank(); ++r)
      if (ef.pivots[r] < n && !ef.reduced(r, f).is_zero()) k[ef.pivots[r]] = -ef.reduced(r, f);
    kernel.push_back(std::move(k));
  }
  out.homogeneous = Subspace::span(field, TensorShape{n}, kernel);
  return out;
}

AffineSolutionSet solve_affine(const LinMap& m, const Vector& b) {
  AffineSolutionSet s = solve_affine(m.matrix(), b);
  // Carry the domain shape so callers can unflatten solution vectors.
  s.homogeneous = Subspace::row_space(m.domain(), s.homogeneous.basis());
  return s;
}

std::pair<Subspace, Subspace> kernel_image(const LinMap& m) {
  AffineSolutionSet s = solve_affine(m, zero_vector(m.field(), m.codomain().total()));
  Subspace image = Subspace::row_space(m.codomain(), m.matrix().transpose());
  return {std::move(s.homogeneous), std::move(image)};
}

LinMap inverse(const LinMap& m) {
  const std::size_t n = m.domain().total();
  if (m.codomain().total() != n)
    throw DomainError("map " + m.domain().str() + " -> " + m.codomain().str() + " is not square");
  const FieldSpec field = m.field();
  Matrix aug(field, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m.matrix()(r, c);
    aug(r, n + r) = field.one();
  }
  const EchelonForm ef = row_reduce(std::move(aug));
  if (ef.rank() < n || (n > 0 && ef.pivots[n - 1] != n - 1))
    throw DomainError("map is singular");
  Matrix inv(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return LinMap(m.codomain(), m.domain(), std::move(inv));
}

LinMap corestrict(const LinMap& map, const Subspace& target, const char* what) {
  return corestrict(map, target, 1, 1, what);
}

LinMap corestrict(const LinMap& map, const Subspace& target, std::size_t left, std::size_t right,
                  const char* what) {
  const FieldSpec k = map.field();
  if (map.codomain().total() != left * target.ambient().total() * right)
    throw InputError(std::string("corestriction target has the wrong ambient space: ") + what);
  const TensorShape l{left}, r{right};
  const LinMap ret = kron({LinMap::identity(k, l), target.retraction(), LinMap::identity(k, r)});
  const LinMap inc = kron({LinMap::identity(k, l), target.inclusion(), LinMap::identity(k, r)});
  LinMap out = ret * map;
  const LinMap back = inc * out;
  for (std::size_t c = 0; c < map.domain().total(); ++c)
    for (std::size_t row = 0; row < map.codomain().total(); ++row)
      if (!(back.matrix()(row, c) == map.matrix()(row, c)))
        throw InconsistencyError(std::string(what) + ": image of basis vector " +
                                 std::to_string(c) + " leaves the target subspace");
  const TensorShape coords = left == 1 && right == 1 ? target.coordinate_shape()
                                                     : l * target.coordinate_shape() * r;
  return out.reshaped(map.domain(), coords);
}

LinMap descend(const LinMap& map, const Quotient& q, std::size_t left, std::size_t right,
               const char* what) {
  const FieldSpec k = map.field();
  if (map.domain().total() != left * q.ambient().total() * right)
    throw InputError(std::string("map does not start at the quotient's ambient space: ") + what);
  const TensorShape l{left}, r{right};
  const LinMap rel = kron({LinMap::identity(k, l), q.relations().inclusion(), LinMap::identity(k, r)});
  if (!(map * rel).matrix().is_zero())
    throw InconsistencyError(std::string(what) + " is not well defined on the quotient");
  const LinMap sec = kron({LinMap::identity(k, l), q.section(), LinMap::identity(k, r)});
  const TensorShape coords =
      left == 1 && right == 1 ? TensorShape{q.dim()} : l * TensorShape{q.dim()} * r;
  return (map * sec).reshaped(coords, map.codomain());
}

}  // namespace entwine

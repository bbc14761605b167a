#pragma once

// Dense exact matrices and linear maps between iterated tensor products.
//
// Basis vectors of V1 ⊗ ... ⊗ Vn are flattened row-major: the leftmost
// factor is the most significant digit. A LinMap stores its matrix with
// codomain-total rows and domain-total columns.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "entwine/scalar.hpp"

namespace entwine {

using Vector = std::vector<Scalar>;

class TensorShape {
 public:
  TensorShape() = default;
  TensorShape(std::initializer_list<std::size_t> factors) : factors_(factors) {}
  explicit TensorShape(std::vector<std::size_t> factors) : factors_(std::move(factors)) {}

  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t total() const;

  std::size_t flatten(std::span<const std::size_t> index) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

  friend TensorShape operator*(const TensorShape& a, const TensorShape& b);
  friend bool operator==(const TensorShape&, const TensorShape&) = default;

  std::string str() const;

 private:
  std::vector<std::size_t> factors_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows);
  static Matrix column(const Vector& v);
  static Matrix row(const Vector& v);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  Vector apply(const Vector& v) const;

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  friend Matrix kron(const Matrix& a, const Matrix& b);
  /// Rows of `top` followed by rows of `bottom`.
  friend Matrix vstack(const Matrix& top, const Matrix& bottom);

  const std::vector<Scalar>& data() const { return data_; }

 private:
  FieldSpec field_ = FieldSpec::rationals();
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

class LinMap {
 public:
  LinMap() = default;
  /// Throws InputError unless the matrix is codomain.total() x domain.total().
  LinMap(TensorShape domain, TensorShape codomain, Matrix matrix);

  static LinMap zero(FieldSpec field, TensorShape domain, TensorShape codomain);
  static LinMap identity(FieldSpec field, TensorShape shape);
  /// V ⊗ W -> W ⊗ V.
  static LinMap twist(FieldSpec field, const TensorShape& v, const TensorShape& w);
  /// Moves factor i of `shape` to position perm[i] of the result.
  static LinMap permutation(FieldSpec field, const TensorShape& shape,
                            const std::vector<std::size_t>& perm);
  /// k -> V, 1 |-> v.
  static LinMap from_vector(const TensorShape& shape, const Vector& v);
  /// V -> k, x |-> <f, x>.
  static LinMap from_covector(const TensorShape& shape, const Vector& f);

  const TensorShape& domain() const { return domain_; }
  const TensorShape& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }
  FieldSpec field() const { return matrix_.field(); }

  /// Same matrix with relabelled shapes of equal totals.
  LinMap reshaped(TensorShape domain, TensorShape codomain) const;
  Vector apply(const Vector& v) const;
  /// Column of the basis element with the given multi-index.
  Vector image_of(std::span<const std::size_t> domain_index) const;
  LinMap transpose() const;

  /// (*this) ∘ inner; throws InputError on total mismatch.
  LinMap after(const LinMap& inner) const;
  friend LinMap operator*(const LinMap& outer, const LinMap& inner) { return outer.after(inner); }
  friend LinMap operator+(const LinMap& a, const LinMap& b);
  friend LinMap operator-(const LinMap& a, const LinMap& b);
  friend LinMap operator*(const LinMap& a, const Scalar& s);
  friend bool operator==(const LinMap& a, const LinMap& b);

  friend LinMap kron(const LinMap& f, const LinMap& g);

 private:
  TensorShape domain_;
  TensorShape codomain_;
  Matrix matrix_;
};

LinMap kron(std::initializer_list<LinMap> maps);

/// Rewrites a map X ⊗ Y -> Z as X -> Z ⊗ Y* (the trailing `moved` domain
/// factors become trailing codomain factors).
LinMap curry_domain_tail(const LinMap& f, std::size_t moved);
/// Rewrites a map X -> Y ⊗ Z as X ⊗ Z* -> Y (the trailing `moved` codomain
/// factors become trailing domain factors).
LinMap uncurry_codomain_tail(const LinMap& f, std::size_t moved);

/// Column vector <-> matrix of a map, row-major (row = codomain index).
Vector vec(const LinMap& f);
LinMap unvec(FieldSpec field, const TensorShape& domain, const TensorShape& codomain,
             const Vector& v);

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
Vector kron(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
bool is_zero(const Vector& v);

std::string to_string(const Vector& v);
/// One bracketed row per line.
std::string to_string(const Matrix& m);

}  // namespace entwine

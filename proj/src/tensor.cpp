#include "entwine/tensor.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "entwine/errors.hpp"

namespace entwine {

// ---------------------------------------------------------------- TensorShape

std::size_t TensorShape::total() const {
  return std::accumulate(factors_.begin(), factors_.end(), std::size_t{1},
                         std::multiplies<>());
}

std::size_t TensorShape::flatten(std::span<const std::size_t> index) const {
  if (index.size() != factors_.size()) throw InputError("index rank mismatch for shape " + str());
  std::size_t flat = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (index[i] >= factors_[i]) throw InputError("index out of range for shape " + str());
    flat = flat * factors_[i] + index[i];
  }
  return flat;
}

std::vector<std::size_t> TensorShape::unflatten(std::size_t flat) const {
  std::vector<std::size_t> index(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    index[i] = flat % factors_[i];
    flat /= factors_[i];
  }
  return index;
}

TensorShape operator*(const TensorShape& a, const TensorShape& b) {
  std::vector<std::size_t> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return TensorShape(std::move(f));
}

std::string TensorShape::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
  os << ']';
  return os.str();
}

// --------------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(const Vector& v) {
  if (v.empty()) return Matrix();
  Matrix m(v.front().field(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::row(const Vector& v) {
  if (v.empty()) return Matrix();
  Matrix m(v.front().field(), 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InputError("vector length does not match matrix columns");
  Vector out(rows_, field_.zero());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw InputError("matrix product dimension mismatch: " + std::to_string(a.cols_) + " vs " +
                     std::to_string(b.rows_));
  // Most operands are Kronecker products with identities, so walk the
  // nonzero entries of each row of b only.
  std::vector<std::vector<std::size_t>> support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (!b(k, j).is_zero()) support[k].push_back(j);
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j : support[k]) c(i, j).add_product(x, b(k, j));
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t ar = 0; ar < a.rows_; ++ar)
    for (std::size_t ac = 0; ac < a.cols_; ++ac) {
      const Scalar& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows_; ++br)
        for (std::size_t bc = 0; bc < b.cols_; ++bc) {
          const Scalar& y = b(br, bc);
          if (!y.is_zero()) k(ar * b.rows_ + br, ac * b.cols_ + bc) = x * y;
        }
    }
  return k;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw InputError("vstack column mismatch");
  Matrix m = top;
  m.rows_ += bottom.rows_;
  m.data_.insert(m.data_.end(), bottom.data_.begin(), bottom.data_.end());
  return m;
}

// --------------------------------------------------------------------- LinMap

LinMap::LinMap(TensorShape domain, TensorShape codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.total() || matrix_.cols() != domain_.total())
    throw InputError("matrix " + std::to_string(matrix_.rows()) + "x" +
                     std::to_string(matrix_.cols()) + " does not fit map " + domain_.str() +
                     " -> " + codomain_.str());
}

LinMap LinMap::zero(FieldSpec field, TensorShape domain, TensorShape codomain) {
  Matrix m(field, codomain.total(), domain.total());
  return LinMap(std::move(domain), std::move(codomain), std::move(m));
}

LinMap LinMap::identity(FieldSpec field, TensorShape shape) {
  Matrix m = Matrix::identity(field, shape.total());
  return LinMap(shape, shape, std::move(m));
}

LinMap LinMap::twist(FieldSpec field, const TensorShape& v, const TensorShape& w) {
  const std::size_t nv = v.total(), nw = w.total();
  Matrix m(field, nw * nv, nv * nw);
  for (std::size_t x = 0; x < nv; ++x)
    for (std::size_t y = 0; y < nw; ++y) m(y * nv + x, x * nw + y) = field.one();
  return LinMap(v * w, w * v, std::move(m));
}

LinMap LinMap::permutation(FieldSpec field, const TensorShape& shape,
                           const std::vector<std::size_t>& perm) {
  const auto& f = shape.factors();
  if (perm.size() != f.size()) throw InputError("permutation rank mismatch");
  std::vector<std::size_t> out(f.size());
  std::vector<bool> seen(f.size(), false);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (perm[i] >= f.size() || seen[perm[i]]) throw InputError("not a permutation");
    seen[perm[i]] = true;
    out[perm[i]] = f[i];
  }
  TensorShape target(out);
  Matrix m(field, shape.total(), shape.total());
  std::vector<std::size_t> j(f.size());
  for (std::size_t flat = 0; flat < shape.total(); ++flat) {
    const auto idx = shape.unflatten(flat);
    for (std::size_t i = 0; i < f.size(); ++i) j[perm[i]] = idx[i];
    m(target.flatten(j), flat) = field.one();
  }
  return LinMap(shape, target, std::move(m));
}

LinMap LinMap::from_vector(const TensorShape& shape, const Vector& v) {
  if (v.size() != shape.total()) throw InputError("vector does not match shape " + shape.str());
  if (v.empty()) throw InputError("cannot infer field of an empty vector");
  return LinMap(TensorShape{}, shape, Matrix::column(v));
}

LinMap LinMap::from_covector(const TensorShape& shape, const Vector& f) {
  if (f.size() != shape.total()) throw InputError("covector does not match shape " + shape.str());
  if (f.empty()) throw InputError("cannot infer field of an empty covector");
  return LinMap(shape, TensorShape{}, Matrix::row(f));
}

LinMap LinMap::reshaped(TensorShape domain, TensorShape codomain) const {
  return LinMap(std::move(domain), std::move(codomain), matrix_);
}

Vector LinMap::apply(const Vector& v) const { return matrix_.apply(v); }

Vector LinMap::image_of(std::span<const std::size_t> domain_index) const {
  return matrix_.column_vector(domain_.flatten(domain_index));
}

LinMap LinMap::transpose() const { return LinMap(codomain_, domain_, matrix_.transpose()); }

LinMap LinMap::after(const LinMap& inner) const {
  if (inner.codomain_.total() != domain_.total())
    throw InputError("cannot compose " + domain_.str() + "->" + codomain_.str() + " after " +
                     inner.domain_.str() + "->" + inner.codomain_.str());
  return LinMap(inner.domain_, codomain_, matrix_ * inner.matrix_);
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  if (a.domain_.total() != b.domain_.total() || a.codomain_.total() != b.codomain_.total())
    throw InputError("sum of maps with different shapes");
  return LinMap(a.domain_, a.codomain_, a.matrix_ + b.matrix_);
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  if (a.domain_.total() != b.domain_.total() || a.codomain_.total() != b.codomain_.total())
    throw InputError("difference of maps with different shapes");
  return LinMap(a.domain_, a.codomain_, a.matrix_ - b.matrix_);
}

LinMap operator*(const LinMap& a, const Scalar& s) {
  return LinMap(a.domain_, a.codomain_, a.matrix_ * s);
}

bool operator==(const LinMap& a, const LinMap& b) {
  return a.domain_.total() == b.domain_.total() && a.codomain_.total() == b.codomain_.total() &&
         a.matrix_ == b.matrix_;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  return LinMap(f.domain_ * g.domain_, f.codomain_ * g.codomain_, kron(f.matrix_, g.matrix_));
}

LinMap kron(std::initializer_list<LinMap> maps) {
  if (maps.size() == 0) throw InputError("kron of no maps");
  auto it = maps.begin();
  LinMap acc = *it++;
  for (; it != maps.end(); ++it) acc = kron(acc, *it);
  return acc;
}

namespace {

std::pair<TensorShape, TensorShape> split_tail(const TensorShape& s, std::size_t moved) {
  const auto& f = s.factors();
  if (moved > f.size()) throw InputError("cannot move more factors than the shape has");
  const auto cut = f.begin() + static_cast<std::ptrdiff_t>(f.size() - moved);
  return {TensorShape(std::vector<std::size_t>(f.begin(), cut)),
          TensorShape(std::vector<std::size_t>(cut, f.end()))};
}

}  // namespace

LinMap curry_domain_tail(const LinMap& f, std::size_t moved) {
  const auto [x, y] = split_tail(f.domain(), moved);
  const std::size_t nx = x.total(), ny = y.total(), nz = f.codomain().total();
  Matrix m(f.field(), nz * ny, nx);
  for (std::size_t z = 0; z < nz; ++z)
    for (std::size_t xi = 0; xi < nx; ++xi)
      for (std::size_t yi = 0; yi < ny; ++yi) m(z * ny + yi, xi) = f.matrix()(z, xi * ny + yi);
  return LinMap(x, f.codomain() * y, std::move(m));
}

LinMap uncurry_codomain_tail(const LinMap& f, std::size_t moved) {
  const auto [y, z] = split_tail(f.codomain(), moved);
  const std::size_t nx = f.domain().total(), ny = y.total(), nz = z.total();
  Matrix m(f.field(), ny, nx * nz);
  for (std::size_t yi = 0; yi < ny; ++yi)
    for (std::size_t xi = 0; xi < nx; ++xi)
      for (std::size_t zi = 0; zi < nz; ++zi) m(yi, xi * nz + zi) = f.matrix()(yi * nz + zi, xi);
  return LinMap(f.domain() * z, y, std::move(m));
}

Vector vec(const LinMap& f) { return f.matrix().data(); }

LinMap unvec(FieldSpec field, const TensorShape& domain, const TensorShape& codomain,
             const Vector& v) {
  if (v.size() != domain.total() * codomain.total())
    throw InputError("vectorised map has wrong length");
  Matrix m(field, codomain.total(), domain.total());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = v[r * m.cols() + c];
  return LinMap(domain, codomain, std::move(m));
}

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v(n, field.zero());
  v.at(i) = field.one();
  return v;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector sum length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector difference length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace entwine

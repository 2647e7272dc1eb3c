#include "symalg/matrix.hpp"

#include <algorithm>
#include <string>

#include "symalg/errors.hpp"

namespace symalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_positive(std::size_t n) {
  if (n == 0) throw DimensionError("dimension must be positive");
}

}  // namespace

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix::Matrix(std::size_t n, std::vector<Scalar> entries)
    : rows_(n), cols_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw DimensionError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

std::size_t Matrix::n() const {
  if (!is_square()) {
    throw DimensionError("matrix is " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                         ", not square");
  }
  return rows_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("block out of range");
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Scalar Matrix::total_sum() const {
  Scalar s;
  for (const auto& x : entries_) s += x;
  return s;
}

Vector Matrix::vectorize() const { return Vector(entries_); }

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

Matrix operator-(const Matrix& a) { return Scalar(-1) * a; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) out(i, j) = s * a(i, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector size mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Scalar dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionError("dot: size mismatch");
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
  }
  return s;
}

Matrix outer(const Vector& u, const Vector& v) {
  Matrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

Vector left_mul(const Vector& v, const Matrix& a) {
  if (a.rows() != v.size()) throw DimensionError("vector-matrix size mismatch");
  Vector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
  }
  return out;
}

Scalar bilinear(const Vector& u, const Matrix& a, const Vector& v) { return dot(u, a * v); }

Matrix special_matrix(SpecialMatrix kind, std::size_t n) {
  require_positive(n);
  Matrix m(n);
  switch (kind) {
    case SpecialMatrix::E:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
      }
      break;
    case SpecialMatrix::O:
      break;
    case SpecialMatrix::J:
      for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
      break;
    case SpecialMatrix::I:
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
      break;
    case SpecialMatrix::X: {
      const std::size_t nu = n / 2;
      const Scalar r = Scalar::inv_sqrt2();
      // Upper-left I/r2, upper-right J/r2, lower-left J/r2, lower-right -I/r2;
      // odd orders carry a 1 at the centre.
      const std::size_t off = n - nu;  // first row/column of the lower block
      for (std::size_t i = 0; i < nu; ++i) {
        m(i, i) = r;
        m(i, off + nu - 1 - i) = r;
        m(off + i, nu - 1 - i) = r;
        m(off + i, off + i) = -r;
      }
      if (n % 2 == 1) m(nu, nu) = 1;
      break;
    }
  }
  return m;
}

Vector special_vector(SpecialVector kind, std::size_t n) {
  require_positive(n);
  Vector v(n);
  for (std::size_t j = 0; j < n; ++j) {
    switch (kind) {
      case SpecialVector::ones:
        v[j] = 1;
        break;
      case SpecialVector::zeros:
        break;
      case SpecialVector::sigma:
        v[j] = j % 2 == 0 ? 1 : -1;
        break;
    }
  }
  return v;
}

Matrix stack_rows(std::span<const Vector> rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols()) throw DimensionError("stack_rows: ragged rows");
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

Echelon row_reduce(Matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::size_t nullspace_dim(const Matrix& a) { return a.cols() - rank(a); }

std::vector<Vector> nullspace_basis(const Matrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(a.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

Vector RowSpace::residual(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("RowSpace: vector size mismatch");
  Vector r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (r[p].is_zero()) continue;
    const Scalar f = r[p];
    const Vector& b = basis_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j].is_zero()) r[j] -= f * b[j];
    }
  }
  return r;
}

bool RowSpace::contains(const Vector& v) const { return residual(v).is_zero(); }

bool RowSpace::add(const Vector& v) {
  Vector r = residual(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = r[p].inverse();
  for (std::size_t j = p; j < dim_; ++j) {
    if (!r[j].is_zero()) r[j] *= inv;
  }
  for (auto& b : basis_) {
    if (b[p].is_zero()) continue;
    const Scalar f = b[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!r[j].is_zero()) b[j] -= f * r[j];
    }
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> RowSpace::complement_basis() const {
  std::vector<bool> is_pivot(dim_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (is_pivot[f]) continue;
    Vector x(dim_);
    x[f] = 1;
    for (std::size_t k = 0; k < basis_.size(); ++k) x[pivots_[k]] = -basis_[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace symalg

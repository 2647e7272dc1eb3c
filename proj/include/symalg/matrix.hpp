#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "symalg/scalar.hpp"

namespace symalg {

/// Column vector over Q(sqrt 2).
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : entries_(n) {}
  Vector(std::initializer_list<Scalar> values) : entries_(values) {}
  explicit Vector(std::vector<Scalar> values) : entries_(std::move(values)) {}

  std::size_t size() const { return entries_.size(); }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const;
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix over Q(sqrt 2).
///
/// The symmetry machinery works with square matrices; rectangular shapes
/// appear for block parameters (odd-order Phi/Psi) and constraint systems.
class Matrix {
 public:
  Matrix() = default;
  /// Square zero matrix of order n.
  explicit Matrix(std::size_t n) : Matrix(n, n) {}
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  /// Square matrix from n*n row-major entries; throws DimensionError.
  Matrix(std::size_t n, std::vector<Scalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Order of a square matrix; throws DimensionError otherwise.
  std::size_t n() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Scalar> entries() const { return entries_; }
  std::span<const Scalar> row(std::size_t i) const {
    return std::span<const Scalar>(entries_).subspan(i * cols_, cols_);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  bool is_zero() const;
  Scalar total_sum() const;

  /// Row-major flattening, the coordinate form used by constraint systems.
  Vector vectorize() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

inline Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
inline Matrix mat_sub(const Matrix& a, const Matrix& b) { return a - b; }
inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
inline Matrix mat_scale(const Scalar& s, const Matrix& a) { return s * a; }
inline Matrix transpose(const Matrix& a) { return a.transpose(); }

Scalar dot(const Vector& u, const Vector& v);
/// u v^T
Matrix outer(const Vector& u, const Vector& v);
/// v^T A (as a vector)
Vector left_mul(const Vector& v, const Matrix& a);
/// u^T A v
Scalar bilinear(const Vector& u, const Matrix& a, const Vector& v);

enum class SpecialMatrix { E, O, J, I, X };
enum class SpecialVector { ones, zeros, sigma };

/// E: all ones, O: zero, J: antidiagonal ones, I: identity,
/// X: the orthogonal symmetric involution used for block representations.
/// Throws DimensionError for n == 0.
Matrix special_matrix(SpecialMatrix kind, std::size_t n);
/// sigma has (-1)^(j-1) in position j (1-based). Throws DimensionError for n == 0.
Vector special_vector(SpecialVector kind, std::size_t n);

inline Matrix ones_matrix(std::size_t n) { return special_matrix(SpecialMatrix::E, n); }
inline Matrix zero_matrix(std::size_t n) { return special_matrix(SpecialMatrix::O, n); }
inline Matrix exchange_matrix(std::size_t n) { return special_matrix(SpecialMatrix::J, n); }
inline Matrix identity_matrix(std::size_t n) { return special_matrix(SpecialMatrix::I, n); }
inline Matrix block_transform_matrix(std::size_t n) { return special_matrix(SpecialMatrix::X, n); }
inline Vector ones_vector(std::size_t n) { return special_vector(SpecialVector::ones, n); }
inline Vector zero_vector(std::size_t n) { return special_vector(SpecialVector::zeros, n); }
inline Vector sigma_vector(std::size_t n) { return special_vector(SpecialVector::sigma, n); }

/// Matrix whose i-th row is rows[i].
Matrix stack_rows(std::span<const Vector> rows);

// Exact elimination over Q(sqrt 2). Pivots are the first nonzero entry of
// each column; no magnitude pivoting.

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix a);
std::size_t rank(const Matrix& a);
/// cols - rank
std::size_t nullspace_dim(const Matrix& a);
/// Basis of {x : A x = 0}, one vector per free column.
std::vector<Vector> nullspace_basis(const Matrix& a);

/// Incrementally maintained reduced basis of a subspace of K^dim.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }

  /// Adds v; returns true if the rank grew.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  /// v minus its reduction against the basis; zero iff v lies in the span.
  Vector residual(const Vector& v) const;

  const std::vector<Vector>& basis() const { return basis_; }
  /// Basis of the solution space {x : b . x = 0 for every basis row b}.
  std::vector<Vector> complement_basis() const;

 private:
  std::size_t dim_;
  // Each basis row is normalised to 1 at its pivot and zero at every other
  // row's pivot.
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace symalg

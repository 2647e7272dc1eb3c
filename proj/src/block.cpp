#include "symalg/block.hpp"

#include "symalg/errors.hpp"

namespace symalg {

int nu_sign(std::size_t nu) { return nu % 2 == 0 ? 1 : -1; }

BlockForm::BlockForm(Matrix conjugate) : c_(std::move(conjugate)) {
  if (!c_.is_square() || c_.rows() == 0) {
    throw DimensionError("block form needs a nonempty square matrix");
  }
}

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(what) + " must be " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void require_size(const Vector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + " must have length " + std::to_string(n));
  }
}

}  // namespace

BlockForm BlockForm::even(const Matrix& y, const Matrix& vt, const Matrix& w, const Matrix& z) {
  const std::size_t nu = y.rows();
  require_shape(y, nu, nu, "Y");
  require_shape(vt, nu, nu, "V^T");
  require_shape(w, nu, nu, "W");
  require_shape(z, nu, nu, "Z");
  Matrix c(2 * nu);
  c.set_block(0, 0, y);
  c.set_block(0, nu, vt);
  c.set_block(nu, 0, w);
  c.set_block(nu, nu, z);
  return BlockForm(std::move(c));
}

BlockForm BlockForm::odd(const Matrix& y, const Vector& v, const Matrix& vt, const Vector& y_row,
                         const Scalar& alpha, const Vector& z_row, const Matrix& w,
                         const Vector& x, const Matrix& z) {
  const std::size_t nu = y.rows();
  require_shape(y, nu, nu, "Y");
  require_shape(vt, nu, nu, "V^T");
  require_shape(w, nu, nu, "W");
  require_shape(z, nu, nu, "Z");
  require_size(v, nu, "v");
  require_size(y_row, nu, "y");
  require_size(z_row, nu, "z");
  require_size(x, nu, "x");
  const std::size_t lo = nu + 1;
  Matrix c(2 * nu + 1);
  c.set_block(0, 0, y);
  c.set_block(0, lo, vt);
  c.set_block(lo, 0, w);
  c.set_block(lo, lo, z);
  for (std::size_t i = 0; i < nu; ++i) {
    c(i, nu) = v[i];
    c(lo + i, nu) = x[i];
    c(nu, i) = y_row[i];
    c(nu, lo + i) = z_row[i];
  }
  c(nu, nu) = alpha;
  return BlockForm(std::move(c));
}

Matrix BlockForm::top_left() const { return c_.block(0, 0, nu(), nu()); }
Matrix BlockForm::top_right() const { return c_.block(0, lower(), nu(), nu()); }
Matrix BlockForm::bottom_left() const { return c_.block(lower(), 0, nu(), nu()); }
Matrix BlockForm::bottom_right() const { return c_.block(lower(), lower(), nu(), nu()); }

void BlockForm::require_odd() const {
  if (parity() != Parity::odd) throw DimensionError("centre views exist only for odd order");
}

Vector BlockForm::centre_column_top() const {
  require_odd();
  Vector v(nu());
  for (std::size_t i = 0; i < nu(); ++i) v[i] = c_(i, nu());
  return v;
}

Vector BlockForm::centre_column_bottom() const {
  require_odd();
  Vector v(nu());
  for (std::size_t i = 0; i < nu(); ++i) v[i] = c_(lower() + i, nu());
  return v;
}

Vector BlockForm::centre_row_left() const {
  require_odd();
  Vector v(nu());
  for (std::size_t i = 0; i < nu(); ++i) v[i] = c_(nu(), i);
  return v;
}

Vector BlockForm::centre_row_right() const {
  require_odd();
  Vector v(nu());
  for (std::size_t i = 0; i < nu(); ++i) v[i] = c_(nu(), lower() + i);
  return v;
}

Scalar BlockForm::centre() const {
  require_odd();
  return c_(nu(), nu());
}

BlockForm to_block(const Matrix& m) {
  const Matrix x = block_transform_matrix(m.n());
  return BlockForm(x * m * x);
}

Matrix from_block(const BlockForm& b) {
  const Matrix x = block_transform_matrix(b.n());
  return x * b.conjugate() * x;
}

Matrix conjugate_J(const Matrix& m) {
  const std::size_t n = m.n();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(n - 1 - i, n - 1 - j);
  }
  return out;
}

}  // namespace symalg

#pragma once

#include <cstddef>

#include "symalg/matrix.hpp"

namespace symalg {

enum class Parity { even, odd };

/// Sign used wherever a formula reads "upper sign if nu is even, lower sign
/// if nu is odd": +1 for even nu, -1 for odd nu. Every parity-dependent sign
/// in the library goes through here.
int nu_sign(std::size_t nu);

/// Block representation C = X_n M X_n of an n x n matrix.
///
/// For n = 2nu the views are
///
///     [ Y  V^T ]
///     [ W  Z   ]
///
/// with nu x nu blocks. For n = 2nu+1 there is an extra centre row and column:
///
///     [ Y    v      V^T ]
///     [ y^T  alpha  z^T ]
///     [ W    x      Z   ]
///
/// Only C is stored; the views are read from it on demand.
class BlockForm {
 public:
  explicit BlockForm(Matrix conjugate);

  static BlockForm even(const Matrix& y, const Matrix& vt, const Matrix& w, const Matrix& z);
  static BlockForm odd(const Matrix& y, const Vector& v, const Matrix& vt, const Vector& y_row,
                       const Scalar& alpha, const Vector& z_row, const Matrix& w,
                       const Vector& x, const Matrix& z);

  std::size_t n() const { return c_.rows(); }
  std::size_t nu() const { return c_.rows() / 2; }
  Parity parity() const { return n() % 2 == 0 ? Parity::even : Parity::odd; }
  const Matrix& conjugate() const { return c_; }

  Matrix top_left() const;      // Y
  Matrix top_right() const;     // V^T
  Matrix bottom_left() const;   // W
  Matrix bottom_right() const;  // Z

  // Odd order only; throw DimensionError for even n.
  Vector centre_column_top() const;     // v
  Vector centre_column_bottom() const;  // x
  Vector centre_row_left() const;       // y
  Vector centre_row_right() const;      // z
  Scalar centre() const;                // alpha

  friend bool operator==(const BlockForm&, const BlockForm&) = default;

 private:
  void require_odd() const;
  std::size_t lower() const { return n() - nu(); }  // first index of the lower block

  Matrix c_;
};

BlockForm to_block(const Matrix& m);
Matrix from_block(const BlockForm& b);

/// J_n M J_n, i.e. M rotated by a half turn.
Matrix conjugate_J(const Matrix& m);

}  // namespace symalg

#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace g2forge {

/// Exact Gauss-Jordan elimination over the rationals. All entries must be
/// exact; callers route float data through the SVD path instead.
struct ExactRref {
  Matrix r;                      // reduced row echelon form
  std::vector<std::size_t> pivot_cols;

  explicit ExactRref(Matrix m);

  std::size_t rank() const { return pivot_cols.size(); }

  /// Basis of the nullspace of the original matrix, one exact vector per
  /// free column.
  std::vector<std::vector<Scalar>> nullspace() const;

  /// A particular exact solution of (original) x = b, if consistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

 private:
  Matrix aug_;   // RREF of [m | I] so solve() can reuse the elimination
  std::size_t n_cols_;
};

/// Nullspace of a float matrix by SVD with a relative singular-value cutoff.
/// Returns the basis columns plus the smallest retained singular value (the
/// rank decision is reported so callers can warn near the cutoff).
struct FloatNullspace {
  std::vector<std::vector<double>> basis;
  double smallest_retained_sv = 0.0;
  double cutoff = 0.0;
};

FloatNullspace float_nullspace(const MatrixD& m, double rel_cutoff = 1e-9);

/// Minimum-norm least-squares solution of m x ~= b via SVD (pseudoinverse
/// convention), plus the achieved residual norm.
struct LeastSquares {
  std::vector<double> x;
  double residual_norm = 0.0;
};

LeastSquares svd_least_squares(const MatrixD& m, const std::vector<double>& b);

}  // namespace g2forge

#include "linsolve.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace g2forge {

namespace {

Eigen::MatrixXd to_eigen(const MatrixD& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

ExactRref::ExactRref(Matrix m) : n_cols_(m.cols()) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!m(i, j).is_exact()) throw std::invalid_argument("exact elimination needs rational entries");

  // Work on [m | I]; the right block records the row operations.
  aug_ = Matrix(rows, cols + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug_(i, j) = m(i, j);
    aug_(i, cols + i) = Scalar(1);
  }

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && aug_(piv, col).is_exact_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < cols + rows; ++j) std::swap(aug_(piv, j), aug_(row, j));
    Scalar inv = Scalar(1) / aug_(row, col);
    for (std::size_t j = 0; j < cols + rows; ++j) aug_(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || aug_(i, col).is_exact_zero()) continue;
      Scalar f = aug_(i, col);
      for (std::size_t j = 0; j < cols + rows; ++j) aug_(i, j) -= f * aug_(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  r = Matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = aug_(i, j);
}

std::vector<std::vector<Scalar>> ExactRref::nullspace() const {
  std::vector<bool> is_pivot(n_cols_, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < n_cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(n_cols_, Scalar(0));
    v[free_col] = Scalar(1);
    for (std::size_t p = 0; p < pivot_cols.size(); ++p)
      v[pivot_cols[p]] = -r(p, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> ExactRref::solve(const std::vector<Scalar>& b) const {
  const std::size_t rows = aug_.rows();
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
  // Reduced rhs = (row-operation block) * b.
  std::vector<Scalar> rb(rows, Scalar(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) rb[i] += aug_(i, n_cols_ + j) * b[j];
  for (std::size_t i = pivot_cols.size(); i < rows; ++i)
    if (!rb[i].is_exact_zero()) return std::nullopt;

  std::vector<Scalar> x(n_cols_, Scalar(0));
  for (std::size_t p = 0; p < pivot_cols.size(); ++p) x[pivot_cols[p]] = rb[p];
  return x;
}

FloatNullspace float_nullspace(const MatrixD& m, double rel_cutoff) {
  Eigen::MatrixXd a = to_eigen(m);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  FloatNullspace out;
  out.cutoff = rel_cutoff * smax;
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i) {
    if (smax > 0.0 && sv(i) > out.cutoff) {
      ++rank;
      out.smallest_retained_sv = sv(i);
    }
  }
  const Eigen::MatrixXd& v = svd.matrixV();
  for (long j = rank; j < v.cols(); ++j) {
    std::vector<double> col(v.rows());
    for (long i = 0; i < v.rows(); ++i) col[i] = v(i, j);
    out.basis.push_back(std::move(col));
  }
  return out;
}

LeastSquares svd_least_squares(const MatrixD& m, const std::vector<double>& b) {
  Eigen::MatrixXd a = to_eigen(m);
  Eigen::VectorXd rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i) = b[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  Eigen::VectorXd x = svd.solve(rhs);
  LeastSquares out;
  out.x.assign(x.data(), x.data() + x.size());
  out.residual_norm = (a * x - rhs).norm();
  return out;
}

}  // namespace g2forge

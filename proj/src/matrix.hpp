#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace g2forge {

/// Dense row-major matrix over an arbitrary scalar. Sized for the small
/// systems in this project (2x2 family blocks up to 49-column derivation
/// systems); no attempt at BLAS-level performance.
template <class S>
class MatrixT {
 public:
  MatrixT() = default;
  MatrixT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, S(0)) {}

  static MatrixT identity(std::size_t n) {
    MatrixT m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static MatrixT diagonal(std::initializer_list<S> diag) {
    MatrixT m(diag.size(), diag.size());
    std::size_t i = 0;
    for (const S& v : diag) m(i, i) = v, ++i;
    return m;
  }

  static MatrixT from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    MatrixT m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (const S& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  MatrixT transpose() const {
    MatrixT t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  S trace() const {
    S acc(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) acc += (*this)(i, i);
    return acc;
  }

  S frobenius_sq() const {
    S acc(0);
    for (const S& v : d_) acc += v * v;
    return acc;
  }

  MatrixT& operator+=(const MatrixT& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }
  MatrixT& operator-=(const MatrixT& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
    return *this;
  }
  MatrixT& operator*=(const S& s) {
    for (S& v : d_) v *= s;
    return *this;
  }

  friend MatrixT operator+(MatrixT a, const MatrixT& b) { return a += b; }
  friend MatrixT operator-(MatrixT a, const MatrixT& b) { return a -= b; }
  friend MatrixT operator*(MatrixT a, const S& s) { return a *= s; }
  friend MatrixT operator*(const S& s, MatrixT a) { return a *= s; }

  friend MatrixT operator*(const MatrixT& a, const MatrixT& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    MatrixT r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  MatrixT symmetric_part() const {
    MatrixT r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r(i, j) = ((*this)(i, j) + (*this)(j, i)) * S(1) / S(2);
    return r;
  }

 private:
  void check_same_shape(const MatrixT& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> d_;
};

using Matrix = MatrixT<Scalar>;
using MatrixD = MatrixT<double>;

template <class S>
MatrixT<S> commutator(const MatrixT<S>& a, const MatrixT<S>& b) {
  return a * b - b * a;
}

inline MatrixD to_double(const Matrix& m) {
  MatrixD r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  return r;
}

}  // namespace g2forge

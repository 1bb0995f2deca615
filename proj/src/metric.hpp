#pragma once

#include <array>
#include <stdexcept>

#include "errors.hpp"
#include "kform.hpp"
#include "matrix.hpp"
#include "scalar_ops.hpp"

namespace g2forge {

/// B(e_i, e_j) vol = (1/6) i_{e_i} phi ^ i_{e_j} phi ^ phi.
template <class S>
MatrixT<S> induced_bilinear(const KFormT<S>& phi) {
  if (phi.degree() != 3) throw bad_input("induced bilinear form expects a 3-form");
  MatrixT<S> b(7, 7);
  std::array<KFormT<S>, 7> contractions;
  for (int i = 1; i <= 7; ++i) contractions[i - 1] = contract(phi, i);
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      KFormT<S> w = wedge(wedge(contractions[i], contractions[j]), phi);
      S v = w.coeff(kVolumeBlade) / S(6);
      b(i, j) = v;
      b(j, i) = v;
    }
  return b;
}

/// All leading principal minors positive (checked via elimination pivots).
template <class S>
bool positive_definite(MatrixT<S> a) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (s_sign(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      S f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

template <class S>
S determinant(MatrixT<S> a) {
  const std::size_t n = a.rows();
  S det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(s_to_double(a(k, k)));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(s_to_double(a(i, k)));
      if (v > best) best = v, piv = i;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      det = -det;
    }
    if (s_is_exact_zero(a(k, k))) return S(0);
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      S f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// g = L L^t, L lower triangular with positive diagonal. Throws (constraint)
/// when g is not positive definite. Exact whenever the pivot roots are.
template <class S>
MatrixT<S> cholesky(const MatrixT<S>& g) {
  const std::size_t n = g.rows();
  MatrixT<S> l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    S diag = g(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (s_sign(diag) <= 0) throw constraint_error("metric is not positive definite");
    l(j, j) = s_sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      S v = g(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

template <class S>
MatrixT<S> invert_lower_triangular(const MatrixT<S>& l) {
  const std::size_t n = l.rows();
  MatrixT<S> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = S(1) / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      S acc(0);
      for (std::size_t k = j; k < i; ++k) acc += l(i, k) * inv(k, j);
      inv(i, j) = -acc / l(i, i);
    }
  }
  return inv;
}

/// Hodge star of an arbitrary positive-definite metric on the oriented frame:
/// factor g = L L^t, rewrite the form in the orthonormal coframe
/// u^a = sum_i (L^t)_{ai} e^i, star there, and push the result back. The
/// coframe keeps the orientation since det L > 0.
template <class S>
KFormT<S> star_with_metric(const MatrixT<S>& g, const KFormT<S>& a) {
  MatrixT<S> l = cholesky(g);
  MatrixT<S> lt = l.transpose();
  MatrixT<S> linv_t = invert_lower_triangular(l).transpose();  // e^i = sum_a (L^-t)_{ia} u^a
  KFormT<S> in_frame = substitute(a, [&](int r, int c) { return linv_t(r, c); });
  KFormT<S> starred = hodge_star(in_frame);
  return substitute(starred, [&](int r, int c) { return lt(r, c); });
}

}  // namespace g2forge

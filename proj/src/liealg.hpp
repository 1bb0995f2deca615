#pragma once

#include <array>
#include <vector>

#include "exterior.hpp"
#include "kform.hpp"
#include "matrix.hpp"

namespace g2forge {

/// A 7-dimensional Lie algebra given by antisymmetric structure constants
/// c^k_{ij} on the fixed frame: [e_i, e_j] = sum_k c^k_{ij} e_k.
/// Geometric operations require jacobi_residual() to vanish first.
class LieAlgebra {
 public:
  static constexpr int dim = 7;

  /// The zero bracket (abelian, torsion-free baseline).
  LieAlgebra();

  /// From a list of (i, j, k, value) entries: [e_i, e_j] += value * e_k.
  /// The (j, i) constant is filled in antisymmetrically.
  static LieAlgebra from_structure_constants(
      const std::vector<std::tuple<int, int, int, Scalar>>& entries);

  const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

  /// [X, Y] for coordinate vectors on the frame.
  std::array<Scalar, 7> bracket(const std::array<Scalar, 7>& x,
                                const std::array<Scalar, 7>& y) const;

  /// ad(e_i) as a 7x7 matrix (columns are [e_i, e_j]).
  Matrix ad(int i) const;

  /// Max-norm over basis triples i<j<k of the Jacobi cyclic sum
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]. Exact zero iff the
  /// constants define a Lie algebra (in exact mode).
  Scalar jacobi_residual() const;

  bool is_lie_algebra(double tol = kDefaultTol) const {
    return jacobi_residual().is_zero(tol);
  }

  bool all_exact() const;

  /// Chevalley-Eilenberg differential of left-invariant forms, determined by
  /// d xi(X, Y) = -xi([X, Y]) on 1-forms and the graded Leibniz rule.
  KForm differential(const KForm& a) const;

  /// d(e^m), cached.
  const KForm& d_one_form(int m) const { return d_basis_[m - 1]; }

  /// True iff tr(ad X restricted to the subspace) = 0 for every basis vector
  /// of the subspace. The subspace (a list of frame indices) must be closed
  /// under the bracket; throws otherwise.
  bool is_unimodular(const std::vector<int>& subspace, double tol = kDefaultTol) const;
  bool is_unimodular(double tol = kDefaultTol) const;

 private:
  static int idx(int i, int j, int k) { return ((i - 1) * 7 + (j - 1)) * 7 + (k - 1); }
  void rebuild_differentials();

  std::array<Scalar, 343> c_{};
  std::array<KForm, 7> d_basis_{};
};

/// A basis of Der(g), the matrices D with D[X,Y] = [DX,Y] + [X,DY].
struct DerivationSpace {
  std::vector<Matrix> basis;
  bool exact = false;                 // basis from exact elimination
  double smallest_retained_sv = 0.0;  // SVD diagnostics (float path only)
  double sv_cutoff = 0.0;

  std::size_t dimension() const { return basis.size(); }

  /// True when the smallest retained singular value sits within a factor 10
  /// of the cutoff: the dimension may be overestimated near degenerate data.
  bool rank_is_marginal() const {
    return !exact && smallest_retained_sv > 0.0 && smallest_retained_sv < 10.0 * sv_cutoff;
  }
};

/// Nullspace of the linear system D[e_i,e_j] - [De_i,e_j] - [e_i,De_j] = 0
/// over the 49 matrix entries. Exact elimination when the structure constants
/// are exact, rank-revealing SVD with relative cutoff 1e-9 otherwise.
DerivationSpace derivation_space(const LieAlgebra& g, bool force_float = false);

/// Max-norm residual of the derivation identity for a candidate D.
double derivation_residual(const LieAlgebra& g, const Matrix& d);

}  // namespace g2forge

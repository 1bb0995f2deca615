#pragma once

#include <optional>

#include "exterior.hpp"
#include "liealg.hpp"

namespace g2forge {

/// Torsion forms of a 3-form structure: the components of d(phi) and
/// d(star phi) under the irreducible module decomposition,
///   d phi      = tau0 * star(phi) + 3 tau1 ^ phi + star(tau3),
///   d star phi = 4 tau1 ^ star(phi) + tau2 ^ phi,
/// with tau2 of pure type Lambda^2_14 and tau3 of type Lambda^3_27.
struct TorsionForms {
  Scalar tau0;
  KForm tau1{1};
  KForm tau2{2};
  KForm tau3{3};

  Scalar lambda1() const { return tau1.coeff(Blade::of({1})); }
  Scalar lambda2() const { return tau1.coeff(Blade::of({2})); }
  Scalar lambda7() const { return tau1.coeff(Blade::of({7})); }
};

/// Symmetric bilinear form induced by a positive 3-form, normalised so the
/// standard phi on the standard frame yields the identity.
struct MetricTensor {
  Matrix g{7, 7};
  Scalar volume;  // coefficient of e^{1...7} in the volume form

  bool is_identity(double tol = kDefaultTol) const;
};

enum class FrameStatus {
  standard_orthonormal,  // the fixed frame is declared orthonormal oriented
  general,               // metric induced from phi
};

/// A left-invariant structure: a Lie algebra plus a positive 3-form. In
/// standard-orthonormal mode the frame metric is the identity by fiat; in
/// general mode it is recomputed from phi.
struct G2Structure {
  LieAlgebra algebra;
  KForm phi{3};
  FrameStatus frame_status = FrameStatus::standard_orthonormal;

  static G2Structure standard(LieAlgebra g) {
    return G2Structure{std::move(g), standard_phi<Scalar>(), FrameStatus::standard_orthonormal};
  }
};

/// B(X,Y) vol = (1/6) i_X phi ^ i_Y phi ^ phi, then g = B / det(B)^{1/9}.
/// Fails (constraint error) when the candidate bilinear form is not positive
/// definite, i.e. when phi is not a positive 3-form.
MetricTensor metric_from_positive_3form(const KForm& phi);

/// Positivity check without throwing.
bool is_positive_3form(const KForm& phi);

/// Hodge star for an arbitrary positive-definite metric: Cholesky-factorise
/// g = L L^t, pull back to an orthonormal coframe, star there, push forward.
/// Exact when the factorisation stays rational.
KForm hodge_star_metric(const MetricTensor& metric, const KForm& a);

/// Hodge star adapted to the structure's frame status.
KForm structure_star(const G2Structure& s, const KForm& a);

/// Hodge Laplacian with the sign convention
///   Delta(alpha) = (-1)^k (d star d star - star d star d) alpha.
KForm hodge_laplacian(const G2Structure& s, const KForm& a);

/// Torsion forms computed purely from the generic differential and star
/// (no family shortcut): the oracle route.
TorsionForms compute_torsion(const G2Structure& s);

/// Orthogonal type components of 2- and 3-forms.
/// Degree 2: Lambda^2_7 (eigenvalue 2 of alpha -> star(phi ^ alpha)) and
/// Lambda^2_14 (eigenvalue -1). Degree 3: span{phi}, {star(phi ^ xi)}, rest.
struct TypeComponents {
  std::optional<KForm> l1;   // degree 3 only
  KForm l7{0};
  std::optional<KForm> l14;  // degree 2 only
  std::optional<KForm> l27;  // degree 3 only
};

TypeComponents type_decompose(const G2Structure& s, const KForm& a);

/// Both sides of the pinching identity for closed structures,
///   d tau  vs  (1/6)|tau|^2 phi + (1/6) star(tau ^ tau),
/// plus the norm of their difference. Requires d phi = 0.
struct ErpComparison {
  KForm lhs{3};
  KForm rhs{3};
  double residual = 0.0;
};

ErpComparison erp_residual(const G2Structure& s, double tol = kDefaultTol);

/// lambda = |tau2|^2 / 7 and |Delta phi - lambda phi|. Requires d phi = 0.
struct EigenformResidual {
  Scalar lambda;
  double residual = 0.0;
};

EigenformResidual eigenform_residual(const G2Structure& s, double tol = kDefaultTol);

}  // namespace g2forge

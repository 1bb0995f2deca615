#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2core.hpp"

namespace g2forge {

/// The two-parameter-block family of solvable Lie algebras: the bracket is
/// determined by A1 in gl_2 and A, B, C in gl_4 via
///   ad(e7)|span{e1,e2} = A1 = [x z; y w],
///   ad(e7)|g1 = A,  ad(e1)|g1 = B,  ad(e2)|g1 = C,
/// with span{e1,e2} abelian, g1 = span{e3..e6} an abelian ideal and
/// span{e1..e6} unimodular. Validity requires
///   tr B = tr C = 0,  [A,B] = xB + yC,  [A,C] = zB + wC,  [B,C] = 0,
/// which is exactly the Jacobi condition for this bracket shape.
class FamilySpec {
 public:
  /// Validates and expands the structure constants. Throws a constraint
  /// error naming every violated condition.
  FamilySpec(Matrix a1, Matrix a, Matrix b, Matrix c);

  /// Violation names ("tr B != 0", "[A,B] != x B + y C", ...); empty when
  /// the matrices define a valid instance.
  static std::vector<std::string> violations(const Matrix& a1, const Matrix& a, const Matrix& b,
                                             const Matrix& c, double tol = kDefaultTol);

  const Matrix& a1() const { return a1_; }
  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  const Matrix& c() const { return c_; }

  Scalar x() const { return a1_(0, 0); }
  Scalar z() const { return a1_(0, 1); }
  Scalar y() const { return a1_(1, 0); }
  Scalar w() const { return a1_(1, 1); }

  const LieAlgebra& algebra() const { return algebra_; }
  G2Structure structure() const { return G2Structure::standard(algebra_); }

 private:
  Matrix a1_, a_, b_, c_;
  LieAlgebra algebra_;
};

/// Expanded structure constants for the family bracket (no validation).
LieAlgebra family_algebra(const Matrix& a1, const Matrix& a, const Matrix& b, const Matrix& c);

/// theta(M) on Lambda^2 g1* in the ordered basis
/// (wbar7, wbar1, wbar2, w7, w1, w2): block form
///   [ M1 - tr(M)/2  |  M2 ]
///   [     M2^t      |  M4 - tr(M)/2 ]
/// with M1, M4 antisymmetric.
Matrix theta_upsilon_matrix(const Matrix& m);

/// The eight derivative/star forms of phi expressed through theta on the
/// Upsilon basis only (no generic Chevalley-Eilenberg differential).
struct DerivedForms {
  KForm dphi{4};
  KForm star_dphi{3};
  KForm d_star_dphi{4};
  KForm star_d_star_dphi{3};
  KForm star_phi{4};
  KForm d_star_phi{5};
  KForm star_d_star_phi{2};
  KForm d_star_d_star_phi{3};

  /// (-1)^3 (d star d star - star d star d) phi assembled from the above.
  KForm laplacian_phi() const { return star_d_star_dphi - d_star_d_star_phi; }
};

DerivedForms specialized_derivative_forms(const FamilySpec& spec);

/// Differential of an arbitrary form through the family formulas alone:
/// the g1 factor of each blade via theta(A), theta(B), theta(C), the g0
/// factors via d e^1 = (x e^1 + z e^2)^e^7, d e^2 = (y e^1 + w e^2)^e^7,
/// d e^7 = 0. An independent route against the generic differential.
KForm family_differential(const FamilySpec& spec, const KForm& a);

/// The 3-form is closed iff all three 2-form residuals vanish:
///   theta(A)w1 - theta(B)w7 - x w1 - y w2,
///   theta(A)w2 - theta(C)w7 - z w1 - w w2,
///   theta(B)w2 - theta(C)w1.
struct ClosednessConditions {
  std::array<KForm, 3> residuals{KForm(2), KForm(2), KForm(2)};
  bool closed(double tol = kDefaultTol) const {
    return residuals[0].is_zero(tol) && residuals[1].is_zero(tol) && residuals[2].is_zero(tol);
  }
};

ClosednessConditions closedness_conditions(const FamilySpec& spec);

/// Coclosed iff tr A = 0 and the 2-form residual
/// theta(A)w7 + theta(B)w1 + theta(C)w2 - tr(A1) w7 vanishes.
struct CoclosednessConditions {
  Scalar trace_a;
  KForm residual{2};
  bool coclosed(double tol = kDefaultTol) const {
    return trace_a.is_zero(tol) && residual.is_zero(tol);
  }
};

CoclosednessConditions coclosedness_conditions(const FamilySpec& spec);

/// Torsion forms from the closed-form coefficient formulas (tau0, tau1 and
/// tau2 entrywise in the matrix coefficients; tau3 through theta on Upsilon).
TorsionForms specialized_torsion(const FamilySpec& spec);

/// Ricci operator in the frame order e1..e7 (the g0 block couples e7,e1,e2;
/// the g0 x g1 block vanishes identically), with scalar curvature, squared
/// norm and the pinching functional F = scal^2 / |Ric|^2 (undefined on flat
/// metrics).
struct RicciData {
  Matrix ricci{7, 7};
  Scalar scalar_curvature;
  Scalar ricci_norm_sq;
  std::optional<Scalar> f_value;  // empty <=> flat

  bool flat(double tol = kDefaultTol) const { return !f_value.has_value(); }
};

RicciData ricci_operator(const FamilySpec& spec, double tol = kDefaultTol);

/// F = scal^2/|Ric|^2; throws a constraint error on flat metrics.
Scalar pinching_functional(const FamilySpec& spec, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Built-in instances addressable from the CLI as gs:<s>, sa:<a>, fr.

/// One-parameter family gs: diagonal ad(e7), closed for every s, Laplacian
/// soliton with c = -15/8 + 8 s^2.
FamilySpec builtin_gs(const Scalar& s);

/// One-parameter family sa: closed for every a, Laplacian soliton with
/// c = -9/2 + 8 a^2.
FamilySpec builtin_sa(const Scalar& a);

/// The fixed steady-soliton instance fr.
FamilySpec builtin_fr();

/// Reference soliton data (c, diagonal D) for the built-in families.
struct ReferenceSoliton {
  Scalar c;
  Matrix d{7, 7};
};

ReferenceSoliton reference_soliton_gs(const Scalar& s);
ReferenceSoliton reference_soliton_sa(const Scalar& a);
ReferenceSoliton reference_soliton_fr();

/// Closed-form pinching values used as fixed-point checks.
Scalar pinching_gs(const Scalar& s);  // (75+64s^2)^2 / (1725+4224s^2+4096s^4)
Scalar pinching_sa(const Scalar& a);  // (27+16a^2)^2 / (153+352a^2+256a^4)

/// The involution intertwining the brackets of gs(s) and gs(-s) while fixing
/// phi: swaps (e1,e2) with (e3,e4), negates e5, e6, fixes e7.
Matrix gs_mirror_map();

/// Eigenvalue multiset of ad(e7) restricted to the centre of the nilradical,
/// exposed as an isomorphism diagnostic for the built-in families.
std::vector<Scalar> nilradical_center_spectrum(const FamilySpec& spec);

}  // namespace g2forge

#include "g2core.hpp"

#include <cmath>

#include "errors.hpp"
#include "linsolve.hpp"
#include "metric.hpp"

namespace g2forge {

bool MetricTensor::is_identity(double tol) const {
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      Scalar want = (i == j) ? Scalar(1) : Scalar(0);
      if (!g(i, j).close_to(want, tol)) return false;
    }
  return true;
}

bool is_positive_3form(const KForm& phi) {
  if (phi.degree() != 3) return false;
  return positive_definite(induced_bilinear(phi));
}

MetricTensor metric_from_positive_3form(const KForm& phi) {
  Matrix b = induced_bilinear(phi);
  if (!positive_definite(b))
    throw constraint_error("3-form is not positive: induced bilinear form fails definiteness");
  Scalar det = determinant(b);
  Scalar scale = det.nth_root(9);
  MetricTensor m;
  m.g = b * (Scalar(1) / scale);
  m.volume = scale;  // sqrt(det g) = det(B)^{1/9}
  return m;
}

KForm hodge_star_metric(const MetricTensor& metric, const KForm& a) {
  return star_with_metric(metric.g, a);
}

KForm structure_star(const G2Structure& s, const KForm& a) {
  if (s.frame_status == FrameStatus::standard_orthonormal) return hodge_star(a);
  return hodge_star_metric(metric_from_positive_3form(s.phi), a);
}

KForm hodge_laplacian(const G2Structure& s, const KForm& a) {
  auto star = [&](const KForm& f) { return structure_star(s, f); };
  const LieAlgebra& g = s.algebra;
  KForm dsds = g.differential(star(g.differential(star(a))));
  KForm sdsd = star(g.differential(star(g.differential(a))));
  KForm delta = dsds - sdsd;
  if (a.degree() % 2 != 0) delta = -delta;
  return delta;
}

TorsionForms compute_torsion(const G2Structure& s) {
  if (!is_positive_3form(s.phi)) throw constraint_error("torsion needs a positive 3-form");
  auto star = [&](const KForm& f) { return structure_star(s, f); };
  const KForm& phi = s.phi;
  const KForm star_phi = star(phi);
  const KForm dphi = s.algebra.differential(phi);
  const KForm dstar_phi = s.algebra.differential(star_phi);

  TorsionForms t;
  t.tau0 = wedge(dphi, phi).coeff(kVolumeBlade) / Scalar(7);
  t.tau1 = star(wedge(star(dphi), phi)) * frac(-1, 12);
  t.tau2 = -star(dstar_phi) + Scalar(4) * star(wedge(t.tau1, star_phi));
  t.tau3 = star(dphi) - phi * t.tau0 - star(wedge(t.tau1, phi)) * Scalar(3);
  return t;
}

TypeComponents type_decompose(const G2Structure& s, const KForm& a) {
  auto star = [&](const KForm& f) { return structure_star(s, f); };
  const KForm& phi = s.phi;
  TypeComponents out;

  if (a.degree() == 2) {
    // alpha -> star(phi ^ alpha) has eigenvalue 2 on the 7-part, -1 on the
    // 14-part, so the 7-projection is (T + id)/3.
    KForm t = star(wedge(phi, a));
    out.l7 = (t + a) * frac(1, 3);
    out.l14 = a - out.l7;
    return out;
  }

  if (a.degree() == 3) {
    out.l1 = phi * (inner(a, phi) / inner(phi, phi));

    // 7-part: least-squares projection onto span{ star(phi ^ e^i) }.
    std::array<KForm, 7> gen;
    for (int i = 1; i <= 7; ++i) gen[i - 1] = star(wedge(phi, KForm::unit(Blade::of({i}))));
    Matrix gram(7, 7);
    std::vector<Scalar> rhs(7, Scalar(0));
    bool exact = true;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        gram(i, j) = inner(gen[i], gen[j]);
        exact = exact && gram(i, j).is_exact();
      }
      rhs[i] = inner(gen[i], a);
      exact = exact && rhs[i].is_exact();
    }

    std::vector<Scalar> x;
    if (exact) {
      ExactRref solver(gram);
      auto sol = solver.solve(rhs);
      if (!sol) throw Error(Error::Kind::internal, "projection system inconsistent");
      x = *sol;
    } else {
      MatrixD m = to_double(gram);
      std::vector<double> b(7);
      for (int i = 0; i < 7; ++i) b[i] = rhs[i].to_double();
      auto ls = svd_least_squares(m, b);
      for (double v : ls.x) x.push_back(Scalar(v));
    }
    KForm l7(3);
    for (int i = 0; i < 7; ++i) l7 += gen[i] * x[i];
    out.l7 = std::move(l7);
    out.l27 = a - *out.l1 - out.l7;
    return out;
  }

  throw bad_input("type decomposition supports degrees 2 and 3 only");
}

ErpComparison erp_residual(const G2Structure& s, double tol) {
  if (!s.algebra.differential(s.phi).is_zero(tol))
    throw constraint_error("pinching comparison requires a closed 3-form");
  auto star = [&](const KForm& f) { return structure_star(s, f); };
  KForm tau = -star(s.algebra.differential(star(s.phi)));

  ErpComparison out;
  out.lhs = s.algebra.differential(tau);
  out.rhs = s.phi * (inner(tau, tau) / Scalar(6)) + star(wedge(tau, tau)) * frac(1, 6);
  out.residual = (out.lhs - out.rhs).norm();
  return out;
}

EigenformResidual eigenform_residual(const G2Structure& s, double tol) {
  if (!s.algebra.differential(s.phi).is_zero(tol))
    throw constraint_error("eigenform residual requires a closed 3-form");
  auto star = [&](const KForm& f) { return structure_star(s, f); };
  KForm tau = -star(s.algebra.differential(star(s.phi)));

  EigenformResidual out;
  out.lambda = inner(tau, tau) / Scalar(7);
  out.residual = (hodge_laplacian(s, s.phi) - s.phi * out.lambda).norm();
  return out;
}

}  // namespace g2forge

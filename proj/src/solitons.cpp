#include "solitons.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>

#include "errors.hpp"
#include "linsolve.hpp"
#include "metric.hpp"

namespace g2forge {

namespace {

std::vector<Blade> blades_of_degree(int k) {
  std::vector<Blade> out;
  for (int m = 0; m < 128; ++m) {
    Blade b(static_cast<std::uint8_t>(m));
    if (b.degree() == k) out.push_back(b);
  }
  return out;
}

std::vector<double> form_vector(const KForm& f, const std::vector<Blade>& blades) {
  std::vector<double> v(blades.size(), 0.0);
  for (std::size_t i = 0; i < blades.size(); ++i) v[i] = f.coeff(blades[i]).to_double();
  return v;
}

std::vector<MatrixD> orthonormalized(const std::vector<Matrix>& basis) {
  // Modified Gram-Schmidt on vec(D); keeps coefficient norm = Frobenius norm
  // so the SVD minimum-norm solution is minimum-norm in (c, D).
  std::vector<MatrixD> out;
  for (const Matrix& m : basis) {
    MatrixD v = to_double(m);
    for (const MatrixD& u : out) {
      double dot = 0;
      for (std::size_t i = 0; i < 49; ++i)
        dot += v(i / 7, i % 7) * u(i / 7, i % 7);
      for (std::size_t i = 0; i < 49; ++i) v(i / 7, i % 7) -= dot * u(i / 7, i % 7);
    }
    double norm = std::sqrt(v.frobenius_sq());
    if (norm < 1e-12) continue;
    for (std::size_t i = 0; i < 49; ++i) v(i / 7, i % 7) /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

SolitonClass classify(double c, double tol, double scale, bool ricci_convention) {
  if (std::abs(c) < tol * (1.0 + scale)) return SolitonClass::steady;
  bool negative = c < 0;
  if (ricci_convention) return negative ? SolitonClass::expanding : SolitonClass::shrinking;
  return negative ? SolitonClass::shrinking : SolitonClass::expanding;
}

}  // namespace

const char* soliton_class_name(SolitonClass c) {
  switch (c) {
    case SolitonClass::shrinking: return "shrinking";
    case SolitonClass::steady: return "steady";
    case SolitonClass::expanding: return "expanding";
  }
  return "?";
}

SolitonSolution solve_laplacian_soliton(const G2Structure& s, double tol) {
  const KForm delta = hodge_laplacian(s, s.phi);
  // The fit itself runs in binary64, so the SVD nullspace basis (already
  // orthonormal) is the right starting point even for exact algebras.
  DerivationSpace der = derivation_space(s.algebra, /*force_float=*/true);
  std::vector<MatrixD> dir = orthonormalized(der.basis);

  const auto blades = blades_of_degree(3);
  const std::vector<double> phi_vec = form_vector(s.phi, blades);
  const std::vector<double> delta_vec = form_vector(delta, blades);

  // Columns: [phi | -theta(D_i) phi]; unknowns (c, x_i).
  MatrixD design(blades.size(), 1 + dir.size());
  for (std::size_t r = 0; r < blades.size(); ++r) design(r, 0) = phi_vec[r];
  KFormD phi_d = to_double(s.phi);
  for (std::size_t j = 0; j < dir.size(); ++j) {
    KFormD th = theta_action(dir[j], phi_d);
    for (std::size_t r = 0; r < blades.size(); ++r)
      design(r, 1 + j) = -th.coeff(blades[r]);
  }
  LeastSquares ls = svd_least_squares(design, delta_vec);

  SolitonSolution out;
  out.derivation_dim = der.dimension();
  out.derivation_rank_marginal = der.rank_is_marginal();
  out.c = Scalar(ls.x[0]);
  Matrix d(7, 7);
  for (std::size_t j = 0; j < dir.size(); ++j)
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < 7; ++k) d(i, k) += Scalar(ls.x[1 + j] * dir[j](i, k));
  out.d = d;

  // Defect recomputed from scratch: Delta phi - c phi + theta(D) phi.
  KForm defect = delta - s.phi * out.c + theta_action(d, s.phi);
  out.residual = defect.norm();
  out.is_soliton = out.residual < tol;
  out.classification = classify(ls.x[0], tol, delta.norm(), /*ricci_convention=*/false);
  if (out.is_soliton && out.classification == SolitonClass::shrinking)
    out.singularity_time = -3.0 / (2.0 * ls.x[0]);
  return out;
}

SolitonSolution solve_ricci_soliton(const FamilySpec& spec, double tol) {
  return solve_ricci_soliton(spec.algebra(), ricci_operator(spec).ricci, tol);
}

SolitonSolution solve_ricci_soliton(const LieAlgebra& g, const Matrix& ricci, double tol) {
  DerivationSpace der = derivation_space(g, /*force_float=*/true);
  std::vector<MatrixD> dir = orthonormalized(der.basis);

  // Columns: [vec(id) | vec(D_i)]; target vec(Ric).
  MatrixD design(49, 1 + dir.size());
  std::vector<double> target(49);
  for (int i = 0; i < 7; ++i)
    for (int k = 0; k < 7; ++k) {
      std::size_t r = static_cast<std::size_t>(i * 7 + k);
      design(r, 0) = (i == k) ? 1.0 : 0.0;
      target[r] = ricci(i, k).to_double();
      for (std::size_t j = 0; j < dir.size(); ++j) design(r, 1 + j) = dir[j](i, k);
    }
  LeastSquares ls = svd_least_squares(design, target);

  SolitonSolution out;
  out.derivation_dim = der.dimension();
  out.derivation_rank_marginal = der.rank_is_marginal();
  out.c = Scalar(ls.x[0]);
  Matrix d(7, 7);
  for (std::size_t j = 0; j < dir.size(); ++j)
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < 7; ++k) d(i, k) += Scalar(ls.x[1 + j] * dir[j](i, k));
  out.d = d;

  Matrix defect = ricci - d;
  for (int i = 0; i < 7; ++i) defect(i, i) -= out.c;
  out.residual = std::sqrt(defect.frobenius_sq().to_double());
  out.is_soliton = out.residual < tol;
  double scale = std::sqrt(ricci.frobenius_sq().to_double());
  out.classification = classify(ls.x[0], tol, scale, /*ricci_convention=*/true);
  return out;
}

SelfSimilarProfile self_similar_profile(const Scalar& s, double t) {
  Scalar c_exact = frac(-15, 8) + Scalar(8) * s * s;
  double c = c_exact.to_double();
  bool steady = c_exact.is_exact() ? c_exact.is_exact_zero() : std::abs(c) < 1e-12;

  SelfSimilarProfile out;
  double b = 2.0 * c / 3.0;  // scale(t) = (b t + 1)^{3/2}
  if (steady) {
    out.scale = 1.0;
    out.r = t;
    return out;
  }
  if (b < 0) out.t_max = -1.0 / b;
  else out.t_min = -1.0 / b;
  if (t <= out.t_min || t >= out.t_max)
    throw bad_input("time outside the existence interval of the self-similar solution");
  out.scale = std::pow(b * t + 1.0, 1.5);
  out.r = std::log(b * t + 1.0) / b;
  return out;
}

KFormD reconstruct_soliton_profile(const KFormD& phi0, double c, const MatrixD& d, double t) {
  double b = 2.0 * c / 3.0;
  double arg = b * t + 1.0;
  if (arg <= 0.0) throw bad_input("time outside the soliton existence interval");
  double scale = std::pow(arg, 1.5);
  double r = (std::abs(b) < 1e-14) ? t : std::log(arg) / b;

  Eigen::MatrixXd m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = r * d(i, j);
  Eigen::MatrixXd expm = m.exp();
  KFormD pulled = substitute(phi0, [&](int i, int j) { return expm(i, j); });
  return pulled * scale;
}

KFormD to_double(const KForm& f) {
  KFormD out(f.degree());
  for (const auto& [b, c] : f.terms()) out.add_term(b, c.to_double());
  return out;
}

std::array<KFormD, 7> differential_table(const LieAlgebra& g) {
  std::array<KFormD, 7> out;
  for (int m = 1; m <= 7; ++m) out[m - 1] = to_double(g.d_one_form(m));
  return out;
}

namespace {

struct FlowContext {
  std::array<KFormD, 7> d_table;

  KFormD differential(const KFormD& a) const { return leibniz_differential(d_table, a); }

  /// Delta phi for the metric induced by phi itself; reports the smallest
  /// metric eigenvalue so callers can watch the positivity margin.
  /// Returns false when phi is no longer positive (or values went
  /// non-finite).
  bool laplacian(const KFormD& phi, KFormD& delta, double& margin) const {
    for (const auto& [b, c] : phi.terms())
      if (!std::isfinite(c)) return false;
    MatrixD bil = induced_bilinear(phi);
    if (!positive_definite(bil)) return false;
    double det = determinant(bil);
    if (!(det > 0.0) || !std::isfinite(det)) return false;
    MatrixD g = bil;
    double scale = 1.0 / std::pow(det, 1.0 / 9.0);
    g *= scale;

    Eigen::Matrix<double, 7, 7> ge;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) ge(i, j) = g(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 7, 7>> es(ge);
    margin = es.eigenvalues()(0);
    if (!(margin > 0.0)) return false;

    auto star = [&](const KFormD& f) { return star_with_metric(g, f); };
    KFormD dsds = differential(star(differential(star(phi))));
    KFormD sdsd = star(differential(star(differential(phi))));
    delta = -(dsds - sdsd);  // (-1)^k with k = 3
    for (const auto& [b, c] : delta.terms())
      if (!std::isfinite(c)) return false;
    return true;
  }
};

}  // namespace

FlowResult flow_integrate(const LieAlgebra& g, const KFormD& phi0, const FlowOptions& opts) {
  if (!(opts.dt > 0.0)) throw bad_input("flow integration needs dt > 0");
  FlowContext ctx{differential_table(g)};

  FlowResult out;
  KFormD phi = phi0;
  double t = 0.0;
  double dt = opts.dt;

  KFormD delta(3);
  double margin = 0.0;
  if (!ctx.laplacian(phi, delta, margin))
    throw constraint_error("initial 3-form is not positive");

  auto record = [&](std::size_t step) {
    if (step % opts.sample_stride == 0)
      out.samples.push_back({t, phi, delta.norm(), margin});
    if (!out.blow_up_time && delta.norm() > opts.blow_up_threshold) out.blow_up_time = t;
  };

  std::size_t step = 0;
  record(step);
  while (t < opts.t_end - 1e-15) {
    double h = std::min(dt, opts.t_end - t);

    KFormD k1 = delta;  // laplacian at phi, already computed
    KFormD p2 = phi + k1 * (h / 2.0);
    KFormD k2(3), k3(3), k4(3);
    double m2, m3, m4;
    bool ok = ctx.laplacian(p2, k2, m2);
    KFormD p3 = ok ? phi + k2 * (h / 2.0) : KFormD(3);
    ok = ok && ctx.laplacian(p3, k3, m3);
    KFormD p4 = ok ? phi + k3 * h : KFormD(3);
    ok = ok && ctx.laplacian(p4, k4, m4);

    KFormD next(3);
    double next_margin = 0.0;
    KFormD next_delta(3);
    if (ok) {
      next = phi + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
      ok = ctx.laplacian(next, next_delta, next_margin);
    }
    if (!ok) {
      out.termination = FlowTermination::positivity_loss;
      out.last_t = t;
      return out;
    }

    phi = std::move(next);
    delta = std::move(next_delta);
    margin = next_margin;
    t += h;
    ++step;
    record(step);

    if (opts.adaptive && margin < 1e-6) {
      dt /= 2.0;
      if (dt < 1e-14) {
        out.termination = FlowTermination::step_underflow;
        out.last_t = t;
        return out;
      }
    }
  }
  out.termination = FlowTermination::completed;
  out.last_t = t;
  return out;
}

}  // namespace g2forge

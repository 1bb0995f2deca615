#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "family.hpp"
#include "g2core.hpp"

namespace g2forge {

enum class SolitonClass { shrinking, steady, expanding };

const char* soliton_class_name(SolitonClass c);

/// Best-fit (c, D) for a soliton equation, D ranging over Der(g). For the
/// Laplacian equation the defect is Delta(phi) - c phi + theta(D) phi (the
/// Lie derivative along the derivation field acts as -theta(D)); for the
/// Ricci equation it is Ric - c id - D. A soliton iff residual < tol.
///
/// Classification bands are scale-aware: |c| < tol (1 + scale) counts as
/// steady. The Laplacian flow shrinks when c < 0 (finite-time singularity at
/// T = -3/(2c)); the Ricci convention is reversed (expanding when c < 0).
struct SolitonSolution {
  Scalar c;
  Matrix d{7, 7};
  double residual = 0.0;
  SolitonClass classification = SolitonClass::steady;
  std::optional<double> singularity_time;  // shrinking Laplacian solitons only
  bool is_soliton = false;                 // residual < tol
  std::size_t derivation_dim = 0;
  bool derivation_rank_marginal = false;   // nullspace rank decision was close
};

/// Least squares over (c, coefficients of D in an orthonormalised Der(g)
/// basis), solved by SVD so the minimum-norm minimiser is returned. The
/// reported residual is re-evaluated from the defect form, independent of
/// the solver's internals.
SolitonSolution solve_laplacian_soliton(const G2Structure& s, double tol = 1e-8);

/// Ricci soliton fit for a family instance (the Ricci operator comes from
/// the family block formulas).
SolitonSolution solve_ricci_soliton(const FamilySpec& spec, double tol = 1e-8);

/// Ricci soliton fit with a caller-supplied Ricci operator.
SolitonSolution solve_ricci_soliton(const LieAlgebra& g, const Matrix& ricci,
                                    double tol = 1e-8);

/// Scaling profile of the self-similar solution attached to the gs family:
///   scale(t) = (2/3 c t + 1)^{3/2},
///   r(t) = (2c/3)^{-1} log(2/3 c t + 1), linear r(t) = t at the steady point,
/// valid on the maximal interval where 2/3 c t + 1 > 0.
struct SelfSimilarProfile {
  double scale = 1.0;
  double r = 0.0;
  double t_min = -std::numeric_limits<double>::infinity();
  double t_max = std::numeric_limits<double>::infinity();
};

SelfSimilarProfile self_similar_profile(const Scalar& s, double t);

/// phi(t) = scale(t) * pullback of phi along exp(r(t) D); the exact
/// trajectory of a Laplacian soliton with data (c, D).
KFormD reconstruct_soliton_profile(const KFormD& phi0, double c, const MatrixD& d, double t);

/// One sample of the flow d/dt phi = Delta phi.
struct FlowState {
  double t = 0.0;
  KFormD phi{3};
  double laplacian_norm = 0.0;
  double positivity_margin = 0.0;  // smallest eigenvalue of the induced metric
};

enum class FlowTermination { completed, positivity_loss, step_underflow };

struct FlowOptions {
  double t_end = 1.0;
  double dt = 1e-4;
  bool adaptive = false;           // halve dt when the margin drops below 1e-6
  std::size_t sample_stride = 1;   // keep every n-th accepted step
  double blow_up_threshold = 1e6;  // |Delta phi| level that flags blow-up
};

struct FlowResult {
  std::vector<FlowState> samples;
  FlowTermination termination = FlowTermination::completed;
  double last_t = 0.0;
  std::optional<double> blow_up_time;  // first |Delta phi| > threshold
};

/// Classical RK4 on the 35 coefficients of phi(t), recomputing the induced
/// metric and its Hodge star at every stage. Integration halts when the
/// metric loses definiteness (the last good time is reported) or when
/// adaptive halving drives dt below 1e-14.
FlowResult flow_integrate(const LieAlgebra& g, const KFormD& phi0, const FlowOptions& opts);

/// Double-precision copy of a (possibly exact) form / algebra.
KFormD to_double(const KForm& f);
std::array<KFormD, 7> differential_table(const LieAlgebra& g);

}  // namespace g2forge

#pragma once

#include <string>

#include "instance.hpp"
#include "serialize.hpp"
#include "solitons.hpp"

namespace g2forge {

struct RunOptions {
  double tol = 1e-8;          // soliton/residual acceptance tolerance
  std::uint64_t seed = 20698;  // randomized checks
  bool float_mode = false;     // force binary64 arithmetic on exact inputs
  int threads = 0;             // 0 = hardware concurrency
};

/// Dispatch for the compute surface. `what` is one of torsion, laplacian,
/// ricci, erp, eigenform, soliton, ricci-soliton. Family-only operations
/// reject structure-constant instances with a constraint error. The report
/// carries a provenance tag naming the formula path that produced each
/// result, plus the tolerance used by any pass/fail entry.
OrderedJson compute_report(const Instance& inst, const std::string& what,
                           const RunOptions& opts);

/// Parameter sweep over a built-in family. Columns:
/// param, scal, ric_norm, F, c, classification, laplacian_residual,
/// ricci_soliton_residual. Rows in increasing parameter order; an empty
/// range yields the header only. Work fans out across threads, assembled
/// in deterministic order.
std::string scan_csv(const std::string& family, const Scalar& lo, const Scalar& hi,
                     const Scalar& step, const RunOptions& opts);

/// Trajectory CSV: t, phi coefficients on the seven diagonal blades,
/// |Delta phi|, positivity margin; plus a summary with the termination
/// reason and the detected blow-up time, if any.
struct FlowReport {
  std::string csv;
  OrderedJson summary;
};

FlowReport flow_report(const Instance& inst, double t_end, double dt, bool adaptive,
                       const RunOptions& opts);

/// Clamp a phi or algebra to binary64 entries (float mode).
LieAlgebra algebra_as_float(const LieAlgebra& g);

}  // namespace g2forge

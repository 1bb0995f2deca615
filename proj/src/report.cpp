#include "report.hpp"

#include <sstream>

#include "errors.hpp"
#include "parallel.hpp"

namespace g2forge {

namespace {

const FamilySpec& require_family(const Instance& inst, const std::string& what) {
  if (!inst.family)
    throw constraint_error(what + " needs the family block data (A1, A, B, C)");
  return *inst.family;
}

OrderedJson torsion_json(const TorsionForms& t) {
  OrderedJson out;
  out["tau0"] = t.tau0.str();
  out["tau1"] = form_json(t.tau1);
  out["tau2"] = form_json(t.tau2);
  out["tau3"] = form_json(t.tau3);
  return out;
}

OrderedJson soliton_json(const SolitonSolution& sol, double tol) {
  OrderedJson out;
  out["c"] = sol.c.str();
  out["derivation"] = matrix_json(sol.d);
  out["residual"] = csv_double(sol.residual);
  out["classification"] = soliton_class_name(sol.classification);
  out["is_soliton"] = sol.is_soliton;
  out["tolerance"] = csv_double(tol);
  if (sol.singularity_time) out["singularity_time"] = csv_double(*sol.singularity_time);
  out["derivation_space_dim"] = sol.derivation_dim;
  if (sol.derivation_rank_marginal)
    out["derivation_rank_warning"] =
        "smallest retained singular value is within 10x of the rank cutoff; "
        "the derivation space dimension may be overestimated";
  return out;
}

}  // namespace

LieAlgebra algebra_as_float(const LieAlgebra& g) {
  std::vector<std::tuple<int, int, int, Scalar>> entries;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      for (int k = 1; k <= 7; ++k)
        if (!g.c(i, j, k).is_exact_zero())
          entries.emplace_back(i, j, k, Scalar(g.c(i, j, k).to_double()));
  return LieAlgebra::from_structure_constants(entries);
}

OrderedJson compute_report(const Instance& inst, const std::string& what,
                           const RunOptions& opts) {
  G2Structure s = inst.structure();
  if (opts.float_mode) s.algebra = algebra_as_float(s.algebra);

  OrderedJson out;
  out["operation"] = what;
  if (inst.kind == Instance::Kind::builtin) {
    out["instance"] = inst.builtin_name;
    if (inst.builtin_name != "fr") out["param"] = inst.builtin_param.str();
  }

  if (what == "torsion") {
    if (inst.family && !opts.float_mode) {
      TorsionForms fast = specialized_torsion(*inst.family);
      out["path"] = "family-closed-form";
      out.update(torsion_json(fast));
      TorsionForms oracle = compute_torsion(s);
      double mismatch = (oracle.tau2 - fast.tau2).norm() + (oracle.tau3 - fast.tau3).norm() +
                        (oracle.tau1 - fast.tau1).norm() +
                        std::abs((oracle.tau0 - fast.tau0).to_double());
      out["oracle_path"] = "generic-star-differential";
      out["oracle_mismatch"] = csv_double(mismatch);
    } else {
      out["path"] = "generic-star-differential";
      out.update(torsion_json(compute_torsion(s)));
    }
    return out;
  }

  if (what == "laplacian") {
    out["path"] = "generic-star-differential";
    out["laplacian_phi"] = form_json(hodge_laplacian(s, s.phi));
    if (inst.family && !opts.float_mode) {
      KForm fast = specialized_derivative_forms(*inst.family).laplacian_phi();
      out["family_path_mismatch"] =
          csv_double((fast - hodge_laplacian(s, s.phi)).norm());
    }
    return out;
  }

  if (what == "ricci") {
    RicciData r = ricci_operator(require_family(inst, what));
    out["path"] = "family-block-formula";
    out["basis_order"] = "e1,e2,e3,e4,e5,e6,e7";
    out["ricci_operator"] = matrix_json(r.ricci);
    out["scalar_curvature"] = r.scalar_curvature.str();
    out["ricci_norm"] = csv_double(std::sqrt(r.ricci_norm_sq.to_double()));
    if (r.f_value) out["F"] = r.f_value->str();
    else out["F"] = "flat";
    return out;
  }

  if (what == "erp") {
    ErpComparison e = erp_residual(s);
    out["path"] = "generic-star-differential";
    out["d_tau"] = form_json(e.lhs);
    out["pinched_rhs"] = form_json(e.rhs);
    out["residual"] = csv_double(e.residual);
    out["is_erp"] = e.residual < opts.tol;
    out["tolerance"] = csv_double(opts.tol);
    return out;
  }

  if (what == "eigenform") {
    EigenformResidual r = eigenform_residual(s);
    out["path"] = "generic-star-differential";
    out["lambda"] = r.lambda.str();
    out["residual"] = csv_double(r.residual);
    out["is_eigenform"] = r.residual < opts.tol;
    out["tolerance"] = csv_double(opts.tol);
    return out;
  }

  if (what == "soliton") {
    SolitonSolution sol = solve_laplacian_soliton(s, opts.tol);
    out["path"] = "least-squares-over-derivations";
    out["equation"] = "laplacian";
    out.update(soliton_json(sol, opts.tol));
    return out;
  }

  if (what == "ricci-soliton") {
    SolitonSolution sol = solve_ricci_soliton(require_family(inst, what), opts.tol);
    out["path"] = "least-squares-over-derivations";
    out["equation"] = "ricci";
    out.update(soliton_json(sol, opts.tol));
    return out;
  }

  throw bad_input("unknown operation '" + what +
                  "' (expected torsion, laplacian, ricci, erp, eigenform, soliton, "
                  "ricci-soliton)");
}

std::string scan_csv(const std::string& family, const Scalar& lo, const Scalar& hi,
                     const Scalar& step, const RunOptions& opts) {
  if (family != "gs" && family != "sa") throw bad_input("scan family must be gs or sa");
  if (step.sign() <= 0) throw bad_input("scan step must be positive");

  std::vector<Scalar> params;
  for (Scalar p = lo; p.to_double() <= hi.to_double() + 1e-12; p += step) params.push_back(p);

  std::vector<std::string> rows(params.size());
  parallel_for(params.size(), opts.threads, [&](std::size_t i) {
    const Scalar& p = params[i];
    FamilySpec spec = family == "gs" ? builtin_gs(p) : builtin_sa(p);
    RicciData r = ricci_operator(spec);
    SolitonSolution lap = solve_laplacian_soliton(spec.structure(), opts.tol);
    SolitonSolution ric = solve_ricci_soliton(spec, opts.tol);
    std::ostringstream row;
    row << csv_double(p.to_double()) << ',' << csv_double(r.scalar_curvature.to_double())
        << ',' << csv_double(std::sqrt(r.ricci_norm_sq.to_double())) << ','
        << (r.f_value ? csv_double(r.f_value->to_double()) : std::string("flat")) << ','
        << csv_double(lap.c.to_double()) << ',' << soliton_class_name(lap.classification)
        << ',' << csv_double(lap.residual) << ',' << csv_double(ric.residual) << '\n';
    rows[i] = row.str();
  });

  std::string out =
      "param,scal,ric_norm,F,c,classification,laplacian_residual,ricci_soliton_residual\n";
  for (const std::string& row : rows) out += row;
  return out;
}

FlowReport flow_report(const Instance& inst, double t_end, double dt, bool adaptive,
                       const RunOptions& opts) {
  LieAlgebra g = opts.float_mode ? algebra_as_float(inst.algebra) : inst.algebra;

  FlowOptions fopts;
  fopts.t_end = t_end;
  fopts.dt = dt;
  fopts.adaptive = adaptive;
  std::size_t steps = static_cast<std::size_t>(t_end / dt);
  fopts.sample_stride = std::max<std::size_t>(1, steps / 2000);

  FlowResult res = flow_integrate(g, to_double(standard_phi<Scalar>()), fopts);

  static const Blade diag[7] = {Blade::of({1, 2, 7}), Blade::of({3, 4, 7}),
                                Blade::of({5, 6, 7}), Blade::of({1, 3, 5}),
                                Blade::of({1, 4, 6}), Blade::of({2, 3, 6}),
                                Blade::of({2, 4, 5})};
  std::string csv =
      "t,phi_127,phi_347,phi_567,phi_135,phi_146,phi_236,phi_245,laplacian_norm,"
      "positivity_margin\n";
  for (const FlowState& st : res.samples) {
    csv += csv_double(st.t);
    for (const Blade& b : diag) csv += "," + csv_double(st.phi.coeff(b));
    csv += "," + csv_double(st.laplacian_norm) + "," + csv_double(st.positivity_margin) + "\n";
  }

  OrderedJson summary;
  switch (res.termination) {
    case FlowTermination::completed: summary["termination"] = "completed"; break;
    case FlowTermination::positivity_loss: summary["termination"] = "positivity-loss"; break;
    case FlowTermination::step_underflow: summary["termination"] = "step-underflow"; break;
  }
  summary["last_t"] = csv_double(res.last_t);
  summary["samples"] = res.samples.size();
  if (res.blow_up_time) summary["blow_up_time"] = csv_double(*res.blow_up_time);
  summary["blow_up_threshold"] = csv_double(fopts.blow_up_threshold);
  return FlowReport{std::move(csv), std::move(summary)};
}

}  // namespace g2forge

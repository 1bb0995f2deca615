// g2forge command-line front end. Everything goes through the shared
// library's C API; this translation unit holds no computation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "g2forge/g2forge.h"

namespace {

struct Freed {
  char* p = nullptr;
  ~Freed() { g2f_string_free(p); }
};

int fail_with(g2f_status st) {
  std::cerr << "error: " << g2f_last_error() << "\n";
  return static_cast<int>(st);
}

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

struct InstanceArgs {
  std::string config_path;
  std::string builtin;

  g2f_status resolve(g2f_instance** out) const {
    if (!builtin.empty()) return g2f_instance_builtin(builtin.c_str(), nullptr, out);
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << config_path << "\n";
      return G2F_BAD_INPUT;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return g2f_instance_parse(buf.str().c_str(), out);
  }

  void attach(CLI::App* cmd) {
    auto* cfg = cmd->add_option("--config", config_path, "instance config (JSON file)");
    auto* bi = cmd->add_option("--builtin", builtin,
                               "builtin instance: gs:<s>, sa:<a> or fr (exact params "
                               "as fractions, e.g. gs:5/8)");
    cfg->excludes(bi);
    cmd->callback([this, cmd] {
      if (builtin.empty() && config_path.empty())
        throw CLI::RequiredError("--config or --builtin");
    });
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2-structure toolkit on 7-dimensional solvable Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  g2f_options opts;
  g2f_options_init(&opts);
  bool float_mode = false;
  app.add_option("--tol", opts.tol, "absolute tolerance for float comparisons")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized checks and scans")
      ->capture_default_str();
  app.add_option("--threads", opts.threads, "worker threads (0 = auto)");
  app.add_option("--mode",
                 [&float_mode](const std::vector<std::string>& vals) {
                   if (vals.empty()) return false;
                   if (vals[0] == "float") float_mode = true;
                   else if (vals[0] == "rational") float_mode = false;
                   else return false;
                   return true;
                 },
                 "arithmetic mode: rational (exact where possible) or float")
      ->expected(1);

  std::string out_path;
  app.add_option("--out", out_path, "output file (default: stdout)");

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string only;
  bool json_only = false;
  bool tol_given = false;
  verify->add_option("--only", only, "run a single named check");
  verify->add_flag("--json", json_only, "print the JSON report instead of the table");
  verify->callback([&] {
    tol_given = app.count("--tol") > 0;
    g2f_options vo = opts;
    vo.float_mode = float_mode;
    Freed json, table;
    g2f_status st = g2f_verify_suite(&vo, only.empty() ? nullptr : only.c_str(),
                                     tol_given ? opts.tol : -1.0, &json.p, &table.p);
    if (st != G2F_OK && st != G2F_VERIFY_FAILED) std::exit(fail_with(st));
    std::cout << (json_only ? json.p : table.p);
    if (!out_path.empty() && !write_output(out_path, json.p)) std::exit(2);
    if (st == G2F_VERIFY_FAILED) {
      std::cerr << "verification failed: " << g2f_last_error() << "\n";
      std::exit(1);
    }
  });

  // compute -------------------------------------------------------------
  auto* compute = app.add_subcommand("compute", "run one computation on an instance");
  InstanceArgs compute_inst;
  compute_inst.attach(compute);
  std::string what;
  compute
      ->add_option("--what", what,
                   "torsion | laplacian | ricci | erp | eigenform | soliton | ricci-soliton")
      ->required();
  compute->callback([&] {
    g2f_instance* inst = nullptr;
    g2f_status st = compute_inst.resolve(&inst);
    if (st != G2F_OK) std::exit(fail_with(st));
    g2f_options co = opts;
    co.float_mode = float_mode;
    Freed json;
    st = g2f_compute(inst, what.c_str(), &co, &json.p);
    g2f_instance_free(inst);
    if (st != G2F_OK) std::exit(fail_with(st));
    if (std::strstr(json.p, "derivation_rank_warning"))
      std::cerr << "warning: derivation-space rank decision is marginal; "
                   "dimension may be overestimated\n";
    if (!write_output(out_path, std::string(json.p) + "\n")) std::exit(2);
  });

  // scan ----------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "parameter sweep over a builtin family (CSV)");
  std::string family, lo = "0", hi = "1", step = "1/100";
  scan->add_option("--family", family, "gs or sa")->required();
  scan->add_option("--min", lo, "lower bound (exact fractions accepted)");
  scan->add_option("--max", hi, "upper bound");
  scan->add_option("--step", step, "grid step (> 0)");
  scan->callback([&] {
    g2f_options so = opts;
    so.float_mode = float_mode;
    Freed csv;
    g2f_status st =
        g2f_scan(family.c_str(), lo.c_str(), hi.c_str(), step.c_str(), &so, &csv.p);
    if (st != G2F_OK) std::exit(fail_with(st));
    if (!write_output(out_path, csv.p)) std::exit(2);
  });

  // flow ----------------------------------------------------------------
  auto* flow = app.add_subcommand("flow", "integrate the flow from an instance (CSV)");
  InstanceArgs flow_inst;
  flow_inst.attach(flow);
  double t_end = 0.1, dt = 1e-4;
  bool adaptive = false;
  flow->add_option("--t-end", t_end, "integration endpoint")->capture_default_str();
  flow->add_option("--dt", dt, "step size")->capture_default_str();
  flow->add_flag("--adaptive", adaptive, "halve dt when the positivity margin gets small");
  flow->callback([&] {
    g2f_instance* inst = nullptr;
    g2f_status st = flow_inst.resolve(&inst);
    if (st != G2F_OK) std::exit(fail_with(st));
    g2f_options fo = opts;
    fo.float_mode = float_mode;
    Freed csv, summary;
    st = g2f_flow(inst, t_end, dt, adaptive ? 1 : 0, &fo, &csv.p, &summary.p);
    g2f_instance_free(inst);
    if (st != G2F_OK) std::exit(fail_with(st));
    if (!write_output(out_path, csv.p)) std::exit(2);
    std::cerr << summary.p << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad input
  }
  return 0;
}

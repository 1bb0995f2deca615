#include "g2forge/g2forge.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "errors.hpp"
#include "instance.hpp"
#include "report.hpp"
#include "verify.hpp"

using namespace g2forge;

struct g2f_instance {
  Instance inst;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

g2f_status status_of(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::bad_input: return G2F_BAD_INPUT;
    case Error::Kind::constraint: return G2F_CONSTRAINT;
    case Error::Kind::internal: return G2F_INTERNAL;
  }
  return G2F_INTERNAL;
}

template <class Fn>
g2f_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return G2F_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return G2F_INTERNAL;
  }
}

RunOptions run_options(const g2f_options* opts) {
  RunOptions r;
  if (opts) {
    r.tol = opts->tol;
    r.seed = opts->seed;
    r.float_mode = opts->float_mode != 0;
    r.threads = opts->threads;
  }
  return r;
}

}  // namespace

extern "C" {

void g2f_options_init(g2f_options* opts) {
  if (!opts) return;
  opts->tol = kDefaultTol;
  opts->seed = 20698;
  opts->float_mode = 0;
  opts->threads = 0;
  if (const char* env = std::getenv("G2FORGE_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) opts->tol = v;
  }
}

g2f_status g2f_instance_parse(const char* config_json, g2f_instance** out) {
  if (!config_json || !out) {
    t_last_error = "null argument";
    return G2F_BAD_INPUT;
  }
  return guarded([&] {
    auto inst = std::make_unique<g2f_instance>();
    inst->inst = Instance::from_json_text(config_json);
    *out = inst.release();
    return G2F_OK;
  });
}

g2f_status g2f_instance_builtin(const char* name, const char* param, g2f_instance** out) {
  if (!name || !out) {
    t_last_error = "null argument";
    return G2F_BAD_INPUT;
  }
  return guarded([&] {
    auto inst = std::make_unique<g2f_instance>();
    std::optional<std::string> p;
    if (param) p = std::string(param);
    inst->inst = Instance::from_builtin(name, p);
    *out = inst.release();
    return G2F_OK;
  });
}

void g2f_instance_free(g2f_instance* inst) { delete inst; }

g2f_status g2f_compute(const g2f_instance* inst, const char* what, const g2f_options* opts,
                       char** json_out) {
  if (!inst || !what || !json_out) {
    t_last_error = "null argument";
    return G2F_BAD_INPUT;
  }
  return guarded([&] {
    OrderedJson report = compute_report(inst->inst, what, run_options(opts));
    *json_out = dup_string(report.dump(2));
    return G2F_OK;
  });
}

g2f_status g2f_verify_suite(const g2f_options* opts, const char* only, double tol_override,
                            char** json_report, char** table_out) {
  return guarded([&] {
    VerifyOptions vopts;
    if (opts) {
      vopts.seed = opts->seed;
      vopts.float_mode = opts->float_mode != 0;
      vopts.threads = opts->threads;
    }
    if (tol_override > 0.0) vopts.tol_override = tol_override;
    if (only) vopts.only = only;
    VerifyReport report = run_verification(vopts);
    if (json_report) *json_report = dup_string(report.to_json().dump(2));
    if (table_out) *table_out = dup_string(report.to_table());
    if (!report.all_passed()) {
      t_last_error = "verification failed at check '" + report.first_failure() + "'";
      return G2F_VERIFY_FAILED;
    }
    return G2F_OK;
  });
}

g2f_status g2f_scan(const char* family, const char* lo, const char* hi, const char* step,
                    const g2f_options* opts, char** csv_out) {
  if (!family || !lo || !hi || !step || !csv_out) {
    t_last_error = "null argument";
    return G2F_BAD_INPUT;
  }
  return guarded([&] {
    auto parse = [](const char* text, const char* what) {
      auto v = Scalar::parse(text);
      if (!v) throw bad_input(std::string("cannot parse ") + what + " '" + text + "'");
      return *v;
    };
    std::string csv = scan_csv(family, parse(lo, "lower bound"), parse(hi, "upper bound"),
                               parse(step, "step"), run_options(opts));
    *csv_out = dup_string(csv);
    return G2F_OK;
  });
}

g2f_status g2f_flow(const g2f_instance* inst, double t_end, double dt, int adaptive,
                    const g2f_options* opts, char** csv_out, char** summary_json) {
  if (!inst || !csv_out) {
    t_last_error = "null argument";
    return G2F_BAD_INPUT;
  }
  return guarded([&] {
    FlowReport rep = flow_report(inst->inst, t_end, dt, adaptive != 0, run_options(opts));
    *csv_out = dup_string(rep.csv);
    if (summary_json) *summary_json = dup_string(rep.summary.dump(2));
    return G2F_OK;
  });
}

const char* g2f_last_error(void) { return t_last_error.c_str(); }

void g2f_string_free(char* s) { std::free(s); }

const char* g2f_version(void) { return "1.0.0"; }

}  // extern "C"

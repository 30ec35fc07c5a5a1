// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#include "qbc/qbc.h"

#include <new>
#include <string>
#include <vector>

#include "suite.hpp"

struct qbc_run {
  qbc::RunConfig cfg;
  std::string report;
  std::string text;
  std::string error;
};

namespace {

// map an escaped exception to a status code; anything unexpected is a
// failure, not a config problem, so it can never be mistaken for user error
int fail_with(qbc_run* run, const std::exception& e, int code) {
  run->error = e.what();
  return code;
}

template <typename Fn>
int guarded(qbc_run* run, Fn&& fn) {
  run->report.clear();
  run->text.clear();
  run->error.clear();
  try {
    return fn();
  } catch (const qbc::ConfigError& e) {
    return fail_with(run, e, QBC_CONFIG);
  } catch (const qbc::ChainOverflow& e) {
    return fail_with(run, e, QBC_CONFIG);
  } catch (const qbc::OutOfBox& e) {
    return fail_with(run, e, QBC_CONFIG);
  } catch (const qbc::SingularPoint& e) {
    return fail_with(run, e, QBC_ABORTED);
  } catch (const qbc::ZeroValue& e) {
    return fail_with(run, e, QBC_ABORTED);
  } catch (const std::exception& e) {
    return fail_with(run, e, QBC_FAIL);
  }
}

}  // namespace

extern "C" {

qbc_run* qbc_run_new(void) { return new (std::nothrow) qbc_run; }

void qbc_run_free(qbc_run* run) { delete run; }

int qbc_run_set_int(qbc_run* run, const char* key, long value) {
  if (run == nullptr || key == nullptr) return QBC_CONFIG;
  const std::string k = key;
  const int v = static_cast<int>(value);
  if (k == "m")
    run->cfg.m = v;
  else if (k == "n")
    run->cfg.n = v;
  else if (k == "r")
    run->cfg.r = v;
  else if (k == "l")
    run->cfg.l = v;
  else if (k == "k")
    run->cfg.k = v;
  else if (k == "size")
    run->cfg.size = v;
  else if (k == "trials")
    run->cfg.trials = v;
  else if (k == "budget")
    run->cfg.budget = value;
  else if (k == "jobs")
    run->cfg.jobs = v;
  else {
    run->error = "unknown integer key: " + k;
    return QBC_CONFIG;
  }
  return QBC_OK;
}

int qbc_run_set_seed(qbc_run* run, uint64_t seed) {
  if (run == nullptr) return QBC_CONFIG;
  run->cfg.seed = seed;
  return QBC_OK;
}

int qbc_run_set_list(qbc_run* run, const char* key, const int* values, size_t len) {
  if (run == nullptr || key == nullptr || (values == nullptr && len > 0)) return QBC_CONFIG;
  const std::vector<int> v(values, values + len);
  const std::string k = key;
  if (k == "lambda")
    run->cfg.lambda = v;
  else if (k == "mu")
    run->cfg.mu = v;
  else if (k == "alpha")
    run->cfg.alpha = v;
  else if (k == "beta")
    run->cfg.beta = v;
  else {
    run->error = "unknown list key: " + k;
    return QBC_CONFIG;
  }
  return QBC_OK;
}

int qbc_run_execute(qbc_run* run, const char* suite) {
  if (run == nullptr) return QBC_CONFIG;
  if (suite == nullptr) {
    run->error = "null suite";
    return QBC_CONFIG;
  }
  const std::string name = suite;
  return guarded(run, [run, name] {
    const qbc::SuiteResult sr = qbc::run_suite(name, run->cfg);
    run->report = qbc::suite_json(sr);
    return qbc::suite_exit_code(sr);
  });
}

int qbc_run_koornwinder(qbc_run* run) {
  if (run == nullptr) return QBC_CONFIG;
  return guarded(run, [run] {
    const qbc::KoornwinderRun kr = qbc::run_koornwinder(run->cfg);
    qbc::SuiteResult sr;
    sr.suite = "koornwinder";
    sr.config = run->cfg;
    sr.checks = {kr.report};
    run->report = qbc::suite_json(sr);
    run->text = kr.text;
    return qbc::suite_exit_code(sr);
  });
}

const char* qbc_run_report(const qbc_run* run) {
  return run == nullptr ? "" : run->report.c_str();
}

const char* qbc_run_text(const qbc_run* run) {
  return run == nullptr ? "" : run->text.c_str();
}

const char* qbc_run_error(const qbc_run* run) {
  return run == nullptr ? "" : run->error.c_str();
}

}  // extern "C"

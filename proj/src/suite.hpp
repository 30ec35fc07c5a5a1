// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// Check registry and suite runner sitting between the verifiers and the CLI:
// maps check ids to verifier calls, wraps the polynomial-level boolean checks
// into the common report shape, expands "all" into the full acceptance grid,
// and renders results as JSON.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combinat.hpp"
#include "identities.hpp"

namespace qbc {

// One run request as it arrives from the CLI / C API.  Checks ignore the
// fields they do not use; validate() enforces the desk-scale caps before any
// computation starts.
struct RunConfig {
  int m = 2;
  int n = 1;
  int r = 1;     // operator order (coeff-rel)
  int l = 1;     // row degree (saalschutz, h-d-relation, pieri)
  int k = 1;     // truncation exponent in t = q^{-k} (lemma4-2)
  int size = 2;  // signed-subset pool size (lemma3-1)
  Partition lambda;
  Partition mu;
  MultiIndex alpha{1};
  MultiIndex beta{1};
  std::uint64_t seed = 1;
  int trials = 5;
  long budget = 200000;  // chain/term enumeration cap
  int jobs = 1;

  void validate() const;  // throws ConfigError
};

struct SuiteResult {
  std::string suite;
  RunConfig config;
  std::vector<VerificationReport> checks;
};

// every id accepted by `verify <id>`, in registration order ("all" expands
// to the acceptance grid and is not listed)
const std::vector<std::string>& check_ids();

// run one named check with the sizes taken from cfg (cfg.seed used directly)
VerificationReport run_check(const std::string& id, const RunConfig& cfg);

// run a verify suite: one id, or "all" for the acceptance grid
SuiteResult run_suite(const std::string& suite, const RunConfig& cfg);

// polynomial expansion for one label plus its certification report;
// `text` lists the exact orbit coefficients, one per line
struct KoornwinderRun {
  VerificationReport report;
  std::string text;
};
KoornwinderRun run_koornwinder(const RunConfig& cfg);

// eigen-equation residuals for one label: triangular support, unit top
// coefficient, and the column/row eigen-equations at fresh points
VerificationReport run_eigen_check(const Partition& lam, int m, std::uint64_t seed,
                                   int trials);

// interpolation-sum vanishing over the whole weight-capped box, with the
// minimal non-vanishing labels as negative controls
VerificationReport run_vanishing_check(int m, std::uint64_t seed, int trials);

// UTF-8 JSON document, stable key order; wall-time is the only varying field
std::string suite_json(const SuiteResult& res);

// 0 all pass / 1 identity failure / 3 resample-budget exhaustion
int suite_exit_code(const SuiteResult& res);

}  // namespace qbc

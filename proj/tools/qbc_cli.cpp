// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// qbc: run exact verification suites for the q-difference kernel identities
// and print/report Koornwinder expansions.  Thin shell over the C API; all
// math stays behind the shared library.

#include <qbc/qbc.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Opts {
  long m = 2, n = 1, r = 1, l = 1, k = 1, size = 2;
  long trials = 5, jobs = 1, budget = 200000;
  std::vector<int> lambda, mu;
  std::vector<int> alpha{1}, beta{1};
  std::uint64_t seed = 1;
  std::string report_path;
  bool print = false;
};

// flags shared by every subcommand; returns the --seed option so the caller
// can apply the QBC_SEED fallback only when the flag was absent
CLI::Option* add_common(CLI::App* cmd, Opts& o) {
  cmd->add_option("--m", o.m, "number of x variables");
  cmd->add_option("--n", o.n, "number of y variables");
  cmd->add_option("--r", o.r, "column operator order");
  cmd->add_option("--l", o.l, "row degree");
  cmd->add_option("--k", o.k, "truncation exponent in t = q^-k");
  cmd->add_option("--size", o.size, "signed-subset pool size");
  cmd->add_option("--lambda", o.lambda, "partition label, comma-separated")->delimiter(',');
  cmd->add_option("--mu", o.mu, "second partition label, comma-separated")->delimiter(',');
  cmd->add_option("--alpha", o.alpha, "x-side multi-index, comma-separated")->delimiter(',');
  cmd->add_option("--beta", o.beta, "y-side multi-index, comma-separated")->delimiter(',');
  cmd->add_option("--trials", o.trials, "sample points per check");
  cmd->add_option("--budget", o.budget, "chain/term enumeration cap");
  cmd->add_option("--jobs", o.jobs, "parallel checks");
  cmd->add_option("--report", o.report_path, "write the JSON report to this path");
  return cmd->add_option("--seed", o.seed, "sampling seed (fallback: QBC_SEED, then 1)");
}

bool apply_config(qbc_run* run, const Opts& o) {
  bool ok = qbc_run_set_seed(run, o.seed) == QBC_OK;
  for (const auto& [key, val] : {std::pair<const char*, long>{"m", o.m},
                                 {"n", o.n},
                                 {"r", o.r},
                                 {"l", o.l},
                                 {"k", o.k},
                                 {"size", o.size},
                                 {"trials", o.trials},
                                 {"budget", o.budget},
                                 {"jobs", o.jobs}})
    ok = ok && qbc_run_set_int(run, key, val) == QBC_OK;
  for (const auto& [key, vec] : {std::pair<const char*, const std::vector<int>*>{"lambda", &o.lambda},
                                 {"mu", &o.mu},
                                 {"alpha", &o.alpha},
                                 {"beta", &o.beta}})
    ok = ok && qbc_run_set_list(run, key, vec->data(), vec->size()) == QBC_OK;
  return ok;
}

// 0 = not written (no path), 1 = written, -1 = write failed
int write_report(const std::string& path, const char* json) {
  if (path.empty()) return 0;
  std::ofstream out(path, std::ios::binary);
  out << json;
  return out.good() ? 1 : -1;
}

void summarize(const char* json, std::ostream& os) {
  // cheap line counts; the JSON itself is the authoritative record
  const std::string s = json;
  std::size_t checks = 0, fails = 0, aborts = 0, pos = 0;
  while ((pos = s.find("\"pass\":", pos)) != std::string::npos) {
    ++checks;
    if (s.compare(pos + 8, 5, "false") == 0) ++fails;
    pos += 8;
  }
  pos = 0;
  while ((pos = s.find("\"aborted\": true", pos)) != std::string::npos) {
    ++aborts;
    pos += 8;
  }
  os << "checks: " << checks << "  failed: " << fails << "  aborted: " << aborts << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for BC-type q-difference kernel identities"};
  app.require_subcommand(1);
  Opts o;

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "check id or 'all'")->required();
  CLI::Option* seed_v = add_common(verify, o);

  CLI::App* koorn = app.add_subcommand("koornwinder", "compute one polynomial expansion");
  koorn->add_flag("--print", o.print, "print the exact coefficient list");
  CLI::Option* seed_k = add_common(koorn, o);

  CLI::App* eigen = app.add_subcommand("eigen", "eigen-equation check for one label");
  CLI::Option* seed_e = add_common(eigen, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : QBC_CONFIG;
  }

  const CLI::Option* seed_opt = verify->parsed() ? seed_v : koorn->parsed() ? seed_k : seed_e;
  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("QBC_SEED")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') {
        std::cerr << "error: QBC_SEED is not an unsigned integer\n";
        return QBC_CONFIG;
      }
      o.seed = v;
    }
  }

  qbc_run* run = qbc_run_new();
  if (run == nullptr) {
    std::cerr << "error: out of memory\n";
    return QBC_FAIL;
  }
  int status = QBC_CONFIG;
  if (!apply_config(run, o)) {
    std::cerr << "error: " << qbc_run_error(run) << "\n";
    qbc_run_free(run);
    return QBC_CONFIG;
  }

  if (verify->parsed())
    status = qbc_run_execute(run, suite.c_str());
  else if (koorn->parsed())
    status = qbc_run_koornwinder(run);
  else
    status = qbc_run_execute(run, "eigen");

  const char* err = qbc_run_error(run);
  if (err[0] != '\0') std::cerr << "error: " << err << "\n";

  const char* json = qbc_run_report(run);
  if (json[0] != '\0') {
    const int wrote = write_report(o.report_path, json);
    if (wrote < 0) {
      std::cerr << "error: cannot write report to " << o.report_path << "\n";
      status = QBC_CONFIG;
    } else if (wrote == 0 && !o.print) {
      std::cout << json;
    }
    summarize(json, std::cerr);
  }
  if (o.print) std::cout << qbc_run_text(run);

  qbc_run_free(run);
  return status;
}

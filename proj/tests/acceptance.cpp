// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs the full verification grid once in-process, then
// drives the installed CLI for the determinism round-trip.  Prints one
// pass/fail line per criterion and exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suite.hpp"

using namespace qbc;

namespace {

using Checks = std::vector<const VerificationReport*>;

Checks by_id(const SuiteResult& sr, const std::string& id) {
  Checks out;
  for (const auto& c : sr.checks)
    if (c.id == id) out.push_back(&c);
  return out;
}

std::string describe(const VerificationReport& c) {
  std::string s = c.id;
  for (const auto& [k, v] : c.sizes) s += " " + k + "=" + v;
  return s;
}

double group_seconds(const Checks& cs) {
  long long ms = 0;
  for (const auto* c : cs) ms += c->time_ms;
  return static_cast<double>(ms) / 1000.0;
}

// every check present, passed, with the expected number of exact-zero rows
bool clean(const Checks& cs, int expect_count, int expect_trials, std::string& why) {
  if (static_cast<int>(cs.size()) != expect_count) {
    why = "expected " + std::to_string(expect_count) + " checks, found " +
          std::to_string(cs.size());
    return false;
  }
  for (const auto* c : cs) {
    if (c->aborted) {
      why = describe(*c) + ": aborted (resample budget exhausted)";
      return false;
    }
    if (!c->pass) {
      why = describe(*c) + ": failed";
      return false;
    }
    if (static_cast<int>(c->residuals.size()) != expect_trials) {
      why = describe(*c) + ": expected " + std::to_string(expect_trials) +
            " residuals, found " + std::to_string(c->residuals.size());
      return false;
    }
    for (const Scalar& r : c->residuals)
      if (!r.is_zero()) {
        why = describe(*c) + ": nonzero residual " + r.str();
        return false;
      }
  }
  return true;
}

bool has_size(const Checks& cs, const std::string& key, const std::string& val) {
  for (const auto* c : cs)
    for (const auto& [k, v] : c->sizes)
      if (k == key && v == val) return true;
  return false;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_time(std::string s) {
  for (std::size_t pos = 0; (pos = s.find("\"time_ms\":", pos)) != std::string::npos;) {
    const std::size_t end = s.find_first_of(",}\n", pos);
    if (end == std::string::npos) break;
    s.erase(pos, end - pos);
  }
  return s;
}

bool cli_determinism(std::string& why, double& secs) {
  const char* cli = std::getenv("QBC_CLI_PATH");
  if (cli == nullptr || cli[0] == '\0') {
    why = "QBC_CLI_PATH not set";
    return false;
  }
  const auto run_once = [&](const std::string& path) -> int {
    const std::string cmd = "\"" + std::string(cli) +
                            "\" verify all --seed 1 --jobs 4 --report " + path +
                            " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    if (st == -1) return -1;
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  const auto t0 = std::chrono::steady_clock::now();
  const int rc1 = run_once("acceptance_run_a.json");
  const int rc2 = run_once("acceptance_run_b.json");
  secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rc1 != 0 || rc2 != 0) {
    why = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) +
          " (expected 0/0)";
    return false;
  }
  const std::string a = slurp("acceptance_run_a.json");
  const std::string b = slurp("acceptance_run_b.json");
  if (a.empty() || b.empty()) {
    why = "empty report file";
    return false;
  }
  if (strip_time(a) != strip_time(b)) {
    why = "reports differ beyond the wall-time fields";
    return false;
  }
  return true;
}

struct Line {
  int num;
  std::string label;
  bool ok;
  double secs;
  double cap;
  std::string why;
};

}  // namespace

int main() {
  RunConfig cfg;
  cfg.seed = 1;
  cfg.jobs = 4;
  SuiteResult sr;
  try {
    sr = run_suite("all", cfg);
  } catch (const std::exception& e) {
    std::printf("acceptance: suite run crashed: %s\n", e.what());
    return 1;
  }

  std::vector<Line> lines;
  const auto add = [&](int num, std::string label, double cap,
                       const std::function<bool(std::string&)>& body, double secs) {
    Line ln{num, std::move(label), false, secs, cap, ""};
    ln.ok = body(ln.why) && secs <= cap;
    if (ln.ok == false && ln.why.empty()) ln.why = "over the time cap";
    lines.push_back(std::move(ln));
  };

  {
    const Checks cs = by_id(sr, "eigen");
    add(1, "eigenfunction suite", 60.0,
        [&](std::string& why) { return clean(cs, 10, 5, why); }, group_seconds(cs));
  }
  {
    const Checks cs = by_id(sr, "cauchy");
    add(2, "cauchy kernel identity", 30.0,
        [&](std::string& why) {
          if (!clean(cs, 4, 5, why)) return false;
          if (!has_size(cs, "n", "0")) {
            why = "missing the n=0 closed-product case";
            return false;
          }
          return true;
        },
        group_seconds(cs));
  }
  {
    const Checks cs = by_id(sr, "thm2-2");
    add(3, "swapped-base kernel identity", 30.0,
        [&](std::string& why) { return clean(cs, 4, 5, why); }, group_seconds(cs));
  }
  {
    const Checks cs = by_id(sr, "coeff-rel");
    add(4, "coefficient relation", 30.0,
        [&](std::string& why) {
          if (!clean(cs, 6, 5, why)) return false;
          int kns = 0;
          for (const auto* c : cs)
            if (c->anchor.find("Eq (1.1)") != std::string::npos) ++kns;
          if (kns != 2) {
            why = "r=1 cases not reported under the classical anchor";
            return false;
          }
          return true;
        },
        group_seconds(cs));
  }
  {
    const Checks bc = by_id(sr, "transform-bc");
    const Checks su = by_id(sr, "summation");
    Checks both = bc;
    both.insert(both.end(), su.begin(), su.end());
    add(5, "type-BC transformation + summation", 120.0,
        [&](std::string& why) { return clean(bc, 3, 3, why) && clean(su, 3, 3, why); },
        group_seconds(both));
  }
  {
    const Checks tc = by_id(sr, "transform-c");
    const Checks l3 = by_id(sr, "lemma3-1");
    const Checks mi = by_id(sr, "milne");
    Checks all3 = tc;
    all3.insert(all3.end(), l3.begin(), l3.end());
    all3.insert(all3.end(), mi.begin(), mi.end());
    add(6, "type-C transformation + collapse + ratio lemma", 30.0,
        [&](std::string& why) {
          return clean(tc, 3, 3, why) && clean(l3, 4, 3, why) && clean(mi, 3, 3, why);
        },
        group_seconds(all3));
  }
  {
    const Checks l41 = by_id(sr, "lemma4-1");
    const Checks l42 = by_id(sr, "lemma4-2");
    Checks both = l41;
    both.insert(both.end(), l42.begin(), l42.end());
    add(7, "spectral ratio + truncated generating identity", 30.0,
        [&](std::string& why) { return clean(l41, 11, 5, why) && clean(l42, 3, 5, why); },
        group_seconds(both));
  }
  {
    const Checks cs = by_id(sr, "h-d-relation");
    add(8, "row-column operator relation", 60.0,
        [&](std::string& why) { return clean(cs, 10, 3, why); }, group_seconds(cs));
  }
  {
    const Checks cs = by_id(sr, "dual-cauchy-expansion");
    add(9, "dual-cauchy expansion", 60.0,
        [&](std::string& why) { return clean(cs, 3, 1, why); }, group_seconds(cs));
  }
  {
    const Checks du = by_id(sr, "duality");
    const Checks pi = by_id(sr, "pieri");
    Checks both = du;
    both.insert(both.end(), pi.begin(), pi.end());
    add(10, "duality + row pieri", 120.0,
        [&](std::string& why) { return clean(du, 16, 3, why) && clean(pi, 10, 3, why); },
        group_seconds(both));
  }
  {
    const Checks cs = by_id(sr, "vanishing");
    add(11, "interpolation vanishing + controls", 10.0,
        [&](std::string& why) { return clean(cs, 3, 5, why); }, group_seconds(cs));
  }
  {
    std::string why;
    double secs = 0.0;
    const bool ok = cli_determinism(why, secs);
    Line ln{12, "CLI determinism round-trip", ok && secs <= 600.0, secs, 600.0, why};
    if (!ln.ok && ln.why.empty()) ln.why = "over the time cap";
    lines.push_back(std::move(ln));
  }

  int passed = 0;
  for (const Line& ln : lines) {
    std::printf("criterion %2d %-46s %s (%.1f s, cap %.0f s)%s%s\n", ln.num,
                ln.label.c_str(), ln.ok ? "PASS" : "FAIL", ln.secs, ln.cap,
                ln.why.empty() ? "" : " -- ", ln.why.c_str());
    if (ln.ok) ++passed;
  }
  std::printf("acceptance: %d/12 criteria passed\n", passed);
  return passed == 12 ? 0 : 1;
}

// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#include "suite.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <utility>

#include "koornwinder.hpp"
#include "qops.hpp"

namespace qbc {

namespace {

constexpr int kParamBudget = 8;  // fresh parameter points before giving up

std::string list_str(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + ")";
}

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

const std::vector<GeneratorId> kParamGens{g_a, g_b, g_c, g_d, g_q, g_t};

// one certified expansion at a freshly sampled generic parameter point
struct CertifiedPoly {
  KoornwinderPoly P;
  ParamPoint params;
};

CertifiedPoly build_certified(const Partition& lam, int m, std::uint64_t seed) {
  const ParamQuad quad = ParamQuad::standard();
  for (int attempt = 0; attempt < kParamBudget; ++attempt) {
    RootSampler rs(mix64({seed, hash64("suite-params"), static_cast<std::uint64_t>(attempt)}));
    ParamPoint params = rs.sample(kParamGens);
    try {
      KoornwinderPoly P = compute_koornwinder(
          lam, m, quad, params,
          mix64({seed, hash64("suite-grid"), static_cast<std::uint64_t>(attempt)}));
      return {std::move(P), std::move(params)};
    } catch (const SingularPoint&) {
    } catch (const EigenvalueCollision&) {
    } catch (const DegenerateSample&) {
    }
  }
  throw SingularPoint("build_certified: parameter resample budget exhausted");
}

// nonzero exactly when some monomial escapes the dominance ideal, the top
// coefficient is not 1, or the polynomial is not hyperoctahedrally invariant
Scalar support_residual(const KoornwinderPoly& P) {
  std::vector<int> top(P.lam.begin(), P.lam.end());
  top.resize(P.m, 0);
  Scalar res = P.poly.coeff(top) - Scalar(1);
  if (!res.is_zero()) return res;
  if (!w_invariant(P.poly)) return Scalar(1);
  const auto ideal = dominance_ideal(P.lam, P.m);
  const std::set<Partition> ok(ideal.begin(), ideal.end());
  for (const auto& [expo, c] : P.poly.terms()) {
    Partition nu;
    nu.reserve(expo.size());
    for (int e : expo) nu.push_back(e < 0 ? -e : e);
    std::sort(nu.begin(), nu.end(), std::greater<int>());
    if (!ok.contains(normalize_partition(nu))) return c;
  }
  return Scalar(0);
}

VerificationReport eigen_check_impl(const Partition& lam0, int m, std::uint64_t seed,
                                    int trials, CertifiedPoly* keep) {
  const Partition lam = normalize_partition(lam0);
  if (m < 1 || m > 4) throw ConfigError("eigen: m out of range [1,4]");
  if (static_cast<int>(lam.size()) > m)
    throw ConfigError("eigen: label longer than the variable count");
  const std::vector<std::pair<std::string, std::string>> sizes{
      {"m", std::to_string(m)}, {"lambda", list_str(lam)}};
  const std::string anchor = "Eqs (2.20), (4.33)/(4.41)";
  const std::string note =
      "column orders 0..m and row degrees 0..3 acting on an invariant Laurent "
      "polynomial of degree |lambda|; 5 generic points exceed the orbit count "
      "of every difference in play";

  const auto t0 = std::chrono::steady_clock::now();
  CertifiedPoly cert;
  try {
    cert = build_certified(lam, m, seed);
  } catch (const SingularPoint&) {
    VerificationReport rep;
    rep.id = "eigen";
    rep.anchor = anchor;
    rep.sizes = sizes;
    rep.seed = seed;
    rep.trials = trials;
    rep.aborted = true;
    rep.degree_note = note;
    rep.time_ms = ms_since(t0);
    return rep;
  }
  const Scalar sres = support_residual(cert.P);

  const ParamQuad quad = ParamQuad::standard();
  const OperatorSpace xsp{Gen::X, m};
  const PointFn f = laurent_fn(cert.P.poly, xsp);
  const auto fn = [&](std::uint64_t s) -> TrialOutcome {
    RootSampler rs(s);
    ParamPoint p = cert.params;
    for (int i = 1; i <= m; ++i) p.set_root(g_x(i), rs.next_root());
    const Scalar fv = f(p);
    Scalar res = sres;
    for (int r = 0; r <= m && res.is_zero(); ++r)
      res = vandiejen_apply(r, f, xsp, quad, p) -
            eigenvalue_column(lam, r, m, quad, p) * fv;
    for (int l = 0; l <= 3 && res.is_zero(); ++l)
      res = hrow_apply(l, f, xsp, quad, p) - eigenvalue_row(lam, l, m, quad, p) * fv;
    return {res, point_string(p)};
  };
  VerificationReport rep = run_exact_trials("eigen", anchor, sizes, note, seed, trials, fn);
  rep.time_ms = ms_since(t0);  // include the expansion build
  if (keep != nullptr) *keep = std::move(cert);
  return rep;
}

// shared wrapper for the boolean polynomial-level checks: retries degenerate
// parameter points, reports an exact zero per trial on pass
VerificationReport wrap_bool(const std::string& id, const std::string& anchor,
                             std::vector<std::pair<std::string, std::string>> sizes,
                             const std::string& note, std::uint64_t seed, int trials,
                             const std::function<bool(std::uint64_t)>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = id;
  rep.anchor = anchor;
  rep.sizes = std::move(sizes);
  rep.seed = seed;
  rep.trials = trials;
  rep.degree_note = note;
  bool done = false;
  for (int attempt = 0; attempt < kParamBudget && !done; ++attempt) {
    try {
      rep.pass = fn(static_cast<std::uint64_t>(attempt));
      done = true;
    } catch (const NotInSpan&) {  // real defect, not a sampling accident
      rep.pass = false;
      done = true;
    } catch (const SingularPoint&) {
    } catch (const ZeroValue&) {
    } catch (const DegenerateSample&) {
    } catch (const EigenvalueCollision&) {
    }
  }
  if (!done)
    rep.aborted = true;
  else if (rep.pass)
    rep.residuals.assign(trials, Scalar(0));
  rep.time_ms = ms_since(t0);
  return rep;
}

VerificationReport duality_check(const Partition& lam, const Partition& mu, int m,
                                 std::uint64_t seed, int trials) {
  return wrap_bool(
      "duality", "Eq (4.36)",
      {{"m", std::to_string(m)}, {"lambda", list_str(lam)}, {"mu", list_str(mu)}},
      "principal-point ratio equality between the two parameter quadruples; "
      "parameter points sampled internally per trial, zero rows record exact passes",
      seed, trials, [&](std::uint64_t attempt) {
        return verify_duality(normalize_partition(lam), normalize_partition(mu), m,
                              ParamQuad::standard(), mix64({seed, hash64("duality"), attempt}),
                              trials);
      });
}

VerificationReport pieri_check(const Partition& mu, int l, int m, std::uint64_t seed,
                               int trials) {
  return wrap_bool(
      "pieri", "Theorem 4.7 (excluded steps via Lemma 4.6)",
      {{"m", std::to_string(m)}, {"l", std::to_string(l)}, {"mu", list_str(mu)}},
      "row expansion over the step neighborhood at trials generic x-points; "
      "coefficients of steps outside the neighborhood checked to be exactly zero",
      seed, trials, [&](std::uint64_t attempt) {
        RootSampler rs(mix64({seed, hash64("pieri-params"), attempt}));
        const ParamPoint params = rs.sample(kParamGens);
        return verify_pieri_row(normalize_partition(mu), l, m, ParamQuad::standard(), params,
                                mix64({seed, hash64("pieri-x"), attempt}), trials);
      });
}

VerificationReport dual_cauchy_check(int m, int n, std::uint64_t seed) {
  return wrap_bool(
      "dual-cauchy-expansion", "Eq (4.8)",
      {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
      "exact Laurent-polynomial equality in m+n variables; one structural "
      "comparison, no evaluation points involved",
      seed, /*trials=*/1, [&](std::uint64_t attempt) {
        RootSampler rs(mix64({seed, hash64("dual-cauchy-params"), attempt}));
        const ParamPoint params = rs.sample(kParamGens);
        return verify_dual_cauchy_expansion(m, n, ParamQuad::standard(), params,
                                            mix64({seed, hash64("dual-cauchy"), attempt}));
      });
}

std::string koornwinder_text(const CertifiedPoly& cert) {
  std::string s = "label " + list_str(cert.P.lam) + "  m=" + std::to_string(cert.P.m) + "\n";
  s += "parameter fourth roots: " + point_string(cert.params) + "\n";
  s += "orbit coefficients (exact at this parameter point):\n";
  const auto ideal = dominance_ideal(cert.P.lam, cert.P.m);
  for (auto it = ideal.rbegin(); it != ideal.rend(); ++it) {
    std::vector<int> expo(it->begin(), it->end());
    expo.resize(cert.P.m, 0);
    s += "  m" + list_str(*it) + " : " + cert.P.poly.coeff(expo).str() + "\n";
  }
  return s;
}

}  // namespace

void RunConfig::validate() const {
  if (m < 0 || m > 4) throw ConfigError("m out of range [0,4]");
  if (n < 0 || n > 3) throw ConfigError("n out of range [0,3]");
  if (r < 0 || r > 4) throw ConfigError("r out of range [0,4]");
  if (l < 0 || l > 4) throw ConfigError("l out of range [0,4]");
  if (k < 0 || k > 3) throw ConfigError("k out of range [0,3]");
  if (size < 0 || size > 4) throw ConfigError("size out of range [0,4]");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (budget < 1) throw ConfigError("budget must be >= 1");
  if (jobs < 1 || jobs > 32) throw ConfigError("jobs out of range [1,32]");
  for (const Partition* part : {&lambda, &mu}) {
    const Partition norm = normalize_partition(*part);  // throws on bad shape
    if (multi_weight(norm) > 6) throw ConfigError("partition weight above 6");
  }
  if (alpha.size() > 4 || beta.size() > 3)
    throw ConfigError("multi-index longer than the x/y caps (4/3)");
  for (const MultiIndex* mi : {&alpha, &beta})
    for (int e : *mi)
      if (e < 0 || e > 3) throw ConfigError("multi-index entries must lie in [0,3]");
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "cauchy",   "thm2-2",   "coeff-rel",   "saalschutz", "transform-bc",
      "summation", "milne",   "lemma3-1",    "transform-c", "lemma4-1",
      "lemma4-2", "h-d-relation", "pieri",   "duality",    "dual-cauchy-expansion",
      "eigen",    "vanishing"};
  return ids;
}

VerificationReport run_eigen_check(const Partition& lam, int m, std::uint64_t seed,
                                   int trials) {
  return eigen_check_impl(lam, m, seed, trials, nullptr);
}

VerificationReport run_vanishing_check(int m, std::uint64_t seed, int trials) {
  if (m < 1 || m > 3) throw ConfigError("vanishing: m out of range [1,3]");
  const auto fn = [m](std::uint64_t s) -> TrialOutcome {
    RootSampler rs(s);
    const ParamPoint p = rs.sample(kParamGens);
    const ParamQuad quad = ParamQuad::standard();
    const QuarterMonomial al = quad.alpha(), qb = quad.qmono(), tb = quad.tmono();
    Scalar res(0);
    for (const Partition& mu : partitions_in_box(m, 4)) {
      if (multi_weight(mu) > 4) continue;
      const auto xs = spectral_point(mu, m, al, qb, tb);
      const int len = static_cast<int>(mu.size());
      for (int r = 1; r <= std::min(3, m) && res.is_zero(); ++r) {
        const Scalar v = e_col(r, xs, al, tb, p);
        if (len < r) {
          res = v;  // must vanish structurally
        } else if (len == r && part_at(mu, r) == 1 && multi_weight(mu) == r &&
                   v.is_zero()) {
          // negative control at the minimal surviving label (1^r)
          throw SingularPoint("vanishing: column control hit an accidental zero");
        }
      }
      for (int l = 1; l <= 3 && res.is_zero(); ++l) {
        const Scalar v = h_row(l, xs, al, qb, tb, p);
        if (part_at(mu, 1) < l) {
          res = v;
        } else if (len == 1 && mu[0] == l && v.is_zero()) {
          // negative control at the minimal surviving label (l)
          throw SingularPoint("vanishing: row control hit an accidental zero");
        }
      }
      if (!res.is_zero()) break;
    }
    return {res, point_string(p)};
  };
  return run_exact_trials(
      "vanishing", "Eqs (2.22), (4.27)", {{"m", std::to_string(m)}},
      "vanishing is structural (an exact zero factor in every surviving term); "
      "weight-capped box scanned whole, minimal non-vanishing labels kept as controls",
      seed, trials, fn);
}

KoornwinderRun run_koornwinder(const RunConfig& cfg) {
  cfg.validate();
  KoornwinderRun out;
  CertifiedPoly cert;
  out.report = eigen_check_impl(normalize_partition(cfg.lambda), cfg.m, cfg.seed,
                                cfg.trials, &cert);
  out.text = out.report.aborted ? "no expansion: parameter sampling aborted\n"
                                : koornwinder_text(cert);
  return out;
}

VerificationReport run_check(const std::string& id, const RunConfig& cfg) {
  cfg.validate();
  if (id == "cauchy") return verify_cauchy_kernel(cfg.m, cfg.n, cfg.seed, cfg.trials);
  if (id == "thm2-2") return verify_kernel_qt_swapped(cfg.m, cfg.n, cfg.seed, cfg.trials);
  if (id == "coeff-rel")
    return verify_coefficient_relation(cfg.r, cfg.m, cfg.n, cfg.seed, cfg.trials);
  if (id == "saalschutz") return verify_saalschutz_base_change(cfg.l, cfg.seed, cfg.trials);
  if (id == "transform-bc")
    return verify_transform_bc(cfg.alpha, cfg.beta, cfg.seed, cfg.trials, cfg.budget);
  if (id == "summation") return verify_summation_n0(cfg.alpha, cfg.seed, cfg.trials, cfg.budget);
  if (id == "milne") return verify_milne_lemma(cfg.lambda, cfg.seed, cfg.trials);
  if (id == "lemma3-1") return verify_inner_sum_collapse(cfg.size, cfg.seed, cfg.trials);
  if (id == "transform-c") return verify_transform_c(cfg.alpha, cfg.beta, cfg.seed, cfg.trials);
  if (id == "lemma4-1")
    return verify_row_spectral_ratio(cfg.lambda, cfg.m, cfg.n, cfg.seed, cfg.trials);
  if (id == "lemma4-2") return verify_row_truncation(cfg.k, cfg.m, cfg.seed, cfg.trials);
  if (id == "h-d-relation")
    return verify_row_column_relation(cfg.l, cfg.m, cfg.n, cfg.seed, cfg.trials);
  if (id == "pieri") return pieri_check(cfg.mu, cfg.l, cfg.m, cfg.seed, cfg.trials);
  if (id == "duality") return duality_check(cfg.lambda, cfg.mu, cfg.m, cfg.seed, cfg.trials);
  if (id == "dual-cauchy-expansion") return dual_cauchy_check(cfg.m, cfg.n, cfg.seed);
  if (id == "eigen") return run_eigen_check(cfg.lambda, cfg.m, cfg.seed, cfg.trials);
  if (id == "vanishing") return run_vanishing_check(cfg.m, cfg.seed, cfg.trials);
  throw ConfigError("unknown check id: " + id);
}

namespace {

using Task = std::function<VerificationReport()>;

// the full acceptance grid; every entry gets its own seed derived from the
// run seed and a unique registration key so results never depend on order
std::vector<Task> acceptance_grid(const RunConfig& cfg) {
  std::vector<Task> tasks;
  const auto sub = [&cfg](const std::string& key) {
    return mix64({cfg.seed, hash64(key)});
  };

  for (int m : {1, 2})
    for (const Partition& lam : partitions_in_box(m, 3)) {
      if (multi_weight(lam) > 3) continue;
      const std::uint64_t s = sub("eigen m=" + std::to_string(m) + " lam=" + list_str(lam));
      tasks.push_back([lam, m, s] { return run_eigen_check(lam, m, s, 5); });
    }

  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {2, 2}}) {
    const std::uint64_t sc = sub("cauchy " + std::to_string(m) + "," + std::to_string(n));
    tasks.push_back([m, n, sc] { return verify_cauchy_kernel(m, n, sc, 5); });
    const std::uint64_t st = sub("thm2-2 " + std::to_string(m) + "," + std::to_string(n));
    tasks.push_back([m, n, st] { return verify_kernel_qt_swapped(m, n, st, 5); });
  }

  for (int r : {0, 1, 2})
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
      const std::uint64_t s = sub("coeff-rel r=" + std::to_string(r) + " " +
                                  std::to_string(m) + "," + std::to_string(n));
      tasks.push_back([r, m, n, s] { return verify_coefficient_relation(r, m, n, s, 5); });
    }

  {
    const std::uint64_t s = sub("saalschutz l=3");
    tasks.push_back([s] { return verify_saalschutz_base_change(3, s, 5); });
  }

  for (const auto& [al, be] : std::vector<std::pair<MultiIndex, MultiIndex>>{
           {{1}, {1}}, {{2}, {1}}, {{1, 1}, {1}}}) {
    const std::uint64_t s = sub("transform-bc " + list_str(al) + " " + list_str(be));
    const long budget = cfg.budget;
    tasks.push_back([al, be, s, budget] { return verify_transform_bc(al, be, s, 3, budget); });
  }

  for (const MultiIndex& al : std::vector<MultiIndex>{{1}, {2}, {2, 1}}) {
    const std::uint64_t s = sub("summation " + list_str(al));
    const long budget = cfg.budget;
    tasks.push_back([al, s, budget] { return verify_summation_n0(al, s, 3, budget); });
  }

  for (const MultiIndex& lam : std::vector<MultiIndex>{{1}, {2, 1}, {4, 2, 1}}) {
    const std::uint64_t s = sub("milne " + list_str(lam));
    tasks.push_back([lam, s] { return verify_milne_lemma(lam, s, 3); });
  }

  for (int size : {0, 1, 2, 3}) {
    const std::uint64_t s = sub("lemma3-1 size=" + std::to_string(size));
    tasks.push_back([size, s] { return verify_inner_sum_collapse(size, s, 3); });
  }

  for (const auto& [al, be] : std::vector<std::pair<MultiIndex, MultiIndex>>{
           {{1}, {1}}, {{2, 1}, {1}}, {{1, 1}, {1, 1}}}) {
    const std::uint64_t s = sub("transform-c " + list_str(al) + " " + list_str(be));
    tasks.push_back([al, be, s] { return verify_transform_c(al, be, s, 3); });
  }

  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}})
    for (const Partition& lam : partitions_in_box(m, n)) {
      const std::uint64_t s = sub("lemma4-1 " + std::to_string(m) + "," + std::to_string(n) +
                                  " lam=" + list_str(lam));
      tasks.push_back([lam, m, n, s] { return verify_row_spectral_ratio(lam, m, n, s, 5); });
    }

  for (const auto& [k, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    const std::uint64_t s = sub("lemma4-2 k=" + std::to_string(k) + " m=" + std::to_string(m));
    tasks.push_back([k, m, s] { return verify_row_truncation(k, m, s, 5); });
  }

  for (int m : {1, 2})
    for (int n : {1, 2})
      for (int l = 0; l <= n; ++l) {
        const std::uint64_t s = sub("h-d-relation l=" + std::to_string(l) + " " +
                                    std::to_string(m) + "," + std::to_string(n));
        tasks.push_back([l, m, n, s] { return verify_row_column_relation(l, m, n, s, 3); });
      }

  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const std::uint64_t s = sub("dual-cauchy " + std::to_string(m) + "," + std::to_string(n));
    tasks.push_back([m, n, s] { return dual_cauchy_check(m, n, s); });
  }

  const std::vector<Partition> labels{{}, {1}, {1, 1}, {2}};
  for (const Partition& lam : labels)
    for (const Partition& mu : labels) {
      const std::uint64_t s = sub("duality lam=" + list_str(lam) + " mu=" + list_str(mu));
      tasks.push_back([lam, mu, s] { return duality_check(lam, mu, 2, s, 3); });
    }

  for (int m : {1, 2})
    for (const Partition& mu : std::vector<Partition>{{}, {1}, {1, 1}}) {
      if (static_cast<int>(mu.size()) > m) continue;
      for (int l : {1, 2}) {
        const std::uint64_t s = sub("pieri m=" + std::to_string(m) + " l=" + std::to_string(l) +
                                    " mu=" + list_str(mu));
        tasks.push_back([mu, l, m, s] { return pieri_check(mu, l, m, s, 3); });
      }
    }

  for (int m : {1, 2, 3}) {
    const std::uint64_t s = sub("vanishing m=" + std::to_string(m));
    tasks.push_back([m, s] { return run_vanishing_check(m, s, 5); });
  }

  return tasks;
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const RunConfig& cfg) {
  cfg.validate();
  SuiteResult sr;
  sr.suite = suite;
  sr.config = cfg;

  std::vector<Task> tasks;
  if (suite == "all") {
    tasks = acceptance_grid(cfg);
  } else {
    const auto& ids = check_ids();
    if (std::find(ids.begin(), ids.end(), suite) == ids.end())
      throw ConfigError("unknown suite: " + suite);
    tasks.push_back([suite, cfg] { return run_check(suite, cfg); });
  }

  sr.checks.resize(tasks.size());
  const int jobs = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()) > 0
                                               ? static_cast<int>(tasks.size())
                                               : 1);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) sr.checks[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(jobs);
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        try {
          for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            sr.checks[i] = tasks[i]();
          }
        } catch (...) {
          errs[j] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  std::stable_sort(sr.checks.begin(), sr.checks.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.id < b.id;
                   });
  return sr;
}

std::string suite_json(const SuiteResult& res) {
  nlohmann::ordered_json j;
  j["suite"] = res.suite;
  nlohmann::ordered_json cfg;
  cfg["m"] = res.config.m;
  cfg["n"] = res.config.n;
  cfg["r"] = res.config.r;
  cfg["l"] = res.config.l;
  cfg["k"] = res.config.k;
  cfg["size"] = res.config.size;
  cfg["lambda"] = res.config.lambda;
  cfg["mu"] = res.config.mu;
  cfg["alpha"] = res.config.alpha;
  cfg["beta"] = res.config.beta;
  cfg["seed"] = res.config.seed;
  cfg["trials"] = res.config.trials;
  cfg["budget"] = res.config.budget;
  cfg["jobs"] = res.config.jobs;
  j["config"] = cfg;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const VerificationReport& c : res.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    nlohmann::ordered_json sizes = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.sizes) sizes[k] = v;
    jc["sizes"] = sizes;
    jc["seed"] = c.seed;
    jc["trials"] = c.trials;
    jc["pass"] = c.pass;
    jc["aborted"] = c.aborted;
    jc["degree_note"] = c.degree_note;
    nlohmann::ordered_json resid = nlohmann::ordered_json::array();
    for (const Scalar& s : c.residuals) resid.push_back(s.str());
    jc["residuals"] = resid;
    jc["points"] = c.points;
    jc["time_ms"] = c.time_ms;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

int suite_exit_code(const SuiteResult& res) {
  bool failed = false;
  bool aborted = false;
  for (const VerificationReport& c : res.checks) {
    bool nonzero = false;
    for (const Scalar& r : c.residuals)
      if (!r.is_zero()) nonzero = true;
    if (nonzero || (!c.pass && !c.aborted))
      failed = true;
    else if (c.aborted)
      aborted = true;
  }
  if (failed) return 1;
  if (aborted) return 3;
  return 0;
}

}  // namespace qbc

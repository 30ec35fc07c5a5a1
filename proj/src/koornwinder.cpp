// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#include "koornwinder.hpp"

#include <map>
#include <utility>

namespace qbc {

namespace {

constexpr int kResampleBudget = 8;

std::vector<QuarterMonomial> principal_monos(const Partition& mu, int m,
                                             const QuarterMonomial& base, const ParamQuad& quad) {
  return spectral_point(mu, m, base, quad.qmono(), quad.tmono());
}

ParamPoint with_x_roots(const ParamPoint& params, const OperatorSpace& sp, std::uint64_t seed) {
  RootSampler rs(seed);
  ParamPoint p = params;
  for (int i = 1; i <= sp.count; ++i) p.set_root(sp.var(i), rs.next_root());
  return p;
}

std::vector<Scalar> x_values(const ParamPoint& p, const OperatorSpace& sp) {
  std::vector<Scalar> v;
  v.reserve(sp.count);
  for (int i = 1; i <= sp.count; ++i) v.push_back(p.value(sp.var(i)));
  return v;
}

// exact Gauss-Jordan on A X = B; on success B holds X, returns false if A is
// singular
bool solve_exact(std::vector<std::vector<Scalar>>& A, std::vector<std::vector<Scalar>>& B) {
  const int n = static_cast<int>(A.size());
  const int k = n > 0 ? static_cast<int>(B[0].size()) : 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    std::swap(A[piv], A[col]);
    std::swap(B[piv], B[col]);
    const Scalar inv = A[col][col].inv();
    for (int c = col; c < n; ++c) A[col][c] *= inv;
    for (int c = 0; c < k; ++c) B[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      const Scalar f = A[r][col];
      for (int c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      for (int c = 0; c < k; ++c) B[r][c] -= f * B[col][c];
    }
  }
  return true;
}

}  // namespace

Scalar eigenvalue_column(const Partition& lam, int r, int m, const ParamQuad& quad,
                         const ParamPoint& p) {
  if (r < 0 || r > m) throw ConfigError("eigenvalue_column: order out of range");
  const auto xs = principal_monos(normalize_partition(lam), m, quad.alpha(), quad);
  return e_col(r, xs, quad.alpha(), quad.tmono(), p);
}

Scalar eigenvalue_row(const Partition& lam, int l, int m, const ParamQuad& quad,
                      const ParamPoint& p) {
  if (l < 0) throw ConfigError("eigenvalue_row: degree must be non-negative");
  const auto xs = principal_monos(normalize_partition(lam), m, quad.alpha(), quad);
  return h_row(l, xs, quad.alpha(), quad.qmono(), quad.tmono(), p);
}

std::vector<Scalar> principal_values(const Partition& mu, int m, const QuarterMonomial& base,
                                     const ParamQuad& quad, const ParamPoint& p) {
  std::vector<Scalar> v;
  v.reserve(m);
  for (const QuarterMonomial& z : principal_monos(normalize_partition(mu), m, base, quad))
    v.push_back(p.eval(z));
  return v;
}

KoornwinderBasisMatrix build_matrix(const Partition& lam0, int m, const ParamQuad& quad,
                                    const ParamPoint& params, std::uint64_t seed) {
  if (m < 1) throw ConfigError("build_matrix: need at least one variable");
  const Partition lam = normalize_partition(lam0);
  if (static_cast<int>(lam.size()) > m)
    throw ConfigError("build_matrix: partition longer than the variable count");

  const std::vector<Partition> basis = dominance_ideal(lam, m);
  const int nb = static_cast<int>(basis.size());
  const OperatorSpace sp{Gen::X, m};

  std::vector<LaurentPoly> orbit;
  std::vector<PointFn> fn;
  orbit.reserve(nb);
  fn.reserve(nb);
  for (const Partition& nu : basis) {
    orbit.push_back(orbit_sum(nu, m));
    fn.push_back(laurent_fn(orbit.back(), sp));
  }

  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    try {
      const int npts = nb + 3;  // 3 held-out certification points
      std::vector<ParamPoint> pts;
      std::vector<std::vector<Scalar>> vals(npts);
      pts.reserve(npts);
      for (int k = 0; k < npts; ++k) {
        pts.push_back(with_x_roots(
            params, sp,
            mix64({seed, hash64("kw-grid"), static_cast<std::uint64_t>(attempt),
                   static_cast<std::uint64_t>(k)})));
        const std::vector<Scalar> xv = x_values(pts.back(), sp);
        vals[k].reserve(nb);
        for (int j = 0; j < nb; ++j) vals[k].push_back(orbit[j].eval(xv));
      }
      std::vector<std::vector<Scalar>> rhs(npts, std::vector<Scalar>(nb));
      for (int k = 0; k < npts; ++k)
        for (int j = 0; j < nb; ++j) rhs[k][j] = vandiejen_apply(1, fn[j], sp, quad, pts[k]);

      std::vector<std::vector<Scalar>> A(vals.begin(), vals.begin() + nb);
      std::vector<std::vector<Scalar>> X(rhs.begin(), rhs.begin() + nb);
      if (!solve_exact(A, X)) continue;  // rank-deficient grid, resample

      for (int k = nb; k < npts; ++k)
        for (int j = 0; j < nb; ++j) {
          Scalar acc;
          for (int i = 0; i < nb; ++i) acc += vals[k][i] * X[i][j];
          if (acc != rhs[k][j])
            throw NotInSpan("build_matrix: held-out point rejects the expansion");
        }
      return {basis, std::move(X)};
    } catch (const SingularPoint&) {
      if (attempt + 1 == kResampleBudget) throw;
    }
  }
  throw DegenerateSample("build_matrix: every sampled evaluation grid was singular");
}

KoornwinderPoly compute_koornwinder(const Partition& lam0, int m, const ParamQuad& quad,
                                    const ParamPoint& params, std::uint64_t seed) {
  const Partition lam = normalize_partition(lam0);
  const KoornwinderBasisMatrix bm = build_matrix(lam, m, quad, params, seed);
  const int nb = static_cast<int>(bm.basis.size());
  const Scalar top = eigenvalue_column(lam, 1, m, quad, params);

  // back-substitution: the basis is a linear extension of dominance, so every
  // entry matrix[k][j] with j > k is already resolved when row k is processed
  std::vector<Scalar> c(nb);
  c[nb - 1] = Scalar(1);
  for (int k = nb - 2; k >= 0; --k) {
    Scalar s;
    for (int j = k + 1; j < nb; ++j) s += bm.matrix[k][j] * c[j];
    const Scalar den = top - bm.matrix[k][k];
    if (den.is_zero())
      throw EigenvalueCollision("coincident eigenvalues on the dominance block");
    c[k] = s / den;
  }

  LaurentPoly poly(m);
  for (int k = 0; k < nb; ++k)
    if (!c[k].is_zero()) poly += orbit_sum(bm.basis[k], m).scaled(c[k]);

  // certify the whole eigen-system, not just the order that drove the solve
  const OperatorSpace sp{Gen::X, m};
  const PointFn pf = laurent_fn(poly, sp);
  for (int r = 0; r <= m; ++r) {
    const Scalar ev = eigenvalue_column(lam, r, m, quad, params);
    for (int k = 0; k < 5; ++k) {
      for (int attempt = 0;; ++attempt) {
        try {
          const ParamPoint p = with_x_roots(
              params, sp,
              mix64({seed, hash64("kw-eigen"), static_cast<std::uint64_t>(r),
                     static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(attempt)}));
          if (vandiejen_apply(r, pf, sp, quad, p) != ev * pf(p))
            throw Error("compute_koornwinder: eigen-equation certificate failed");
          break;
        } catch (const SingularPoint&) {
          if (attempt + 1 >= kResampleBudget) throw;
        }
      }
    }
  }
  return {lam, m, std::move(poly), quad, params};
}

bool verify_duality(const Partition& lam, const Partition& mu, int m, const ParamQuad& quad,
                    std::uint64_t seed, int trials) {
  const std::vector<GeneratorId> gens{g_a, g_b, g_c, g_d, g_q, g_t};
  const ParamQuad dq = quad.dual();
  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      try {
        RootSampler rs(mix64({seed, hash64("kw-duality"), static_cast<std::uint64_t>(trial),
                              static_cast<std::uint64_t>(attempt)}));
        const ParamPoint params = rs.sample(gens);
        const KoornwinderPoly P = compute_koornwinder(
            lam, m, quad, params,
            mix64({seed, 1, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(attempt)}));
        const KoornwinderPoly Q = compute_koornwinder(
            mu, m, dq, params,
            mix64({seed, 2, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(attempt)}));
        const Scalar lnum = P.poly.eval(principal_values(mu, m, quad.a, quad, params));
        const Scalar lden = P.poly.eval(principal_values({}, m, quad.a, quad, params));
        const Scalar rnum = Q.poly.eval(principal_values(lam, m, dq.a, dq, params));
        const Scalar rden = Q.poly.eval(principal_values({}, m, dq.a, dq, params));
        if (lden.is_zero() || rden.is_zero()) throw SingularPoint("zero duality normalizer");
        if (lnum * rden != rnum * lden) return false;
        break;
      } catch (const SingularPoint&) {
        if (attempt + 1 >= kResampleBudget) throw;
      } catch (const EigenvalueCollision&) {
        if (attempt + 1 >= kResampleBudget) throw;
      }
    }
  }
  return true;
}

bool verify_dual_cauchy_expansion(int m, int n, const ParamQuad& quad, const ParamPoint& params,
                                  std::uint64_t seed) {
  if (m < 0 || n < 0) throw ConfigError("verify_dual_cauchy_expansion: negative arity");
  if (m * n > 4) throw ConfigError("verify_dual_cauchy_expansion: box too large");
  const int tot = m + n;

  // the kernel as an exact Laurent polynomial; x in slots [0,m), y in [m,m+n)
  LaurentPoly psi = LaurentPoly::constant(tot, Scalar(1));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) {
      LaurentPoly f(tot);
      std::vector<int> e(tot, 0);
      e[i] = 1;
      f += LaurentPoly::monomial(e, Scalar(1));
      e[i] = -1;
      f += LaurentPoly::monomial(e, Scalar(1));
      e[i] = 0;
      e[m + k] = 1;
      f -= LaurentPoly::monomial(e, Scalar(1));
      e[m + k] = -1;
      f -= LaurentPoly::monomial(e, Scalar(1));
      psi = psi * f;
    }

  const ParamQuad swapped = quad.hat();
  LaurentPoly sum(tot);
  std::uint64_t idx = 0;
  for (const Partition& lam : partitions_in_box(m, n)) {
    const Partition star = conjugate_star(lam, m, n);
    const LaurentPoly px = m > 0
                               ? compute_koornwinder(lam, m, quad, params, mix64({seed, 3, idx})).poly
                               : LaurentPoly::constant(0, Scalar(1));
    const LaurentPoly py =
        n > 0 ? compute_koornwinder(star, n, swapped, params, mix64({seed, 4, idx})).poly
              : LaurentPoly::constant(0, Scalar(1));
    const LaurentPoly term = px.embed(tot, 0) * py.embed(tot, m);
    sum += (weight(star) % 2 != 0) ? term.scaled(Scalar(-1)) : term;
    ++idx;
  }
  return sum == psi;
}

bool verify_pieri_row(const Partition& mu0, int l, int m, const ParamQuad& quad,
                      const ParamPoint& params, std::uint64_t seed, int trials) {
  if (l < 0) throw ConfigError("verify_pieri_row: negative degree");
  const Partition mu = normalize_partition(mu0);
  if (static_cast<int>(mu.size()) > m)
    throw ConfigError("verify_pieri_row: partition longer than the variable count");

  const ParamQuad dq = quad.dual();
  const auto spec = spectral_point(mu, m, dq.a, dq.qmono(), dq.tmono());

  // row coefficients at the dual spectral point, keyed by the step target;
  // steps leaving the column neighborhood must vanish identically
  std::map<Partition, Scalar> coeff;
  for (const MultiIndex& nu : signed_step_indices(m, l)) {
    std::vector<int> raw(m);
    bool shaped = true;
    for (int i = 0; i < m; ++i) {
      raw[i] = part_at(mu, i + 1) + nu[i];
      if (raw[i] < 0 || (i > 0 && raw[i] > raw[i - 1])) shaped = false;
    }
    const Scalar h = hrow_coeff_at(l, nu, spec, dq, params);
    if (shaped) {
      const Partition tgt = normalize_partition(raw);
      if (pieri_in_neighborhood(tgt, mu)) {
        if (!h.is_zero()) coeff[tgt] += h;
        continue;
      }
    }
    if (!h.is_zero()) return false;
  }

  std::map<Partition, KoornwinderPoly> polys;
  std::map<Partition, Scalar> norm;
  std::vector<Partition> needed{mu};
  for (const auto& [tgt, h] : coeff) needed.push_back(tgt);
  std::uint64_t idx = 0;
  for (const Partition& nu : needed) {
    if (polys.contains(nu)) continue;
    KoornwinderPoly P = compute_koornwinder(nu, m, quad, params, mix64({seed, 5, idx++}));
    const Scalar base = P.poly.eval(principal_values({}, m, quad.a, quad, params));
    if (base.is_zero()) throw SingularPoint("zero principal normalizer");
    norm.emplace(nu, base);
    polys.emplace(nu, std::move(P));
  }

  const OperatorSpace sp{Gen::X, m};
  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      try {
        const ParamPoint p = with_x_roots(
            params, sp,
            mix64({seed, hash64("kw-pieri"), static_cast<std::uint64_t>(trial),
                   static_cast<std::uint64_t>(attempt)}));
        const std::vector<Scalar> xv = x_values(p, sp);
        const Scalar lhs = h_row(l, sp.monos(), quad.a, quad.qmono(), quad.tmono(), p) *
                           polys.at(mu).poly.eval(xv) / norm.at(mu);
        Scalar rhs;
        for (const auto& [tgt, h] : coeff) rhs += h * polys.at(tgt).poly.eval(xv) / norm.at(tgt);
        if (lhs != rhs) return false;
        break;
      } catch (const SingularPoint&) {
        if (attempt + 1 >= kResampleBudget) throw;
      }
    }
  }
  return true;
}

}  // namespace qbc

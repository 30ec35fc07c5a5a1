// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#include "qops.hpp"

#include <utility>

namespace qbc {

Scalar safe_div(const Scalar& num, const Scalar& den) {
  if (den.is_zero()) throw SingularPoint("vanishing denominator at sample point");
  return num / den;
}

Scalar w_weight(const QuarterMonomial& z, const ParamQuad& quad, const ParamPoint& p) {
  const QuarterMonomial z2 = z * z;
  Scalar num = bracket(quad.a * z, p) * bracket(quad.b * z, p) *
               bracket(quad.c * z, p) * bracket(quad.d * z, p);
  Scalar den = bracket(z2, p) * bracket(quad.qmono() * z2, p);
  return safe_div(num, den);
}

Scalar v_weight(const QuarterMonomial& z, const ParamQuad& quad, const ParamPoint& p) {
  return safe_div(bracket(quad.tmono() * z, p), bracket(z, p));
}

namespace {

// signed variable monomials x_i^{eps_i} for a signed subset
std::vector<QuarterMonomial> signed_monos(const SignedSubset& Ieps, const OperatorSpace& sp) {
  std::vector<QuarterMonomial> zs;
  for (size_t k = 0; k < Ieps.idx.size(); ++k) {
    QuarterMonomial z = sp.mono(Ieps.idx[k]);
    if (Ieps.sign[k] < 0) z = z.inv();
    zs.push_back(z);
  }
  return zs;
}

// the product shared by U_{J,r} and U_J(u;x):
// prod w(z_i) prod_{i<j} v(z_i z_j) v(q^{-1} z_i^{-1} z_j^{-1}) prod_{i,j in J\I} v(z_i x_j^{+-1})
Scalar u_core(const SignedSubset& Ieps, const std::vector<int>& rest,
              const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p) {
  const std::vector<QuarterMonomial> zs = signed_monos(Ieps, sp);
  Scalar r(1);
  for (const auto& z : zs) r = r * w_weight(z, quad, p);
  const QuarterMonomial qinv = quad.qmono().inv();
  for (size_t i = 0; i < zs.size(); ++i)
    for (size_t j = i + 1; j < zs.size(); ++j) {
      const QuarterMonomial zz = zs[i] * zs[j];
      r = r * v_weight(zz, quad, p) * v_weight(qinv * zz.inv(), quad, p);
    }
  for (const auto& z : zs)
    for (int j : rest) {
      const QuarterMonomial xj = sp.mono(j);
      r = r * v_weight(z * xj, quad, p) * v_weight(z * xj.inv(), quad, p);
    }
  return r;
}

}  // namespace

Scalar V_coeff(const SignedSubset& Ieps, const std::vector<int>& J,
               const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p) {
  const std::vector<QuarterMonomial> zs = signed_monos(Ieps, sp);
  Scalar r(1);
  for (const auto& z : zs) r = r * w_weight(z, quad, p);
  const QuarterMonomial qmono = quad.qmono();
  for (size_t i = 0; i < zs.size(); ++i)
    for (size_t j = i + 1; j < zs.size(); ++j) {
      const QuarterMonomial zz = zs[i] * zs[j];
      r = r * v_weight(zz, quad, p) * v_weight(qmono * zz, quad, p);
    }
  for (const auto& z : zs)
    for (int j : J) {
      const QuarterMonomial xj = sp.mono(j);
      r = r * v_weight(z * xj, quad, p) * v_weight(z * xj.inv(), quad, p);
    }
  return r;
}

Scalar U_coeff(const std::vector<int>& J, int r, const OperatorSpace& sp,
               const ParamQuad& quad, const ParamPoint& p) {
  if (r < 0) throw ConfigError("negative subset order");
  Scalar acc(0);
  const Scalar sign((r % 2) ? -1 : 1);
  for (const auto& Ieps : signed_subsets(J, r))
    acc = acc + sign * u_core(Ieps, complement(J, Ieps.idx), sp, quad, p);
  return acc;
}

Scalar U_gen(const std::vector<int>& J, const QuarterMonomial& u,
             const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p) {
  const int n = static_cast<int>(J.size());
  const QuarterMonomial al = quad.alpha();
  const QuarterMonomial tb = quad.tmono();
  Scalar acc(0);
  for (int s = 0; s <= n; ++s) {
    const Scalar pre = e_factorial(u, al, tb, n - s, p);
    for (const auto& Ieps : signed_subsets(J, s))
      acc = acc + pre * u_core(Ieps, complement(J, Ieps.idx), sp, quad, p);
  }
  return acc;
}

Scalar PointOperator::apply(const PointFn& f, const ParamPoint& p) const {
  Scalar acc(0);
  for (const auto& term : terms) {
    const Scalar c = term.coeff(p);
    ParamPoint sp_pt = p;
    for (size_t i = 0; i < term.shift.size(); ++i)
      if (term.shift[i] != 0)
        sp_pt = sp_pt.shifted(space.var(static_cast<int>(i) + 1), shift_base,
                              term.shift[i]);
    acc = acc + c * f(sp_pt);
  }
  return acc;
}

PointOperator vandiejen_operator(int r, const OperatorSpace& sp, const ParamQuad& quad) {
  if (r < 0) throw ConfigError("negative operator order");
  PointOperator op;
  op.space = sp;
  op.shift_base = quad.qid;
  const std::vector<int> all = sp.all();
  for (int s = 0; s <= std::min(r, sp.count); ++s) {
    for (const auto& Ieps : signed_subsets(all, s)) {
      const std::vector<int> J = complement(all, Ieps.idx);
      MultiIndex shift(sp.count, 0);
      for (size_t k = 0; k < Ieps.idx.size(); ++k)
        shift[Ieps.idx[k] - 1] = Ieps.sign[k];
      op.terms.push_back(
          {[Ieps, J, sp, quad, r, s](const ParamPoint& p) {
             return V_coeff(Ieps, J, sp, quad, p) * U_coeff(J, r - s, sp, quad, p);
           },
           shift});
    }
  }
  return op;
}

Scalar vandiejen_apply(int r, const PointFn& f, const OperatorSpace& sp,
                       const ParamQuad& quad, const ParamPoint& p) {
  return vandiejen_operator(r, sp, quad).apply(f, p);
}

Scalar dgen_apply(const QuarterMonomial& u, const PointFn& f,
                  const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p) {
  const int m = sp.count;
  const std::vector<int> all = sp.all();
  const QuarterMonomial al = quad.alpha();
  const QuarterMonomial tb = quad.tmono();

  // direct expansion over signed subsets with generating-function weights
  Scalar direct(0);
  for (int s = 0; s <= m; ++s) {
    const Scalar sign((s % 2) ? -1 : 1);
    for (const auto& Ieps : signed_subsets(all, s)) {
      const std::vector<int> J = complement(all, Ieps.idx);
      ParamPoint shifted = p;
      for (size_t k = 0; k < Ieps.idx.size(); ++k)
        shifted = shifted.shifted(sp.var(Ieps.idx[k]), quad.qid, Ieps.sign[k]);
      direct = direct + sign * V_coeff(Ieps, J, sp, quad, p) *
                            U_gen(J, u, sp, quad, p) * f(shifted);
    }
  }

  // resummation: sum_r (-1)^r (D_r f) e(u;alpha)_{t,m-r}
  Scalar bysum(0);
  for (int r = 0; r <= m; ++r) {
    const Scalar sign((r % 2) ? -1 : 1);
    bysum = bysum + sign * vandiejen_apply(r, f, sp, quad, p) *
                        e_factorial(u, al, tb, m - r, p);
  }

  if (!(direct == bysum))
    throw Error("generating-function operator: expansion forms disagree");
  return direct;
}

Scalar f_ratio(const std::vector<QuarterMonomial>& zs,
               const std::vector<QuarterMonomial>& ws, const ParamQuad& quad,
               const ParamPoint& p) {
  const QuarterMonomial s_num = (quad.qmono() / quad.tmono()).sqrt();
  const QuarterMonomial s_den = (quad.tmono() * quad.qmono()).sqrt();
  Scalar r(1);
  for (const auto& z : zs)
    for (const auto& w : ws)
      r = r * safe_div(e_pair(s_num * z, w, p), e_pair(s_den * z, w, p));
  return r;
}

Scalar conjugated_dgen(const QuarterMonomial& u, const OperatorSpace& xsp,
                       const OperatorSpace& ysp, const ParamQuad& quad,
                       ConjugatedSide side, const ParamPoint& p) {
  const OperatorSpace& own = (side == ConjugatedSide::X) ? xsp : ysp;
  const OperatorSpace& other = (side == ConjugatedSide::X) ? ysp : xsp;
  const ParamQuad q2 = (side == ConjugatedSide::X) ? quad : quad.tilde();
  const std::vector<int> all = own.all();
  const std::vector<QuarterMonomial> wmonos = other.monos();
  Scalar acc(0);
  for (int s = 0; s <= own.count; ++s) {
    const Scalar sign((s % 2) ? -1 : 1);
    for (const auto& Ieps : signed_subsets(all, s)) {
      const std::vector<int> J = complement(all, Ieps.idx);
      acc = acc + sign * V_coeff(Ieps, J, own, q2, p) * U_gen(J, u, own, q2, p) *
                      f_ratio(signed_monos(Ieps, own), wmonos, q2, p);
    }
  }
  return acc;
}

Scalar conjugated_vandiejen(int r, const OperatorSpace& xsp, const OperatorSpace& ysp,
                            const ParamQuad& quad, ConjugatedSide side,
                            const ParamPoint& p) {
  const OperatorSpace& own = (side == ConjugatedSide::X) ? xsp : ysp;
  const OperatorSpace& other = (side == ConjugatedSide::X) ? ysp : xsp;
  const ParamQuad q2 = (side == ConjugatedSide::X) ? quad : quad.tilde();
  const std::vector<int> all = own.all();
  const std::vector<QuarterMonomial> wmonos = other.monos();
  Scalar acc(0);
  for (int s = 0; s <= std::min(r, own.count); ++s) {
    for (const auto& Ieps : signed_subsets(all, s)) {
      const std::vector<int> J = complement(all, Ieps.idx);
      acc = acc + V_coeff(Ieps, J, own, q2, p) * U_coeff(J, r - s, own, q2, p) *
                      f_ratio(signed_monos(Ieps, own), wmonos, q2, p);
    }
  }
  return acc;
}

namespace {

struct NuSplit {
  MultiIndex nu;                     // |nu_i|
  std::vector<QuarterMonomial> xs;   // variables with inverted entries where nu_i < 0
};

NuSplit apply_sign_convention(const MultiIndex& nu, const std::vector<QuarterMonomial>& xs) {
  NuSplit out;
  out.nu.resize(nu.size());
  out.xs = xs;
  for (size_t i = 0; i < nu.size(); ++i) {
    out.nu[i] = nu[i] < 0 ? -nu[i] : nu[i];
    if (nu[i] < 0) out.xs[i] = xs[i].inv();
  }
  return out;
}

}  // namespace

Scalar hrow_coeff_at(int l, const MultiIndex& nu_signed,
                     const std::vector<QuarterMonomial>& xs_in,
                     const ParamQuad& quad, const ParamPoint& p) {
  const int m = static_cast<int>(xs_in.size());
  if (static_cast<int>(nu_signed.size()) != m)
    throw ConfigError("step vector length mismatch");
  const NuSplit ns = apply_sign_convention(nu_signed, xs_in);
  const MultiIndex& nu = ns.nu;
  const std::vector<QuarterMonomial>& xs = ns.xs;
  const QuarterMonomial qb = quad.qmono();
  const QuarterMonomial tb = quad.tmono();

  auto bf = [&](const QuarterMonomial& z, int k) { return bracket_factorial(z, qb, k, p); };
  auto br = [&](const QuarterMonomial& z) { return bracket(z, p); };
  auto qp = [&](int k) { return qb.pow(k); };

  const int anu = multi_weight(nu);
  MultiIndex hi(m, l);
  Scalar acc(0);
  for (int s = anu; s <= l; ++s) {
    for (const MultiIndex& np : boxed_compositions(nu, hi, s)) {
      MultiIndex mhi(m);
      for (int i = 0; i < m; ++i) mhi[i] = l - np[i];
      for (const MultiIndex& nm : boxed_compositions(MultiIndex(m, 0), mhi, l - s)) {
        Scalar num((l % 2) ? -1 : 1);
        Scalar den(1);
        for (int i = 0; i < m; ++i) {
          const QuarterMonomial& x = xs[i];
          num = num * bf(quad.a * x, np[i]) * bf(quad.b * x, np[i]) *
                bf(quad.c * x, np[i]) * bf(quad.d * x, np[i]) *
                bf(quad.a / x, nm[i]) * bf(quad.b / x, nm[i]) *
                bf(quad.c / x, nm[i]) * bf(quad.d / x, nm[i]);
          den = den * bf(x * x, nu[i] + np[i]) * bf((x * x).inv(), nu[i] + nm[i]);
        }
        for (int i = 0; i < m; ++i)
          for (int j = i; j < m; ++j) {
            num = num * br(qp(nu[i] + nu[j]) * xs[i] * xs[j]);
            den = den * br(xs[i] * xs[j]);
          }
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            const QuarterMonomial rat = xs[i] / xs[j];
            num = num * br(qp(nu[i] - nu[j]) * rat) * br(qp(np[i] - np[j]) * rat) *
                  br(qp(nm[j] - nm[i]) * rat);
            const Scalar b0 = br(rat);
            den = den * b0 * b0 * b0;
            const QuarterMonomial prod = xs[i] * xs[j];
            const QuarterMonomial iprod = prod.inv();
            num = num * bf(tb * prod, np[i] + np[j]) * bf(qb * prod, np[i] + np[j]) *
                  bf(tb * iprod, nm[i] + nm[j]) * bf(qb * iprod, nm[i] + nm[j]);
            den = den * bf(prod, nu[i] + np[j]) * bf(prod, np[i] + nu[j]) *
                  bf(iprod, nu[i] + nm[j]) * bf(iprod, nm[i] + nu[j]);
          }
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            const QuarterMonomial prod = xs[i] * xs[j];
            const QuarterMonomial iprod = prod.inv();
            const QuarterMonomial rat = xs[i] / xs[j];
            const QuarterMonomial irat = rat.inv();
            num = num * br(qp(np[i] - nm[j]) * prod) * br(iprod);
            den = den * br(qp(nu[i] + np[j]) * prod) * br(qp(nu[i] + nm[j]) * iprod);
            num = num * bf(qp(-np[j]) * rat, nu[i]) * bf(tb * rat, np[i]) *
                  bf(qp(np[j] + 1) * irat, nm[i]) * bf(tb * qp(np[j]) * irat, nm[i]) *
                  bf(prod, nu[i]) * bf(qp(nm[j] + 1) * iprod, nu[i]);
            den = den * bf(qb * rat, nu[i]) * bf(qb * rat, np[i]) *
                  bf(qb * irat, nm[i]) * bf(qp(nu[j] + 1) * irat, nm[i]) *
                  bf(qb * prod, np[i]) * bf(qp(1 - nu[j]) * iprod, nm[i]);
          }
        acc = acc + safe_div(num, den);
      }
    }
  }
  return acc;
}

Scalar hrow_coeff(int l, const MultiIndex& nu, const OperatorSpace& sp,
                  const ParamQuad& quad, const ParamPoint& p) {
  return hrow_coeff_at(l, nu, sp.monos(), quad, p);
}

Scalar hrow_coeff_topdeg(int l, const MultiIndex& nu,
                         const std::vector<QuarterMonomial>& xs,
                         const ParamQuad& quad, const ParamPoint& p) {
  const int m = static_cast<int>(xs.size());
  if (static_cast<int>(nu.size()) != m)
    throw ConfigError("step vector length mismatch");
  if (multi_weight(nu) != l) throw ConfigError("top-degree form needs |nu| = l");
  for (int v : nu)
    if (v < 0) throw ConfigError("top-degree form needs nonnegative steps");
  const QuarterMonomial qb = quad.qmono();
  const QuarterMonomial tb = quad.tmono();
  auto bf = [&](const QuarterMonomial& z, int k) { return bracket_factorial(z, qb, k, p); };
  auto br = [&](const QuarterMonomial& z) { return bracket(z, p); };

  Scalar num(1), den(1);
  for (int i = 0; i < m; ++i) {
    const QuarterMonomial& x = xs[i];
    num = num * bf(quad.a * x, nu[i]) * bf(quad.b * x, nu[i]) * bf(quad.c * x, nu[i]) *
          bf(quad.d * x, nu[i]);
    den = den * bf(x * x, 2 * nu[i]);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const QuarterMonomial prod = xs[i] * xs[j];
      const QuarterMonomial rat = xs[i] / xs[j];
      num = num * bf(tb * prod, nu[i] + nu[j]) * br(qb.pow(nu[i] - nu[j]) * rat);
      den = den * bf(prod, nu[i] + nu[j]) * br(rat);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const QuarterMonomial rat = xs[i] / xs[j];
      num = num * bf(tb * rat, nu[i]);
      den = den * bf(qb * rat, nu[i]);
    }
  return safe_div(num, den);
}

std::vector<MultiIndex> signed_step_indices(int m, int l) {
  std::vector<MultiIndex> out;
  const MultiIndex lo(m, 0);
  const MultiIndex hi(m, l);
  for (int s = 0; s <= l; ++s) {
    for (const MultiIndex& base : boxed_compositions(lo, hi, s)) {
      std::vector<int> nz;
      for (int i = 0; i < m; ++i)
        if (base[i] > 0) nz.push_back(i);
      const int k = static_cast<int>(nz.size());
      for (int mask = 0; mask < (1 << k); ++mask) {
        MultiIndex nu = base;
        for (int b = 0; b < k; ++b)
          if (mask & (1 << b)) nu[nz[b]] = -nu[nz[b]];
        out.push_back(nu);
      }
    }
  }
  return out;
}

PointOperator hrow_operator(int l, const OperatorSpace& sp, const ParamQuad& quad) {
  if (l < 0) throw ConfigError("negative row order");
  PointOperator op;
  op.space = sp;
  op.shift_base = quad.qid;
  for (const MultiIndex& nu : signed_step_indices(sp.count, l)) {
    op.terms.push_back(
        {[l, nu, sp, quad](const ParamPoint& p) {
           return hrow_coeff(l, nu, sp, quad, p);
         },
         nu});
  }
  return op;
}

Scalar hrow_apply(int l, const PointFn& f, const OperatorSpace& sp,
                  const ParamQuad& quad, const ParamPoint& p) {
  return hrow_operator(l, sp, quad).apply(f, p);
}

PointFn laurent_fn(const LaurentPoly& f, const OperatorSpace& sp) {
  return [f, sp](const ParamPoint& p) {
    std::vector<Scalar> vals;
    for (int i = 1; i <= sp.count; ++i) vals.push_back(p.value(sp.var(i)));
    return f.eval(vals);
  };
}

}  // namespace qbc

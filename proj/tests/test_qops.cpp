// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qops.hpp"

using namespace qbc;

namespace {

ParamPoint point_for(RootSampler& rs, int m, int n = 0, bool with_u = false) {
  std::vector<GeneratorId> gens{g_a, g_b, g_c, g_d, g_q, g_t};
  if (with_u) gens.push_back(g_u);
  for (int i = 1; i <= m; ++i) gens.push_back(g_x(i));
  for (int k = 1; k <= n; ++k) gens.push_back(g_y(k));
  return rs.sample(gens);
}

// rerun a randomized check on a fresh point if it lands on a pole
template <class Fn>
void with_retries(std::uint64_t seed, Fn&& fn) {
  RootSampler rs(seed);
  for (int att = 0; att < 8; ++att) {
    try {
      fn(rs);
      return;
    } catch (const SingularPoint&) {
    } catch (const ZeroValue&) {
    }
  }
  FAIL("all resampling attempts hit singular points");
}

PointFn poly_fn(const LaurentPoly& f, int m) {
  return laurent_fn(f, OperatorSpace{Gen::X, m});
}

// mixed, non-symmetric test function x1^2 x2^{-1} ... + 3 x1 + 7
LaurentPoly skew_poly(int m) {
  std::vector<int> e1(m, 0);
  e1[0] = 2;
  if (m > 1) e1[1] = -1;
  std::vector<int> e2(m, 0);
  e2[0] = 1;
  LaurentPoly f = LaurentPoly::monomial(e1, Scalar(1));
  f += LaurentPoly::monomial(e2, Scalar(3));
  f += LaurentPoly::constant(m, Scalar(7));
  return f;
}

}  // namespace

TEST_CASE("order zero acts as the identity, higher orders kill constants") {
  with_retries(hash64("qops-d0"), [](RootSampler& rs) {
    for (int m = 1; m <= 3; ++m) {
      const ParamPoint p = point_for(rs, m);
      const OperatorSpace sp{Gen::X, m};
      const ParamQuad quad = ParamQuad::standard();
      const PointFn f = poly_fn(skew_poly(m), m);
      CHECK(vandiejen_apply(0, f, sp, quad, p) == f(p));
      const PointFn one = [](const ParamPoint&) { return Scalar(1); };
      for (int r = 1; r <= m; ++r)
        CHECK(vandiejen_apply(r, one, sp, quad, p) == Scalar(0));
    }
  });
}

TEST_CASE("single-variable operator matches a literal three-term recoding") {
  with_retries(hash64("qops-aw"), [](RootSampler& rs) {
    const ParamPoint p = point_for(rs, 1);
    const OperatorSpace sp{Gen::X, 1};
    const ParamQuad quad = ParamQuad::standard();
    const PointFn f = poly_fn(skew_poly(1), 1);

    // hand transcription: w(z) = <az><bz><cz><dz> / (<z^2><q z^2>),
    // D f = w(x)(T f) + w(1/x)(T^{-1} f) - (w(x) + w(1/x)) f
    auto w = [&](const QuarterMonomial& z) {
      Scalar num = bracket(qm(g_a) * z, p) * bracket(qm(g_b) * z, p) *
                   bracket(qm(g_c) * z, p) * bracket(qm(g_d) * z, p);
      Scalar den = bracket(z.pow(2), p) * bracket(qm(g_q) * z.pow(2), p);
      return num / den;
    };
    const QuarterMonomial x = qm(g_x(1));
    const Scalar wp = w(x), wm = w(x.inv());
    const Scalar expect = wp * f(p.shifted(g_x(1), g_q, 1)) +
                          wm * f(p.shifted(g_x(1), g_q, -1)) - (wp + wm) * f(p);
    CHECK(vandiejen_apply(1, f, sp, quad, p) == expect);
  });
}

namespace {

// independent bracket-product recodings of the two coefficient families
Scalar V_bracket(const SignedSubset& Ieps, const std::vector<int>& J,
                 const OperatorSpace& sp, const ParamPoint& p) {
  const QuarterMonomial qb = qm(g_q), tb = qm(g_t);
  std::vector<QuarterMonomial> zs;
  for (size_t k = 0; k < Ieps.idx.size(); ++k) {
    QuarterMonomial z = sp.mono(Ieps.idx[k]);
    if (Ieps.sign[k] < 0) z = z.inv();
    zs.push_back(z);
  }
  Scalar r(1);
  for (const auto& z : zs) {
    r = r * bracket(qm(g_a) * z, p) * bracket(qm(g_b) * z, p) *
        bracket(qm(g_c) * z, p) * bracket(qm(g_d) * z, p) /
        (bracket(z.pow(2), p) * bracket(qb * z.pow(2), p));
  }
  for (size_t i = 0; i < zs.size(); ++i)
    for (size_t j = i + 1; j < zs.size(); ++j) {
      const QuarterMonomial zz = zs[i] * zs[j];
      r = r * bracket(tb * zz, p) * bracket(tb * qb * zz, p) /
          (bracket(zz, p) * bracket(qb * zz, p));
    }
  for (const auto& z : zs)
    for (int j : J) {
      const QuarterMonomial xj = sp.mono(j);
      r = r * bracket(tb * z * xj, p) * bracket(tb * z / xj, p) /
          (bracket(z * xj, p) * bracket(z / xj, p));
    }
  return r;
}

Scalar U_bracket(const std::vector<int>& J, int r, const OperatorSpace& sp,
                 const ParamPoint& p) {
  const QuarterMonomial qb = qm(g_q), tb = qm(g_t);
  Scalar acc(0);
  for (const auto& Ieps : signed_subsets(J, r)) {
    std::vector<QuarterMonomial> zs;
    for (size_t k = 0; k < Ieps.idx.size(); ++k) {
      QuarterMonomial z = sp.mono(Ieps.idx[k]);
      if (Ieps.sign[k] < 0) z = z.inv();
      zs.push_back(z);
    }
    Scalar term(1);
    for (const auto& z : zs)
      term = term * bracket(qm(g_a) * z, p) * bracket(qm(g_b) * z, p) *
             bracket(qm(g_c) * z, p) * bracket(qm(g_d) * z, p) /
             (bracket(z.pow(2), p) * bracket(qb * z.pow(2), p));
    for (size_t i = 0; i < zs.size(); ++i)
      for (size_t j = i + 1; j < zs.size(); ++j) {
        const QuarterMonomial zz = zs[i] * zs[j];
        const QuarterMonomial izz = zz.inv();
        term = term * bracket(tb * zz, p) * bracket(tb / qb * izz, p) /
               (bracket(zz, p) * bracket(izz / qb, p));
      }
    const std::vector<int> rest = complement(J, Ieps.idx);
    for (const auto& z : zs)
      for (int j : rest) {
        const QuarterMonomial xj = sp.mono(j);
        term = term * bracket(tb * z * xj, p) * bracket(tb * z / xj, p) /
               (bracket(z * xj, p) * bracket(z / xj, p));
      }
    acc = acc + term;
  }
  return ((r % 2) ? Scalar(-1) : Scalar(1)) * acc;
}

}  // namespace

TEST_CASE("subset coefficients match their bracket-product recodings") {
  with_retries(hash64("qops-brackets"), [](RootSampler& rs) {
    const int m = 3;
    const ParamPoint p = point_for(rs, m);
    const OperatorSpace sp{Gen::X, m};
    const ParamQuad quad = ParamQuad::standard();
    const std::vector<int> all = sp.all();
    // evaluate outside CHECK so a pole escapes to with_retries instead of
    // being swallowed by the assertion macro
    for (int s = 0; s <= m; ++s) {
      for (const auto& Ieps : signed_subsets(all, s)) {
        const std::vector<int> J = complement(all, Ieps.idx);
        const Scalar lib = V_coeff(Ieps, J, sp, quad, p);
        const Scalar ref = V_bracket(Ieps, J, sp, p);
        CHECK(lib == ref);
      }
    }
    for (int r = 0; r <= m; ++r) {
      const Scalar lib_all = U_coeff(all, r, sp, quad, p);
      const Scalar ref_all = U_bracket(all, r, sp, p);
      CHECK(lib_all == ref_all);
      const std::vector<int> sub{1, 3};
      const Scalar lib_sub = U_coeff(sub, r, sp, quad, p);
      const Scalar ref_sub = U_bracket(sub, r, sp, p);
      CHECK(lib_sub == ref_sub);
    }
  });
}

TEST_CASE("generating coefficients regroup into fixed-order coefficients") {
  with_retries(hash64("qops-regroup"), [](RootSampler& rs) {
    const int m = 3;
    const ParamPoint p = point_for(rs, m, 0, true);
    const OperatorSpace sp{Gen::X, m};
    const ParamQuad quad = ParamQuad::standard();
    const QuarterMonomial u = qm(g_u);
    const QuarterMonomial al = quad.alpha();
    const std::vector<std::vector<int>> js{{}, {2}, {1, 3}, {1, 2, 3}};
    for (const auto& J : js) {
      Scalar expect(0);
      for (int r = 0; r <= static_cast<int>(J.size()); ++r) {
        const Scalar sign((r % 2) ? -1 : 1);
        expect = expect + sign * U_coeff(J, r, sp, quad, p) *
                              e_factorial(u, al, qm(g_t), static_cast<int>(J.size()) - r, p);
      }
      CHECK(U_gen(J, u, sp, quad, p) == expect);
    }
  });
}

TEST_CASE("generating operator on the constant function") {
  with_retries(hash64("qops-dgen1"), [](RootSampler& rs) {
    for (int m = 1; m <= 3; ++m) {
      const ParamPoint p = point_for(rs, m, 0, true);
      const OperatorSpace sp{Gen::X, m};
      const ParamQuad quad = ParamQuad::standard();
      const PointFn one = [](const ParamPoint&) { return Scalar(1); };
      // dgen_apply internally cross-checks the two expansion routes
      CHECK(dgen_apply(qm(g_u), one, sp, quad, p) ==
            e_factorial(qm(g_u), quad.alpha(), qm(g_t), m, p));
    }
  });
}

TEST_CASE("hyperoctahedral equivariance on symmetric inputs") {
  with_retries(hash64("qops-equivariance"), [](RootSampler& rs) {
    const int m = 3;
    const ParamPoint p = point_for(rs, m);
    const OperatorSpace sp{Gen::X, m};
    const ParamQuad quad = ParamQuad::standard();
    const PointFn f = poly_fn(orbit_sum({2, 1}, m), m);
    for (int r = 1; r <= 2; ++r) {
      const Scalar base = vandiejen_apply(r, f, sp, quad, p);
      CHECK(vandiejen_apply(r, f, sp, quad, p.swapped(g_x(1), g_x(2))) == base);
      CHECK(vandiejen_apply(r, f, sp, quad, p.inverted(g_x(3))) == base);
    }
    const Scalar h1 = hrow_apply(1, f, sp, quad, p);
    CHECK(hrow_apply(1, f, sp, quad, p.swapped(g_x(2), g_x(3))) == h1);
    CHECK(hrow_apply(1, f, sp, quad, p.inverted(g_x(1))) == h1);
  });
}

TEST_CASE("row coefficients: double sum agrees with the closed top product") {
  with_retries(hash64("qops-hrow-top"), [](RootSampler& rs) {
    for (int m = 1; m <= 3; ++m) {
      const ParamPoint p = point_for(rs, m);
      const OperatorSpace sp{Gen::X, m};
      const ParamQuad quad = ParamQuad::standard();
      const std::vector<QuarterMonomial> xs = sp.monos();
      for (int l = 1; l <= 2; ++l) {
        for (const MultiIndex& nu : signed_step_indices(m, l)) {
          if (multi_abs_weight(nu) != l) continue;
          MultiIndex anu(nu.size());
          std::vector<QuarterMonomial> sx = xs;
          for (size_t i = 0; i < nu.size(); ++i) {
            anu[i] = nu[i] < 0 ? -nu[i] : nu[i];
            if (nu[i] < 0) sx[i] = xs[i].inv();
          }
          CHECK(hrow_coeff_at(l, nu, xs, quad, p) ==
                hrow_coeff_topdeg(l, anu, sx, quad, p));
        }
      }
    }
  });
}

TEST_CASE("row coefficients vanish beyond the step budget") {
  with_retries(hash64("qops-hrow-zero"), [](RootSampler& rs) {
    const ParamPoint p = point_for(rs, 2);
    const OperatorSpace sp{Gen::X, 2};
    const ParamQuad quad = ParamQuad::standard();
    const std::vector<QuarterMonomial> xs = sp.monos();
    CHECK(hrow_coeff_at(1, {1, 1}, xs, quad, p) == Scalar(0));
    CHECK(hrow_coeff_at(1, {2, 0}, xs, quad, p) == Scalar(0));
    CHECK(hrow_coeff_at(1, {-1, 1}, xs, quad, p) == Scalar(0));
  });
}

TEST_CASE("row operator structure") {
  const OperatorSpace sp1{Gen::X, 1};
  const OperatorSpace sp2{Gen::X, 2};
  const ParamQuad quad = ParamQuad::standard();
  CHECK(hrow_operator(2, sp1, quad).terms.size() == 5);   // 0, +-1, +-2
  CHECK(hrow_operator(1, sp2, quad).terms.size() == 5);   // 0 and 4 signed unit steps
  with_retries(hash64("qops-hrow-id"), [](RootSampler& rs) {
    const ParamPoint p = point_for(rs, 2);
    const OperatorSpace sp{Gen::X, 2};
    const PointFn f = poly_fn(skew_poly(2), 2);
    CHECK(hrow_apply(0, f, sp, ParamQuad::standard(), p) == f(p));
  });
}

TEST_CASE("single-variable row operator is the rescaled three-term operator") {
  with_retries(hash64("qops-hrow-aw"), [](RootSampler& rs) {
    const ParamPoint p = point_for(rs, 1);
    const OperatorSpace sp{Gen::X, 1};
    const ParamQuad quad = ParamQuad::standard();
    const PointFn f = poly_fn(skew_poly(1), 1);
    const Scalar scale = bracket(qm(g_t), p) / bracket(qm(g_q), p);
    CHECK(hrow_apply(1, f, sp, quad, p) == scale * vandiejen_apply(1, f, sp, quad, p));
  });
}

TEST_CASE("kernel-conjugated generating identity at the smallest sizes") {
  with_retries(hash64("qops-conj"), [](RootSampler& rs) {
    const ParamQuad quad = ParamQuad::standard();
    const QuarterMonomial u = qm(g_u);
    {
      const ParamPoint p = point_for(rs, 1, 1, true);
      const OperatorSpace xsp{Gen::X, 1}, ysp{Gen::Y, 1};
      CHECK(conjugated_dgen(u, xsp, ysp, quad, ConjugatedSide::X, p) ==
            conjugated_dgen(u, xsp, ysp, quad, ConjugatedSide::Y, p));
    }
    {
      const ParamPoint p = point_for(rs, 2, 1, true);
      const OperatorSpace xsp{Gen::X, 2}, ysp{Gen::Y, 1};
      const Scalar pre = e_factorial(u, quad.alpha(), qm(g_t), 1, p);
      CHECK(conjugated_dgen(u, xsp, ysp, quad, ConjugatedSide::X, p) ==
            pre * conjugated_dgen(u, xsp, ysp, quad, ConjugatedSide::Y, p));
    }
  });
}

TEST_CASE("parameter quadruple transforms") {
  const ParamQuad quad = ParamQuad::standard();
  with_retries(hash64("qops-quad"), [&](RootSampler& rs) {
    const ParamPoint p = point_for(rs, 0, 0, false);
    const Scalar alpha = p.eval(quad.alpha());
    CHECK(alpha * alpha ==
          p.value(g_a) * p.value(g_b) * p.value(g_c) * p.value(g_d) / p.value(g_q));
    // tilde alpha = t / alpha
    CHECK(p.eval(quad.tilde().alpha()) == p.value(g_t) / alpha);
    // hat swaps the two bases, alpha picks up sqrt(q/t)
    CHECK(p.eval(quad.hat().alpha()) * p.eval((qm(g_t) / qm(g_q)).sqrt()) == alpha);
    // the dual quadruple is an involution with the same alpha
    const ParamQuad dd = quad.dual().dual();
    CHECK(p.eval(dd.a) == p.eval(quad.a));
    CHECK(p.eval(dd.b) == p.eval(quad.b));
    CHECK(p.eval(dd.c) == p.eval(quad.c));
    CHECK(p.eval(dd.d) == p.eval(quad.d));
    // duality swaps the roles of alpha and the first parameter
    CHECK(p.eval(quad.dual().alpha()) == p.value(g_a));
  });
}

// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// The van Diejen q-difference operators D_r, their generating function D(u),
// the kernel-conjugated rational actions, and the row-type operators H_l with
// explicit coefficients.  Operators act pointwise: a term is an exact
// coefficient at the sample point times the function value at a q-shifted
// point; nothing is ever manipulated symbolically.

#pragma once

#include <functional>
#include <vector>

#include "combinat.hpp"
#include "scalars.hpp"

namespace qbc {

// a family of difference variables (x_1..x_m or y_1..y_n)
struct OperatorSpace {
  Gen family = Gen::X;
  int count = 0;

  GeneratorId var(int i) const { return {family, i}; }  // 1-based
  QuarterMonomial mono(int i) const { return qm(var(i)); }
  std::vector<int> all() const {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = i + 1;
    return v;
  }
  std::vector<QuarterMonomial> monos() const {
    std::vector<QuarterMonomial> v;
    for (int i = 1; i <= count; ++i) v.push_back(mono(i));
    return v;
  }
};

// The Askey-Wilson parameter quadruple together with the two base generators.
// qid names the shift base; the hat map literally swaps qid and tid, which
// re-bases every formula (shifts, factorials, w/v weights) at once.
struct ParamQuad {
  QuarterMonomial a, b, c, d;
  GeneratorId qid = g_q, tid = g_t;

  static ParamQuad standard() {
    return {qm(g_a), qm(g_b), qm(g_c), qm(g_d), g_q, g_t};
  }

  QuarterMonomial qmono() const { return qm(qid); }
  QuarterMonomial tmono() const { return qm(tid); }
  QuarterMonomial alpha() const { return (a * b * c * d / qmono()).sqrt(); }

  // (a,b,c,d) -> sqrt(tq)/(a,b,c,d); alpha goes to t/alpha
  ParamQuad tilde() const {
    const QuarterMonomial s = (tmono() * qmono()).sqrt();
    return {s / a, s / b, s / c, s / d, qid, tid};
  }
  // swap the roles of q and t
  ParamQuad hat() const { return {a, b, c, d, tid, qid}; }
  // (alpha, ab/alpha, ac/alpha, ad/alpha): the spectral-dual quadruple
  ParamQuad dual() const {
    const QuarterMonomial al = alpha();
    return {al, a * b / al, a * c / al, a * d / al, qid, tid};
  }
};

using PointFn = std::function<Scalar(const ParamPoint&)>;

// division guarded against sampled-point singularities
Scalar safe_div(const Scalar& num, const Scalar& den);

// w(z) = <az,bz,cz,dz> / <z^2, q z^2>
Scalar w_weight(const QuarterMonomial& z, const ParamQuad& quad, const ParamPoint& p);
// v(z) = <tz> / <z>
Scalar v_weight(const QuarterMonomial& z, const ParamQuad& quad, const ParamPoint& p);

// V_{eps I, J} = prod_{i in I} w(x_i^eps) prod_{i<j in I} v(x_i^e x_j^e) v(q x_i^e x_j^e)
//               prod_{i in I, j in J} v(x_i^e x_j^{+-1})
Scalar V_coeff(const SignedSubset& Ieps, const std::vector<int>& J,
               const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p);
// U_{J,r} = sum over signed r-subsets I of J of (-1)^r prod w(x^d)
//           prod_{i<j in I} v(x_i^d x_j^d) v(q^{-1} x_i^{-d} x_j^{-d})
//           prod_{i in I, j in J\I} v(x_i^d x_j^{+-1})
Scalar U_coeff(const std::vector<int>& J, int r, const OperatorSpace& sp,
               const ParamQuad& quad, const ParamPoint& p);
// U_J(u;x) = sum over all signed subsets I of J of e(u;alpha)_{t,|J|-|I|} times
//            the same (unsigned) products as U_{J,r}
Scalar U_gen(const std::vector<int>& J, const QuarterMonomial& u,
             const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p);

// finite sum of coefficient * shift terms; shifts multiply the fourth root of
// each variable by the fourth root of shift_base, entrywise
struct PointOperator {
  struct Term {
    PointFn coeff;
    MultiIndex shift;
  };
  OperatorSpace space;
  GeneratorId shift_base;
  std::vector<Term> terms;

  Scalar apply(const PointFn& f, const ParamPoint& p) const;
};

PointOperator vandiejen_operator(int r, const OperatorSpace& sp, const ParamQuad& quad);
Scalar vandiejen_apply(int r, const PointFn& f, const OperatorSpace& sp,
                       const ParamQuad& quad, const ParamPoint& p);

// D(u) f: computed both as the direct expansion over signed subsets with
// U_gen weights and as sum_r (-1)^r D_r f e(u;alpha)_{t,m-r}; the two exact
// values must coincide (internal consistency guard).
Scalar dgen_apply(const QuarterMonomial& u, const PointFn& f,
                  const OperatorSpace& sp, const ParamQuad& quad, const ParamPoint& p);

// F(z;w) = prod_{i,k} e(sqrt(q/t) z_i; w_k) / e(sqrt(tq) z_i; w_k)
Scalar f_ratio(const std::vector<QuarterMonomial>& zs,
               const std::vector<QuarterMonomial>& ws, const ParamQuad& quad,
               const ParamPoint& p);

// The two sides of the kernel-conjugated generating-function identity.
// X side: sum_{I,eps} (-1)^{|I|} V_{eps I,I^c}(x) U_{I^c}(u;x) F(x_I^eps; y).
// Y side: the same structure over the y family with tilde parameters,
// without the e(u;alpha)_{t,m-n} prefactor.
enum class ConjugatedSide { X, Y };
Scalar conjugated_dgen(const QuarterMonomial& u, const OperatorSpace& xsp,
                       const OperatorSpace& ysp, const ParamQuad& quad,
                       ConjugatedSide side, const ParamPoint& p);

// conjugated single-order operators: sum_{|I| <= r} V U_{I^c, r-|I|} F(x_I^eps; y)
// (and the tilde y-analogue), the building block of the coefficient-wise
// kernel identities
Scalar conjugated_vandiejen(int r, const OperatorSpace& xsp, const OperatorSpace& ysp,
                            const ParamQuad& quad, ConjugatedSide side,
                            const ParamPoint& p);

// Explicit row-operator coefficient H^{(l)}_nu at the points xs (signed nu:
// negative entries invert the corresponding variable first).
Scalar hrow_coeff_at(int l, const MultiIndex& nu, const std::vector<QuarterMonomial>& xs,
                     const ParamQuad& quad, const ParamPoint& p);
Scalar hrow_coeff(int l, const MultiIndex& nu, const OperatorSpace& sp,
                  const ParamQuad& quad, const ParamPoint& p);
// closed product form valid when nu is in N^m with |nu| = l
Scalar hrow_coeff_topdeg(int l, const MultiIndex& nu,
                         const std::vector<QuarterMonomial>& xs,
                         const ParamQuad& quad, const ParamPoint& p);

// all nu in Z^m with 0 <= sum |nu_i| <= l, deterministic order
std::vector<MultiIndex> signed_step_indices(int m, int l);

PointOperator hrow_operator(int l, const OperatorSpace& sp, const ParamQuad& quad);
Scalar hrow_apply(int l, const PointFn& f, const OperatorSpace& sp,
                  const ParamQuad& quad, const ParamPoint& p);

// evaluate a Laurent polynomial on a variable family as a PointFn
PointFn laurent_fn(const LaurentPoly& f, const OperatorSpace& sp);

}  // namespace qbc

// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// Partitions and dominance order, multi-index chains, Laurent polynomials
// carrying the hyperoctahedral (permute/invert) action, and the column/row
// interpolation sums.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "scalars.hpp"

namespace qbc {

// weakly decreasing non-negative parts; helpers treat missing parts as 0
using Partition = std::vector<int>;
using MultiIndex = std::vector<int>;

struct OutOfBox : Error {
  using Error::Error;
};
struct ChainOverflow : Error {
  using Error::Error;
};

// ------------------------------------------------------------- partitions

Partition normalize_partition(Partition lam);  // strip trailing zeros, validate
int part_at(const Partition& lam, int i);      // 1-based, 0 beyond length
long weight(const Partition& lam);
Partition conjugate(const Partition& lam);
bool contains(const Partition& lam, const Partition& mu);  // lam >= mu partwise

// partial-sum dominance with both sides padded to length m; weights may differ
bool dominance_leq(const Partition& mu, const Partition& nu, int m);

// all partitions of length <= m with every part <= maxpart (the (maxpart^m) box)
std::vector<Partition> partitions_in_box(int m, int maxpart);
// {mu : mu <= lam in dominance, length <= m}, in a graded-lex linear
// extension of dominance (weight ascending, then lexicographic ascending)
std::vector<Partition> dominance_ideal(const Partition& lam, int m);

// lam* = (m - lam'_n, ..., m - lam'_1) for lam inside the (n^m) box
Partition conjugate_star(const Partition& lam, int m, int n);

// membership in P+_mu: |lam'_j - mu'_j| <= 1 for every column j
bool pieri_in_neighborhood(const Partition& lam, const Partition& mu);
// the finite slice of P+_mu reachable by a step of total size <= l,
// i.e. additionally sum_i |lam_i - mu_i| <= l and length(lam) <= m
std::vector<Partition> pieri_neighborhood(const Partition& mu, int m, int l);

// ----------------------------------------------------------- multi-indices

bool multi_leq(const MultiIndex& a, const MultiIndex& b);  // componentwise
long multi_weight(const MultiIndex& a);                    // sum of entries
long multi_abs_weight(const MultiIndex& a);                // sum of |entries|

// all nu in N^m with |nu| = l
std::vector<MultiIndex> compositions_of(int l, int m);
// all nu in N^m with lo <= nu <= hi componentwise and |nu| = l (lo may be
// empty meaning 0)
std::vector<MultiIndex> boxed_compositions(const MultiIndex& lo, const MultiIndex& hi, long l);

struct Chain4 {
  MultiIndex mu_minus, nu_minus, nu_plus, mu_plus;
};

long chain_count(const MultiIndex& alpha);  // prod_i C(alpha_i + 4, 4)
// every 0 <= mu- <= nu- <= nu+ <= mu+ <= alpha, sorted lexicographically by
// (mu+, nu+, nu-, mu-); throws ChainOverflow if the count exceeds budget
std::vector<Chain4> chain_enumerate(const MultiIndex& alpha, long budget);

// ---------------------------------------------------------- signed subsets

struct SignedSubset {
  std::vector<int> idx;   // strictly increasing, 1-based
  std::vector<int> sign;  // +1/-1, aligned with idx
};

// all subsets of `pool` of the given size, each with all sign patterns;
// pool entries must be strictly increasing
std::vector<SignedSubset> signed_subsets(const std::vector<int>& pool, int size);
std::vector<int> complement(const std::vector<int>& pool, const std::vector<int>& idx);

// ------------------------------------------------------------ LaurentPoly

// Dense fixed-arity exponent keys; coefficients exact, zero coeffs erased.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly monomial(std::vector<int> expo, const Scalar& coeff);
  static LaurentPoly constant(int nvars, const Scalar& coeff);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const std::vector<int>& expo) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(const Scalar& c) const;
  bool operator==(const LaurentPoly& o) const = default;

  Scalar eval(const std::vector<Scalar>& values) const;
  LaurentPoly swap_vars(int i, int j) const;  // 0-based variable slots
  LaurentPoly invert_var(int i) const;
  // re-embed into `total` variables with exponents shifted to slot `offset`
  LaurentPoly embed(int total, int offset) const;

 private:
  void add_term(const std::vector<int>& expo, const Scalar& c);
  int nvars_;
  std::map<std::vector<int>, Scalar> terms_;
};

LaurentPoly orbit_sum(const Partition& mu, int m);  // m_mu
bool w_invariant(const LaurentPoly& f);

// ----------------------------------------------------- interpolation sums

// column type: sum over i_1<...<i_r of prod_j e(x_{i_j}; tbase^{i_j - j} alpha)
Scalar e_col(int r, const std::vector<QuarterMonomial>& xs,
             const QuarterMonomial& alpha, const QuarterMonomial& tbase,
             const ParamPoint& p);
// the equivalent reversed-weight form, prod_j e(x_{i_j}; tbase^{m - i_j - r + j} alpha)
Scalar e_col_alt(int r, const std::vector<QuarterMonomial>& xs,
                 const QuarterMonomial& alpha, const QuarterMonomial& tbase,
                 const ParamPoint& p);
// true iff e_col vanishes exactly at x = alpha tbase^{rho_m} qbase^{mu}
bool e_col_vanishing_check(int r, const Partition& mu, int m,
                           const QuarterMonomial& alpha, const QuarterMonomial& qbase,
                           const QuarterMonomial& tbase, const ParamPoint& p);

// row type: sum over compositions nu of l with chained base points
//   prod_k <t>_{q,nu_k}/<q>_{q,nu_k} * e(xs_k; tbase^{k-1} qbase^{nu_1+..+nu_{k-1}} base_pt)_{q,nu_k}
Scalar h_row(int l, const std::vector<QuarterMonomial>& xs,
             const QuarterMonomial& base_pt, const QuarterMonomial& qbase,
             const QuarterMonomial& tbase, const ParamPoint& p);

// the spectral points x_i = alpha tbase^{m-i} qbase^{lam_i}, i = 1..m
std::vector<QuarterMonomial> spectral_point(const Partition& lam, int m,
                                            const QuarterMonomial& alpha,
                                            const QuarterMonomial& qbase,
                                            const QuarterMonomial& tbase);

}  // namespace qbc

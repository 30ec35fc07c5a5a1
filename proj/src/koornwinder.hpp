// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// Koornwinder polynomials via the triangular eigenproblem for the first
// q-difference operator, plus the duality, dual-Cauchy-expansion and
// row-type Pieri checks built on top of them.  Coefficients are exact
// rationals attached to one fixed parameter point.

#pragma once

#include <cstdint>
#include <vector>

#include "combinat.hpp"
#include "qops.hpp"
#include "scalars.hpp"

namespace qbc {

// evaluation matrix of the interpolation grid came out singular; resample
struct DegenerateSample : Error {
  using Error::Error;
};
// held-out points reject a computed expansion; indicates a real bug upstream
struct NotInSpan : Error {
  using Error::Error;
};
// two diagonal eigenvalues coincide at this parameter point; resample
struct EigenvalueCollision : Error {
  using Error::Error;
};

// column eigenvalue: the order-r interpolation sum at x_i = alpha t^{m-i} q^{lam_i}
Scalar eigenvalue_column(const Partition& lam, int r, int m, const ParamQuad& quad,
                         const ParamPoint& p);
// row eigenvalue: the degree-l row sum at the same point
Scalar eigenvalue_row(const Partition& lam, int l, int m, const ParamQuad& quad,
                      const ParamPoint& p);

// values of x_i at the principal point base * t^{m-i} * q^{mu_i}
std::vector<Scalar> principal_values(const Partition& mu, int m, const QuarterMonomial& base,
                                     const ParamQuad& quad, const ParamPoint& p);

struct KoornwinderBasisMatrix {
  std::vector<Partition> basis;             // dominance ideal, graded-lex ascending
  std::vector<std::vector<Scalar>> matrix;  // matrix[nu][mu]: D_1 m_mu = sum_nu matrix[nu][mu] m_nu
};

struct KoornwinderPoly {
  Partition lam;
  int m = 0;
  LaurentPoly poly{0};  // m variables, unit coefficient on the top orbit
  ParamQuad quad;
  ParamPoint params;  // the parameter point the coefficients are valid for
};

// expand D_1 against every orbit sum in the dominance ideal of lam by exact
// evaluation at random grid points; certified on 3 held-out points
KoornwinderBasisMatrix build_matrix(const Partition& lam, int m, const ParamQuad& quad,
                                    const ParamPoint& params, std::uint64_t seed);

// triangular eigenvector with unit top coefficient; certified against the
// eigen-equations of every operator order r <= m at 5 fresh points each
KoornwinderPoly compute_koornwinder(const Partition& lam, int m, const ParamQuad& quad,
                                    const ParamPoint& params, std::uint64_t seed);

// P_lam(a t^rho q^mu)/P_lam(a t^rho) == P_mu(al t^rho q^lam)/P_mu(al t^rho)
// with the spectral-dual quadruple on the right, at `trials` parameter points
bool verify_duality(const Partition& lam, const Partition& mu, int m, const ParamQuad& quad,
                    std::uint64_t seed, int trials);

// prod_{i,k} e(x_i; y_k) == sum over lam in the (n^m) box of
// (-1)^{|lam*|} P_lam(x) Phat_{lam*}(y), exactly as Laurent polynomials;
// Phat uses the base-swapped quadruple
bool verify_dual_cauchy_expansion(int m, int n, const ParamQuad& quad, const ParamPoint& params,
                                  std::uint64_t seed);

// h_l(x; a) P_mu(x)/P_mu(a t^rho) == sum over steps nu of the row coefficient
// at the dual spectral point times P_{mu+nu}(x)/P_{mu+nu}(a t^rho); steps that
// leave the column neighborhood must carry an exactly zero coefficient
bool verify_pieri_row(const Partition& mu, int l, int m, const ParamQuad& quad,
                      const ParamPoint& params, std::uint64_t seed, int trials);

}  // namespace qbc

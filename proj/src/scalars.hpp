// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact rational scalars, formal monomials with quarter-integer exponents,
// and the bracket / q-shifted-factorial primitives everything else is built
// from.  All arithmetic is exact; there are no tolerances anywhere.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qbc {

// ----------------------------------------------------------------- errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sqrt of a monomial that is not a perfect square on the quarter lattice
struct GranularityError : Error {
  using Error::Error;
};
// division by an exact zero value
struct ZeroValue : Error {
  using Error::Error;
};
// a denominator of an identity vanished at the sampled point; caller resamples
struct SingularPoint : Error {
  using Error::Error;
};
// invalid sizes / unknown generators / malformed input
struct ConfigError : Error {
  using Error::Error;
};

// ----------------------------------------------------------------- Scalar

// Arbitrary-precision rational, always reduced with positive denominator.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }
  bool operator<(const Scalar& o) const { return v_ < o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_positive() const { return sgn(v_) > 0; }

  Scalar inv() const;        // throws ZeroValue on zero
  Scalar pow(long e) const;  // integer exponents, negative allowed

  // canonical string: "p" or "p/q", q > 1
  std::string str() const { return v_.get_str(); }
  static Scalar from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

// ------------------------------------------------------------ GeneratorId

enum class Gen : std::uint8_t { A, B, C, D, Q, T, U, X, Y };

// A named generator of the parameter/variable alphabet.  X and Y carry a
// 1-based index; the scalar parameters carry index 0.
struct GeneratorId {
  Gen kind = Gen::A;
  int index = 0;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
  std::string name() const;
};

inline constexpr GeneratorId g_a{Gen::A, 0};
inline constexpr GeneratorId g_b{Gen::B, 0};
inline constexpr GeneratorId g_c{Gen::C, 0};
inline constexpr GeneratorId g_d{Gen::D, 0};
inline constexpr GeneratorId g_q{Gen::Q, 0};
inline constexpr GeneratorId g_t{Gen::T, 0};
inline constexpr GeneratorId g_u{Gen::U, 0};
inline constexpr GeneratorId g_x(int i) { return {Gen::X, i}; }
inline constexpr GeneratorId g_y(int k) { return {Gen::Y, k}; }

// -------------------------------------------------------- QuarterMonomial

// Formal product of generators with exponents on the (1/4)Z lattice, stored
// as integer quarter-units.  sqrt() halves all exponents and is defined only
// when every quarter-unit is even.
class QuarterMonomial {
 public:
  QuarterMonomial() = default;

  static QuarterMonomial one() { return {}; }
  static QuarterMonomial gen(GeneratorId g, int power = 1);

  QuarterMonomial& operator*=(const QuarterMonomial& o);
  friend QuarterMonomial operator*(QuarterMonomial a, const QuarterMonomial& b) {
    return a *= b;
  }
  friend QuarterMonomial operator/(const QuarterMonomial& a, const QuarterMonomial& b) {
    return a * b.inv();
  }

  QuarterMonomial inv() const { return pow(-1); }
  QuarterMonomial pow(int k) const;
  QuarterMonomial sqrt() const;  // GranularityError on odd quarter-units

  bool is_one() const { return e_.empty(); }
  const std::map<GeneratorId, int>& quarters() const { return e_; }

  friend auto operator<=>(const QuarterMonomial&, const QuarterMonomial&) = default;
  std::string str() const;

 private:
  std::map<GeneratorId, int> e_;  // generator -> exponent in quarter-units
};

inline QuarterMonomial qm(GeneratorId g, int power = 1) {
  return QuarterMonomial::gen(g, power);
}

// ------------------------------------------------------------- ParamPoint

// Assignment of a positive rational *fourth root* to each generator.  The
// positive-fourth-root convention fixes all square-root branches at once:
// eval() of any quarter-lattice monomial is the corresponding integer power
// of the stored roots.  eval is a monoid homomorphism by construction.
class ParamPoint {
 public:
  ParamPoint() = default;

  void set_root(GeneratorId g, const Scalar& fourth_root);
  bool has(GeneratorId g) const { return root_.contains(g); }
  const Scalar& root(GeneratorId g) const;  // ConfigError if unassigned
  Scalar value(GeneratorId g) const { return root(g).pow(4); }

  Scalar eval(const QuarterMonomial& z) const;

  // q-shift in multiplicative notation: the fourth root of `var` is
  // multiplied by the fourth root of `base` taken `steps` times.
  ParamPoint shifted(GeneratorId var, GeneratorId base, int steps) const;
  ParamPoint with_root(GeneratorId g, const Scalar& fourth_root) const;
  // hyperoctahedral moves on a variable family (used by symmetry checks)
  ParamPoint swapped(GeneratorId g1, GeneratorId g2) const;
  ParamPoint inverted(GeneratorId g) const;

  const std::map<GeneratorId, Scalar>& roots() const { return root_; }

 private:
  std::map<GeneratorId, Scalar> root_;
};

// ------------------------------------------------------------- primitives

// <z> = z^{1/2} - z^{-1/2}
Scalar bracket(const QuarterMonomial& z, const ParamPoint& p);

// <z>_{base,l} = prod_{i=1..l} <base^{i-1} z>,  l >= 0
Scalar bracket_factorial(const QuarterMonomial& z, const QuarterMonomial& base,
                         int l, const ParamPoint& p);

// (z;base)_l = prod_{i=1..l} (1 - base^{i-1} z),  l >= 0
Scalar pochhammer(const QuarterMonomial& z, const QuarterMonomial& base,
                  int l, const ParamPoint& p);

// e(z;w) = <zw><z/w> = z + 1/z - w - 1/w
Scalar e_pair(const QuarterMonomial& z, const QuarterMonomial& w, const ParamPoint& p);

// e(z;w)_{base,l}: for l >= 0 the product e(z;w) e(z;base w) ... e(z;base^{l-1} w);
// for l < 0 the reciprocal 1 / (e(z;base^l w) ... e(z;base^{-1} w)).
// Throws SingularPoint when a reciprocal factor vanishes.
Scalar e_factorial(const QuarterMonomial& z, const QuarterMonomial& w,
                   const QuarterMonomial& base, int l, const ParamPoint& p);

// [l r]_t = (-1)^r <t^{-l}>_{t,r} / <t>_{t,r}; defined for all integer l,
// r >= 0 (vanishes for 0 <= l < r).  Throws SingularPoint if <t>_{t,r} = 0.
Scalar t_binomial(int l, int r, const QuarterMonomial& tbase, const ParamPoint& p);

// ---------------------------------------------------------------- sampling

// Platform-independent 64-bit hashing/mixing for seed derivation.
std::uint64_t hash64(std::string_view s);
std::uint64_t mix64(std::initializer_list<std::uint64_t> parts);

// Deterministic stream of fourth roots drawn from {2..19}/{1..7}, reduced,
// rejecting 1 and previously issued values so distinct generators never
// collide within one point.
class RootSampler {
 public:
  explicit RootSampler(std::uint64_t seed) : rng_(seed) {}

  Scalar next_root();
  ParamPoint sample(const std::vector<GeneratorId>& gens);

 private:
  std::mt19937_64 rng_;
  std::vector<Scalar> used_;
};

}  // namespace qbc

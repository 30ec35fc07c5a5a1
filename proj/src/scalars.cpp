// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#include "scalars.hpp"

#include <sstream>

namespace qbc {

// ----------------------------------------------------------------- Scalar

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ZeroValue("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ZeroValue("division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ZeroValue("inverse of zero");
  return Scalar(mpq_class(1) / v_);
}

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar(1);
  if (is_zero()) {
    if (e < 0) throw ZeroValue("negative power of zero");
    return Scalar(0);
  }
  const bool neg = e < 0;
  const unsigned long k = neg ? -static_cast<unsigned long>(e) : e;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r(num, den);
  if (neg) r = mpq_class(1) / r;
  r.canonicalize();
  return Scalar(std::move(r));
}

Scalar Scalar::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ConfigError("bad rational literal: " + s);
  v.canonicalize();
  return Scalar(std::move(v));
}

// ------------------------------------------------------------ GeneratorId

std::string GeneratorId::name() const {
  switch (kind) {
    case Gen::A: return "a";
    case Gen::B: return "b";
    case Gen::C: return "c";
    case Gen::D: return "d";
    case Gen::Q: return "q";
    case Gen::T: return "t";
    case Gen::U: return "u";
    case Gen::X: return "x" + std::to_string(index);
    case Gen::Y: return "y" + std::to_string(index);
  }
  return "?";
}

// -------------------------------------------------------- QuarterMonomial

QuarterMonomial QuarterMonomial::gen(GeneratorId g, int power) {
  QuarterMonomial m;
  if (power != 0) m.e_[g] = 4 * power;
  return m;
}

QuarterMonomial& QuarterMonomial::operator*=(const QuarterMonomial& o) {
  for (const auto& [g, n] : o.e_) {
    auto it = e_.find(g);
    if (it == e_.end()) {
      e_[g] = n;
    } else if ((it->second += n) == 0) {
      e_.erase(it);
    }
  }
  return *this;
}

QuarterMonomial QuarterMonomial::pow(int k) const {
  QuarterMonomial m;
  if (k == 0) return m;
  for (const auto& [g, n] : e_) m.e_[g] = n * k;
  return m;
}

QuarterMonomial QuarterMonomial::sqrt() const {
  QuarterMonomial m;
  for (const auto& [g, n] : e_) {
    if (n % 2 != 0)
      throw GranularityError("sqrt leaves the quarter lattice at generator " + g.name());
    m.e_[g] = n / 2;
  }
  return m;
}

std::string QuarterMonomial::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, n] : e_) {
    if (!first) os << "*";
    first = false;
    os << g.name();
    if (n != 4) {
      os << "^(" << n << "/4)";
    }
  }
  return os.str();
}

// ------------------------------------------------------------- ParamPoint

void ParamPoint::set_root(GeneratorId g, const Scalar& fourth_root) {
  if (!fourth_root.is_positive())
    throw ConfigError("fourth root of " + g.name() + " must be positive");
  root_[g] = fourth_root;
}

const Scalar& ParamPoint::root(GeneratorId g) const {
  auto it = root_.find(g);
  if (it == root_.end()) throw ConfigError("no value assigned to generator " + g.name());
  return it->second;
}

Scalar ParamPoint::eval(const QuarterMonomial& z) const {
  Scalar r(1);
  for (const auto& [g, n] : z.quarters()) r *= root(g).pow(n);
  return r;
}

ParamPoint ParamPoint::shifted(GeneratorId var, GeneratorId base, int steps) const {
  ParamPoint p(*this);
  p.root_[var] = root(var) * root(base).pow(steps);
  return p;
}

ParamPoint ParamPoint::with_root(GeneratorId g, const Scalar& fourth_root) const {
  ParamPoint p(*this);
  p.set_root(g, fourth_root);
  return p;
}

ParamPoint ParamPoint::swapped(GeneratorId g1, GeneratorId g2) const {
  ParamPoint p(*this);
  p.root_[g1] = root(g2);
  p.root_[g2] = root(g1);
  return p;
}

ParamPoint ParamPoint::inverted(GeneratorId g) const {
  ParamPoint p(*this);
  p.root_[g] = root(g).inv();
  return p;
}

// ------------------------------------------------------------- primitives

Scalar bracket(const QuarterMonomial& z, const ParamPoint& p) {
  const Scalar r = p.eval(z.sqrt());
  return r - r.inv();
}

Scalar bracket_factorial(const QuarterMonomial& z, const QuarterMonomial& base,
                         int l, const ParamPoint& p) {
  if (l < 0) throw ConfigError("bracket_factorial needs l >= 0");
  Scalar r(1);
  QuarterMonomial zi = z;
  for (int i = 0; i < l; ++i) {
    r *= bracket(zi, p);
    zi *= base;
  }
  return r;
}

Scalar pochhammer(const QuarterMonomial& z, const QuarterMonomial& base,
                  int l, const ParamPoint& p) {
  if (l < 0) throw ConfigError("pochhammer needs l >= 0");
  Scalar r(1);
  QuarterMonomial zi = z;
  for (int i = 0; i < l; ++i) {
    r *= Scalar(1) - p.eval(zi);
    zi *= base;
  }
  return r;
}

Scalar e_pair(const QuarterMonomial& z, const QuarterMonomial& w, const ParamPoint& p) {
  const Scalar zv = p.eval(z), wv = p.eval(w);
  return zv + zv.inv() - wv - wv.inv();
}

Scalar e_factorial(const QuarterMonomial& z, const QuarterMonomial& w,
                   const QuarterMonomial& base, int l, const ParamPoint& p) {
  Scalar r(1);
  if (l >= 0) {
    for (int j = 0; j < l; ++j) r *= e_pair(z, w * base.pow(j), p);
    return r;
  }
  for (int j = l; j < 0; ++j) {
    const Scalar f = e_pair(z, w * base.pow(j), p);
    if (f.is_zero())
      throw SingularPoint("vanishing factor in reciprocal e-factorial");
    r *= f;
  }
  return r.inv();
}

Scalar t_binomial(int l, int r, const QuarterMonomial& tbase, const ParamPoint& p) {
  if (r < 0) throw ConfigError("t_binomial needs r >= 0");
  const Scalar den = bracket_factorial(tbase, tbase, r, p);
  if (den.is_zero()) throw SingularPoint("degenerate base in t_binomial");
  const Scalar num = bracket_factorial(tbase.pow(-l), tbase, r, p);
  const Scalar sign = (r % 2 == 0) ? Scalar(1) : Scalar(-1);
  return sign * num / den;
}

// ---------------------------------------------------------------- sampling

std::uint64_t hash64(std::string_view s) {
  // FNV-1a, fixed constants: stable across platforms and runs
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

static std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix64(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t v : parts) h = splitmix64(h ^ splitmix64(v));
  return h;
}

Scalar RootSampler::next_root() {
  for (int guard = 0; guard < 4096; ++guard) {
    const long num = 2 + static_cast<long>(rng_() % 18);  // 2..19
    const long den = 1 + static_cast<long>(rng_() % 7);   // 1..7
    Scalar r(num, den);
    if (r == Scalar(1)) continue;
    bool seen = false;
    for (const Scalar& u : used_)
      if (u == r) { seen = true; break; }
    if (seen) continue;
    used_.push_back(r);
    return r;
  }
  throw ConfigError("root sampler exhausted the candidate pool");
}

ParamPoint RootSampler::sample(const std::vector<GeneratorId>& gens) {
  ParamPoint p;
  for (GeneratorId g : gens) p.set_root(g, next_root());
  return p;
}

}  // namespace qbc

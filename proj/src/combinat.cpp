// Copyright 2026 the qbc authors
// SPDX-License-Identifier: Apache-2.0

#include "combinat.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace qbc {

// ------------------------------------------------------------- partitions

Partition normalize_partition(Partition lam) {
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 0 || (i + 1 < lam.size() && lam[i] < lam[i + 1]))
      throw ConfigError("not weakly decreasing non-negative parts");
  }
  return lam;
}

int part_at(const Partition& lam, int i) {
  return (i >= 1 && i <= static_cast<int>(lam.size())) ? lam[i - 1] : 0;
}

long weight(const Partition& lam) {
  return std::accumulate(lam.begin(), lam.end(), 0L);
}

Partition conjugate(const Partition& lam) {
  Partition c;
  for (int j = 1; j <= part_at(lam, 1); ++j) {
    int h = 0;
    for (int x : lam) h += (x >= j);
    c.push_back(h);
  }
  return c;
}

bool contains(const Partition& lam, const Partition& mu) {
  for (size_t i = 0; i < mu.size(); ++i)
    if (part_at(lam, static_cast<int>(i) + 1) < mu[i]) return false;
  return true;
}

bool dominance_leq(const Partition& mu, const Partition& nu, int m) {
  long smu = 0, snu = 0;
  for (int k = 1; k <= m; ++k) {
    smu += part_at(mu, k);
    snu += part_at(nu, k);
    if (smu > snu) return false;
  }
  return true;
}

std::vector<Partition> partitions_in_box(int m, int maxpart) {
  std::vector<Partition> out = {{}};
  Partition cur;
  // depth-first over weakly decreasing part lists
  auto rec = [&](auto&& self, int pos, int cap) -> void {
    if (pos == m) return;
    for (int v = 1; v <= cap; ++v) {
      cur.push_back(v);
      out.push_back(cur);
      self(self, pos + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, maxpart);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    return a < b;
  });
  return out;
}

std::vector<Partition> dominance_ideal(const Partition& lam, int m) {
  std::vector<Partition> out;
  for (const Partition& mu : partitions_in_box(m, part_at(lam, 1)))
    if (weight(mu) <= weight(lam) && dominance_leq(mu, lam, m)) out.push_back(mu);
  return out;  // already graded-lex from partitions_in_box
}

Partition conjugate_star(const Partition& lam, int m, int n) {
  if (static_cast<int>(lam.size()) > m || part_at(lam, 1) > n)
    throw OutOfBox("partition does not fit the box");
  Partition lc = conjugate(lam);
  Partition star;
  for (int k = n; k >= 1; --k) star.push_back(m - part_at(lc, k));
  return normalize_partition(star);
}

bool pieri_in_neighborhood(const Partition& lam, const Partition& mu) {
  int cols = std::max(part_at(lam, 1), part_at(mu, 1));
  Partition lc = conjugate(lam), mc = conjugate(mu);
  for (int j = 1; j <= cols; ++j)
    if (std::abs(part_at(lc, j) - part_at(mc, j)) > 1) return false;
  return true;
}

std::vector<Partition> pieri_neighborhood(const Partition& mu, int m, int l) {
  std::vector<Partition> out;
  for (const Partition& lam : partitions_in_box(m, part_at(mu, 1) + l)) {
    long step = 0;
    for (int i = 1; i <= m; ++i) step += std::abs(part_at(lam, i) - part_at(mu, i));
    if (step <= l && pieri_in_neighborhood(lam, mu)) out.push_back(lam);
  }
  return out;
}

// ----------------------------------------------------------- multi-indices

bool multi_leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw ConfigError("multi-index length mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

long multi_weight(const MultiIndex& a) {
  return std::accumulate(a.begin(), a.end(), 0L);
}

long multi_abs_weight(const MultiIndex& a) {
  long s = 0;
  for (int v : a) s += std::abs(v);
  return s;
}

std::vector<MultiIndex> compositions_of(int l, int m) {
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == m - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (m == 0) {
    if (l == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, l);
  return out;
}

std::vector<MultiIndex> boxed_compositions(const MultiIndex& lo, const MultiIndex& hi, long l) {
  const int m = static_cast<int>(hi.size());
  std::vector<MultiIndex> out;
  MultiIndex cur(m, 0);
  auto lo_at = [&](int i) { return lo.empty() ? 0 : lo[i]; };
  auto rec = [&](auto&& self, int pos, long rest) -> void {
    if (pos == m) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int v = lo_at(pos); v <= hi[pos] && v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, l);
  return out;
}

long chain_count(const MultiIndex& alpha) {
  long total = 1;
  for (int a : alpha) {
    // C(a+4, 4)
    long c = (a + 1L) * (a + 2L) * (a + 3L) * (a + 4L) / 24L;
    total *= c;
  }
  return total;
}

std::vector<Chain4> chain_enumerate(const MultiIndex& alpha, long budget) {
  if (chain_count(alpha) > budget)
    throw ChainOverflow("chain family exceeds the term budget");
  const int m = static_cast<int>(alpha.size());
  // per-coordinate weakly increasing 4-tuples 0<=w<=x<=y<=z<=alpha_i
  std::vector<std::vector<std::array<int, 4>>> per(m);
  for (int i = 0; i < m; ++i)
    for (int z = 0; z <= alpha[i]; ++z)
      for (int y = 0; y <= z; ++y)
        for (int x = 0; x <= y; ++x)
          for (int w = 0; w <= x; ++w) per[i].push_back({w, x, y, z});

  std::vector<Chain4> out;
  Chain4 cur{MultiIndex(m, 0), MultiIndex(m, 0), MultiIndex(m, 0), MultiIndex(m, 0)};
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      out.push_back(cur);
      return;
    }
    for (const auto& [w, x, y, z] : per[pos]) {
      cur.mu_minus[pos] = w;
      cur.nu_minus[pos] = x;
      cur.nu_plus[pos] = y;
      cur.mu_plus[pos] = z;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Chain4& a, const Chain4& b) {
    if (a.mu_plus != b.mu_plus) return a.mu_plus < b.mu_plus;
    if (a.nu_plus != b.nu_plus) return a.nu_plus < b.nu_plus;
    if (a.nu_minus != b.nu_minus) return a.nu_minus < b.nu_minus;
    return a.mu_minus < b.mu_minus;
  });
  return out;
}

// ---------------------------------------------------------- signed subsets

std::vector<SignedSubset> signed_subsets(const std::vector<int>& pool, int size) {
  std::vector<SignedSubset> out;
  const int n = static_cast<int>(pool.size());
  if (size < 0 || size > n) return out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == size) {
      // all sign patterns over the chosen indices
      for (int mask = 0; mask < (1 << size); ++mask) {
        SignedSubset s;
        s.idx = pick;
        for (int b = 0; b < size; ++b) s.sign.push_back((mask >> b) & 1 ? -1 : 1);
        out.push_back(std::move(s));
      }
      return;
    }
    for (int i = from; i < n; ++i) {
      pick.push_back(pool[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> complement(const std::vector<int>& pool, const std::vector<int>& idx) {
  std::vector<int> out;
  for (int v : pool)
    if (std::find(idx.begin(), idx.end(), v) == idx.end()) out.push_back(v);
  return out;
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly LaurentPoly::monomial(std::vector<int> expo, const Scalar& coeff) {
  LaurentPoly f(static_cast<int>(expo.size()));
  f.add_term(expo, coeff);
  return f;
}

LaurentPoly LaurentPoly::constant(int nvars, const Scalar& coeff) {
  LaurentPoly f(nvars);
  f.add_term(std::vector<int>(nvars, 0), coeff);
  return f;
}

Scalar LaurentPoly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(const std::vector<int>& expo, const Scalar& c) {
  if (static_cast<int>(expo.size()) != nvars_)
    throw ConfigError("exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else if ((it->second += c).is_zero()) {
    terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw ConfigError("arity mismatch in product");
  LaurentPoly f(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      f.add_term(e, ca * cb);
    }
  return f;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly f(nvars_);
  if (c.is_zero()) return f;
  for (const auto& [e, v] : terms_) f.terms_.emplace(e, v * c);
  return f;
}

Scalar LaurentPoly::eval(const std::vector<Scalar>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw ConfigError("evaluation arity mismatch");
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= values[i].pow(e[i]);
    acc += term;
  }
  return acc;
}

LaurentPoly LaurentPoly::swap_vars(int i, int j) const {
  LaurentPoly f(nvars_);
  for (const auto& [e0, c] : terms_) {
    std::vector<int> e = e0;
    std::swap(e[i], e[j]);
    f.add_term(e, c);
  }
  return f;
}

LaurentPoly LaurentPoly::invert_var(int i) const {
  LaurentPoly f(nvars_);
  for (const auto& [e0, c] : terms_) {
    std::vector<int> e = e0;
    e[i] = -e[i];
    f.add_term(e, c);
  }
  return f;
}

LaurentPoly LaurentPoly::embed(int total, int offset) const {
  LaurentPoly f(total);
  for (const auto& [e, c] : terms_) {
    std::vector<int> ee(total, 0);
    for (int i = 0; i < nvars_; ++i) ee[offset + i] = e[i];
    f.add_term(ee, c);
  }
  return f;
}

LaurentPoly orbit_sum(const Partition& mu, int m) {
  if (static_cast<int>(mu.size()) > m)
    throw ConfigError("partition longer than the variable count");
  std::vector<int> base(m, 0);
  for (size_t i = 0; i < mu.size(); ++i) base[i] = mu[i];
  std::sort(base.begin(), base.end());
  std::set<std::vector<int>> orbit;
  // distinct permutations x all sign flips of nonzero entries
  do {
    std::vector<int> nz;
    for (int i = 0; i < m; ++i)
      if (base[i] != 0) nz.push_back(i);
    for (int mask = 0; mask < (1 << nz.size()); ++mask) {
      std::vector<int> e = base;
      for (size_t b = 0; b < nz.size(); ++b)
        if ((mask >> b) & 1) e[nz[b]] = -e[nz[b]];
      orbit.insert(e);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  LaurentPoly f(m);
  for (const auto& e : orbit) f += LaurentPoly::monomial(e, Scalar(1));
  return f;
}

bool w_invariant(const LaurentPoly& f) {
  for (int i = 0; i + 1 < f.nvars(); ++i)
    if (!(f.swap_vars(i, i + 1) == f)) return false;
  for (int i = 0; i < f.nvars(); ++i)
    if (!(f.invert_var(i) == f)) return false;
  return true;
}

// ----------------------------------------------------- interpolation sums

namespace {

// sum over r-subsets i_1<...<i_r of prod_j e(x_{i_j}; tbase^{w(i_j, j)} alpha)
template <typename WeightFn>
Scalar e_col_generic(int r, const std::vector<QuarterMonomial>& xs,
                     const QuarterMonomial& alpha, const QuarterMonomial& tbase,
                     const ParamPoint& p, WeightFn&& wt) {
  const int m = static_cast<int>(xs.size());
  if (r < 0 || r > m) throw ConfigError("column index out of range");
  Scalar total(0);
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from, Scalar acc) -> void {
    if (static_cast<int>(pick.size()) == r) {
      total += acc;
      return;
    }
    for (int i = from; i <= m; ++i) {
      pick.push_back(i);
      const int j = static_cast<int>(pick.size());
      Scalar f = e_pair(xs[i - 1], alpha * tbase.pow(wt(i, j)), p);
      self(self, i + 1, acc * f);
      pick.pop_back();
    }
  };
  rec(rec, 1, Scalar(1));
  return total;
}

}  // namespace

Scalar e_col(int r, const std::vector<QuarterMonomial>& xs,
             const QuarterMonomial& alpha, const QuarterMonomial& tbase,
             const ParamPoint& p) {
  return e_col_generic(r, xs, alpha, tbase, p,
                       [](int i, int j) { return i - j; });
}

Scalar e_col_alt(int r, const std::vector<QuarterMonomial>& xs,
                 const QuarterMonomial& alpha, const QuarterMonomial& tbase,
                 const ParamPoint& p) {
  const int m = static_cast<int>(xs.size());
  return e_col_generic(r, xs, alpha, tbase, p,
                       [m, r](int i, int j) { return m - i - r + j; });
}

std::vector<QuarterMonomial> spectral_point(const Partition& lam, int m,
                                            const QuarterMonomial& alpha,
                                            const QuarterMonomial& qbase,
                                            const QuarterMonomial& tbase) {
  std::vector<QuarterMonomial> xs;
  for (int i = 1; i <= m; ++i)
    xs.push_back(alpha * tbase.pow(m - i) * qbase.pow(part_at(lam, i)));
  return xs;
}

bool e_col_vanishing_check(int r, const Partition& mu, int m,
                           const QuarterMonomial& alpha, const QuarterMonomial& qbase,
                           const QuarterMonomial& tbase, const ParamPoint& p) {
  return e_col(r, spectral_point(mu, m, alpha, qbase, tbase), alpha, tbase, p)
      .is_zero();
}

Scalar h_row(int l, const std::vector<QuarterMonomial>& xs,
             const QuarterMonomial& base_pt, const QuarterMonomial& qbase,
             const QuarterMonomial& tbase, const ParamPoint& p) {
  const int m = static_cast<int>(xs.size());
  if (l < 0) throw ConfigError("row degree must be non-negative");
  Scalar total(0);
  for (const MultiIndex& nu : compositions_of(l, m)) {
    Scalar term(1);
    int shift = 0;  // nu_1 + ... + nu_{k-1}
    for (int k = 1; k <= m; ++k) {
      const Scalar den = bracket_factorial(qbase, qbase, nu[k - 1], p);
      if (den.is_zero()) throw SingularPoint("degenerate base in row sum");
      term *= bracket_factorial(tbase, qbase, nu[k - 1], p) / den;
      term *= e_factorial(xs[k - 1],
                          base_pt * tbase.pow(k - 1) * qbase.pow(shift), qbase,
                          nu[k - 1], p);
      shift += nu[k - 1];
    }
    total += term;
  }
  return total;
}

}  // namespace qbc

#pragma once

// Yang-Baxter solutions S^{s,t}(z) on F^{(x)n} (x) F^{(x)n} obtained by
// contracting n copies of the 3d R with the boundary vectors.

#include "tetra/fock.hpp"
#include "tetra/parallel.hpp"
#include "tetra/report.hpp"
#include "tetra/threedr.hpp"
#include "tetra/ybe.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace tetra {

inline void check_st(int s, int t) {
  if ((s != 1 && s != 2) || (t != 1 && t != 2)) throw std::invalid_argument("(s,t) must be drawn from {1,2}");
}

inline bool conserves(const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j) {
  return a.size() == i.size() && b.size() == j.size() && a.size() == b.size() && a + b == i + j;
}

/// Normalisation selector for S^{s,t}; for (2,2) it depends on the sector
/// (eps1, eps2) = ((-1)^{|a|}, (-1)^{|b|}). (2,1) has none.
inline Normalization s_normalization(int s, int t, const FockIndex& a, const FockIndex& b) {
  if (s == 1 && t == 1) return Normalization::S11;
  if (s == 1 && t == 2) return Normalization::S12;
  if (s == 2 && t == 2) return sector_normalization(a.parity(), b.parity());
  throw std::invalid_argument("no normalisation factor is defined for (s,t) = (2,1)");
}

namespace detail {

// Coefficient of z^{c0} in the contraction, before normalisation.
inline RatQ s_raw_coefficient(int s, int t, const FockIndex& a, const FockIndex& b, const FockIndex& i,
                              const FockIndex& j, int c0) {
  const int n = a.size();
  HalfLaurent prod(1);
  int prev = s * c0;  // third upper index of the current factor
  for (int r = 0; r < n; ++r) {
    int lower = b[r] + prev - j[r];  // b_r + c_{r-1} = j_r + c_r
    if (lower < 0) return RatQ();
    if (r == n - 1) {
      if (lower % t) return RatQ();
    }
    prod *= r_element(a[r], b[r], prev, i[r], j[r], lower);
    if (prod.is_zero()) return RatQ();
    prev = lower;
  }
  int cn = prev / t;
  RatQ factor = q_pochhammer(QPower::q(2), s * c0) /
                (q_pochhammer(QPower::q(s * s), c0) * q_pochhammer(QPower::q(t * t), cn));
  return factor * RatQ(prod);
}

class SRawCache {
 public:
  using Key = std::tuple<int, int, FockIndex, FockIndex, FockIndex, FockIndex>;

  static SRawCache& shared() {
    static SRawCache c;
    return c;
  }

  // Coefficients 0..order of the unnormalised series, extending the cached
  // prefix on demand.
  ZSeries get(int s, int t, const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j,
              int order) {
    Key key{s, t, a, b, i, j};
    std::vector<RatQ> known;
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) known = it->second;
    }
    if (static_cast<int>(known.size()) <= order) {
      for (int c0 = static_cast<int>(known.size()); c0 <= order; ++c0)
        known.push_back(s_raw_coefficient(s, t, a, b, i, j, c0));
      std::unique_lock lock(mu_);
      auto& slot = memo_[key];
      if (slot.size() < known.size()) slot = known;
    }
    known.resize(static_cast<std::size_t>(order) + 1);
    return ZSeries(order, std::move(known));
  }

  void clear() {
    std::unique_lock lock(mu_);
    memo_.clear();
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, std::vector<RatQ>> memo_;
};

}  // namespace detail

/// The contraction without the normalisation factor, to order zmax in z.
/// Valid for every (s,t) including (2,1).
inline ZSeries s_element_raw(int s, int t, const FockIndex& a, const FockIndex& b, const FockIndex& i,
                             const FockIndex& j, int zmax) {
  check_st(s, t);
  if (!conserves(a, b, i, j)) return ZSeries(zmax);
  return detail::SRawCache::shared().get(s, t, a, b, i, j, zmax);
}

/// S^{s,t}(z)^{a,b}_{i,j} to order zmax.
inline ZSeries s_element(int s, int t, const FockIndex& a, const FockIndex& b, const FockIndex& i,
                         const FockIndex& j, int zmax) {
  check_st(s, t);
  if (s == 2 && t == 1) throw std::invalid_argument("S^{2,1} is only used unnormalised");
  if (!conserves(a, b, i, j)) return ZSeries(zmax);
  ZSeries raw = s_element_raw(s, t, a, b, i, j, zmax);
  if (raw.is_zero()) return raw;
  return infinite_pochhammer_ratio_series(s_normalization(s, t, a, b), zmax) * raw;
}

/// n = 1, s = t = 1 element in closed form as a rational function of z.
inline RatQZ s_closed_n1(int a, int b, int i, int j) {
  if (std::min({a, b, i, j}) < 0 || a + b != i + j) return RatQZ();
  if (a > i) {
    RatQ ratio = RatQ(pochhammer_q2(i) * pochhammer_q2(j)) / RatQ(pochhammer_q2(a) * pochhammer_q2(b));
    return RatQZ::z_power(a - i) * RatQZ(ratio) * s_closed_n1(i, j, a, b);
  }
  // (w; q)_m with w = c z.
  auto z_pochhammer = [](const RatQ& c, int m) {
    ZPoly p(RatQ(1));
    for (int k = 0; k < m; ++k) p = p * ZPoly::from_coeffs({RatQ(1), -(c * RatQ::q_power(k))});
    return p;
  };
  RatQZ sum;
  for (int lambda = std::max(0, b - i); lambda <= j; ++lambda) {
    int mu = j - lambda;
    RatQ c = RatQ(gaussian_binomial_poly(j, lambda, QPower::q(2)) * gaussian_binomial_poly(lambda + i, b, QPower::q(2))) *
             RatQ::q_power(j * (1 - a) + mu * (mu - 1));
    // (-q; q)_{i-a}
    HalfLaurent minus_q(1);
    for (int k = 0; k < i - a; ++k) minus_q *= HalfLaurent(1) + HalfLaurent::q_power(k + 1);
    c *= RatQ(minus_q);
    if (lambda % 2) c = -c;
    RatQZ term(ZPoly(c) * z_pochhammer(RatQ(1), a + lambda - mu), z_pochhammer(-RatQ::q_power(1), i + lambda - mu));
    sum += term;
  }
  return sum;
}

/// Sparse S^{s,t} for one n and a degree window, with normalisation applied.
struct SMatrix {
  using Key = std::tuple<FockIndex, FockIndex, FockIndex, FockIndex>;  // (a, b, i, j)

  int s = 1, t = 1, n = 1, zmax = 8;
  std::map<Key, ZSeries> entries;

  void insert(const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j, ZSeries v) {
    if (!conserves(a, b, i, j)) throw std::logic_error("SMatrix: entry violates conservation");
    if (s == 2 && t == 2 && (a.parity() != i.parity() || b.parity() != j.parity()))
      throw std::logic_error("SMatrix: entry violates the parity constraint");
    entries.emplace(Key{a, b, i, j}, std::move(v));
  }
};

/// All nonzero S^{s,t} entries with |i| + |j| <= max_degree.
inline SMatrix build_s_matrix(int s, int t, int n, int max_degree, int zmax, int jobs = 1) {
  SMatrix m;
  m.s = s;
  m.t = t;
  m.n = n;
  m.zmax = zmax;
  std::vector<SMatrix::Key> keys;
  for (const auto& ij : enumerate_window(2 * n, max_degree)) {
    FockIndex i = ij.slice(0, n), j = ij.slice(n, n);
    for (const auto& [a, b] : split_pairs(i + j)) keys.emplace_back(a, b, i, j);
  }
  std::vector<ZSeries> values(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t k) {
    const auto& [a, b, i, j] = keys[k];
    values[k] = s_element(s, t, a, b, i, j, zmax);
  });
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (values[k].is_zero()) continue;
    const auto& [a, b, i, j] = keys[k];
    m.insert(a, b, i, j, std::move(values[k]));
  }
  return m;
}

/// Routes a (2,2) matrix into its four sectors keyed by ((-1)^{|a|}, (-1)^{|b|}).
inline std::map<std::pair<int, int>, SMatrix> decompose_parity(const SMatrix& m) {
  if (m.s != 2 || m.t != 2) throw std::invalid_argument("decompose_parity needs (s,t) = (2,2)");
  std::map<std::pair<int, int>, SMatrix> out;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      SMatrix& sub = out[{e1, e2}];
      sub.s = 2;
      sub.t = 2;
      sub.n = m.n;
      sub.zmax = m.zmax;
    }
  for (const auto& [key, v] : m.entries) {
    const auto& [a, b, i, j] = key;
    out[{a.parity(), b.parity()}].insert(a, b, i, j, v);
  }
  return out;
}

/// Transposition relation between S^{2,1} and S^{1,2}, unnormalised, with
/// z = w^2: for all conserving tuples with |i| + |j| <= max_degree,
///   w^{|b|} prod (q^2)_a (q^2)_b S^{2,1}(w^2)^{a,b}_{i,j}
///     = w^{|j|} prod (q^2)_i (q^2)_j S^{1,2}(w)^{rev i, rev j}_{rev a, rev b}
/// coefficientwise up to w^zmax.
/// {s, t, n, zmax, entries: [{a, b, i, j, series: [c_0, c_1, ...]}]}, in
/// lexicographic order of (a, b, i, j).
inline nlohmann::json to_json(const SMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : m.entries) {
    const auto& [a, b, i, j] = key;
    entries.push_back({{"a", a.m}, {"b", b.m}, {"i", i.m}, {"j", j.m}, {"series", to_strings(v)}});
  }
  return {{"s", m.s}, {"t", m.t}, {"n", m.n}, {"zmax", m.zmax}, {"entries", std::move(entries)}};
}

inline Report verify_s21(int n, int max_degree, int zmax) {
  Report rep;
  rep.target = "s21";
  auto weight = [](const FockIndex& x, const FockIndex& y) {
    HalfLaurent w(1);
    for (int r = 0; r < x.size(); ++r) w *= pochhammer_q2(x[r]) * pochhammer_q2(y[r]);
    return RatQ(w);
  };
  for (const auto& ij : enumerate_window(2 * n, max_degree)) {
    FockIndex i = ij.slice(0, n), j = ij.slice(n, n);
    for (const auto& [a, b] : split_pairs(i + j)) {
      ZSeries lhs = s_element_raw(2, 1, a, b, i, j, zmax).substitute_power(2).scaled(weight(a, b)).shifted(b.degree());
      ZSeries rhs = s_element_raw(1, 2, i.reversed(), j.reversed(), a.reversed(), b.reversed(), zmax)
                        .scaled(weight(i, j))
                        .shifted(j.degree());
      ++rep.checked;
      if (!(lhs == rhs))
        rep.failures.push_back({join_tuple({&a.m, &b.m, &i.m, &j.m}), join_strings(to_strings(lhs)),
                                join_strings(to_strings(rhs))});
    }
  }
  return rep;
}

/// S_12(x) S_13(xy) S_23(y) = S_23(y) S_13(xy) S_12(x) on inputs of total
/// degree <= max_degree, coefficients up to x^zmax y^zmax.
inline Report verify_sybe(int s, int t, int n, int max_degree, int zmax, int jobs = 1) {
  SeriesEntry entry = [s, t, zmax](const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j) {
    return s_element(s, t, a, b, i, j, zmax);
  };
  return verify_ybe("sybe", n, max_degree, zmax, entry, nullptr, jobs);
}

}  // namespace tetra

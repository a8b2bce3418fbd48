#pragma once

// q-combinatorics: Pochhammer symbols, Gaussian binomials, q-integers and
// the infinite-product normalisation series.

#include "tetra/ring/zseries.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tetra {

/// A power of q written in half-steps: QPower{h} is q^{h/2} = u^h.
struct QPower {
  int half = 2;
  static constexpr QPower q(int e) { return QPower{2 * e}; }
  static constexpr QPower sqrt_q() { return QPower{1}; }
  friend constexpr bool operator==(QPower, QPower) = default;
};

/// (base; step)_m = prod_{k=1}^{m} (1 - base * step^{k-1}).
inline HalfLaurent q_pochhammer_poly(QPower base, QPower step, int m) {
  if (m < 0) throw std::invalid_argument("q_pochhammer: negative length");
  HalfLaurent r(1);
  for (int k = 0; k < m; ++k) r *= HalfLaurent(1) - HalfLaurent::u_power(base.half + k * step.half);
  return r;
}

inline RatQ q_pochhammer(QPower base, QPower step, int m) { return RatQ(q_pochhammer_poly(base, step, m)); }

/// (p; p)_m, the common special case.
inline RatQ q_pochhammer(QPower p, int m) { return q_pochhammer(p, p, m); }

/// Gaussian binomial in base p, as a polynomial. Zero unless 0 <= k <= m.
inline HalfLaurent gaussian_binomial_poly(int m, int k, QPower p) {
  if (k < 0 || m < 0 || k > m) return {};
  if (k == 0 || k == m) return HalfLaurent(1);
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, HalfLaurent> cache;
  auto key = std::make_tuple(m, k, p.half);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // [m, k] = [m-1, k-1] + p^k [m-1, k]
  HalfLaurent r = gaussian_binomial_poly(m - 1, k - 1, p) +
                  gaussian_binomial_poly(m - 1, k, p).times_u_power(k * p.half);
  std::lock_guard lock(mu);
  cache.emplace(key, r);
  return r;
}

/// Gaussian binomial (p)_m / ((p)_k (p)_{m-k}) via Pochhammer ratios.
inline RatQ q_binomial(int m, int k, QPower p) {
  if (k < 0 || m < 0 || k > m) return RatQ();
  return q_pochhammer(p, m) / (q_pochhammer(p, k) * q_pochhammer(p, m - k));
}

/// Symmetric q-integer [m]_{b} = (b^m - b^{-m}) / (b - b^{-1}).
inline RatQ q_number(int m, QPower base = QPower::q(1)) {
  if (m == 0) return RatQ();
  HalfLaurent num = HalfLaurent::u_power(m * base.half) - HalfLaurent::u_power(-m * base.half);
  HalfLaurent den = HalfLaurent::u_power(base.half) - HalfLaurent::u_power(-base.half);
  return RatQ(num, den);
}

/// [m]_b! = [m]_b [m-1]_b ... [1]_b.
inline RatQ q_factorial(int m, QPower base = QPower::q(1)) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
  RatQ r(1);
  for (int k = 2; k <= m; ++k) r *= q_number(k, base);
  return r;
}

/// Series of (c z^d; step)_inf, or of its reciprocal when `reciprocal` is set.
inline ZSeries infinite_product_series(const RatQ& c, int z_power, QPower step, int order, bool reciprocal) {
  if (z_power < 1) throw std::invalid_argument("infinite_product_series: z power must be positive");
  ZSeries s(order);
  RatQ c_pow(1);
  for (int n = 0; n * z_power <= order; ++n) {
    RatQ term = c_pow / q_pochhammer(step, n);
    if (!reciprocal) {
      if (n % 2 == 1) term = -term;
      term *= RatQ::u_power(step.half * n * (n - 1) / 2);
    }
    s[n * z_power] = term;
    c_pow *= c;
  }
  return s;
}

/// Normalisation factors of the reduced Yang-Baxter solutions.
enum class Normalization {
  S11,          // (z; q)_inf / (-zq; q)_inf
  S12,          // (z^2; q^2)_inf / (-z^2 q; q^2)_inf
  SectorEqual,  // (z; q^4)_inf / (z q^2; q^4)_inf        (eps1 eps2 = +1)
  SectorMixed,  // (z q^2; q^4)_inf / (z; q^4)_inf        (eps1 eps2 = -1)
};

inline Normalization parse_normalization(const std::string& s) {
  if (s == "11") return Normalization::S11;
  if (s == "12") return Normalization::S12;
  if (s == "++" || s == "--" || s == "+1") return Normalization::SectorEqual;
  if (s == "+-" || s == "-+" || s == "-1") return Normalization::SectorMixed;
  throw std::invalid_argument("unknown normalization selector: " + s);
}

inline Normalization sector_normalization(int eps1, int eps2) {
  return eps1 * eps2 > 0 ? Normalization::SectorEqual : Normalization::SectorMixed;
}

inline ZSeries infinite_pochhammer_ratio_series(Normalization which, int order) {
  switch (which) {
    case Normalization::S11:
      return infinite_product_series(RatQ(1), 1, QPower::q(1), order, false) *
             infinite_product_series(-RatQ::q_power(1), 1, QPower::q(1), order, true);
    case Normalization::S12:
      return infinite_product_series(RatQ(1), 2, QPower::q(2), order, false) *
             infinite_product_series(-RatQ::q_power(1), 2, QPower::q(2), order, true);
    case Normalization::SectorEqual:
      return infinite_product_series(RatQ(1), 1, QPower::q(4), order, false) *
             infinite_product_series(RatQ::q_power(2), 1, QPower::q(4), order, true);
    case Normalization::SectorMixed:
      return infinite_product_series(RatQ::q_power(2), 1, QPower::q(4), order, false) *
             infinite_product_series(RatQ(1), 1, QPower::q(4), order, true);
  }
  throw std::invalid_argument("unknown normalization selector");
}

/// kappa = (q + 1) / (q - 1).
inline RatQ kappa() { return RatQ(HalfLaurent::q_power(1) + HalfLaurent(1), HalfLaurent::q_power(1) - HalfLaurent(1)); }

}  // namespace tetra

#pragma once

// Images of Q(i)-polynomials in F_p[x] for a fixed prime p = 1 mod 4, used
// only as a one-sided coprimality test: a constant gcd mod p (with leading
// coefficients surviving the reduction) proves a constant gcd over Q(i).

#include "tetra/ring/gaussian_rational.hpp"
#include "tetra/ring/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tetra::modp {

inline constexpr std::uint64_t P = 4611686018427387817ull;
inline constexpr std::uint64_t I = 120863620846201794ull;  // I^2 = -1 mod P

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a + b >= P ? a + b - P : a + b; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % P);
}
inline std::uint64_t power(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return power(a, P - 2); }

inline std::optional<std::uint64_t> reduce(const mpq_class& q) {
  std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), P);
  if (d == 0) return std::nullopt;
  std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), P);
  return mul(n, inv(d));
}

inline std::optional<std::uint64_t> reduce(const GaussianRational& c) {
  auto re = reduce(c.re());
  if (!re) return std::nullopt;
  if (c.is_real()) return re;
  auto im = reduce(c.im());
  if (!im) return std::nullopt;
  return add(*re, mul(*im, I));
}

using Vec = std::vector<std::uint64_t>;

inline void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Degree of gcd(a, b) in F_p[x]; -1 if both are zero.
inline int gcd_degree(Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t li = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mul(a.back(), li);
      std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = sub(a[k + shift], mul(f, b[k]));
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

inline std::optional<Vec> reduce(const Poly<GaussianRational>& p) {
  Vec v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    auto r = reduce(c);
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  if (!v.empty() && v.back() == 0) return std::nullopt;  // leading coefficient lost
  return v;
}

}  // namespace tetra::modp

namespace tetra {

/// True only if gcd(a, b) is certainly constant.
inline bool surely_coprime(const Poly<GaussianRational>& a, const Poly<GaussianRational>& b) {
  auto ra = modp::reduce(a), rb = modp::reduce(b);
  if (!ra || !rb) return false;
  return modp::gcd_degree(std::move(*ra), std::move(*rb)) == 0;
}

}  // namespace tetra

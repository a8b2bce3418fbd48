#pragma once

// Polynomials in (u, z) over Q(i), stored as polynomials in z whose
// coefficients are polynomials in u, with the gcd machinery that keeps
// rational functions of z reduced.

#include "tetra/ring/half_laurent.hpp"
#include "tetra/ring/modp.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <utility>
#include <vector>

namespace tetra {

using BPoly = Poly<GPoly>;

namespace bipoly {

// Smallest u-exponent present; INT_MAX for zero.
inline int u_valuation(const BPoly& p) {
  int v = INT_MAX;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) v = std::min(v, c.valuation());
  return v;
}

inline BPoly u_unshift(const BPoly& p, int k) {
  if (k == 0) return p;
  std::vector<GPoly> c;
  for (const auto& x : p.coeffs()) c.push_back(x.is_zero() ? x : x.unshifted(k));
  return BPoly::from_coeffs(std::move(c));
}

inline BPoly scale(const BPoly& p, const GPoly& s) {
  std::vector<GPoly> c;
  for (const auto& x : p.coeffs()) c.push_back(x * s);
  return BPoly::from_coeffs(std::move(c));
}

inline BPoly scale(const BPoly& p, const GaussianRational& s) {
  std::vector<GPoly> c;
  for (const auto& x : p.coeffs()) c.push_back(x.scaled(s));
  return BPoly::from_coeffs(std::move(c));
}

// gcd of the u-polynomial coefficients, monic.
inline GPoly content(const BPoly& p) {
  GPoly g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline BPoly divide_content(const BPoly& p, const GPoly& c) {
  if (c.is_one()) return p;
  std::vector<GPoly> out;
  for (const auto& x : p.coeffs()) out.push_back(x.is_zero() ? x : x.exact_div(c));
  return BPoly::from_coeffs(std::move(out));
}

inline BPoly primitive_part(const BPoly& p) { return p.is_zero() ? p : divide_content(p, content(p)); }

// a / b when b divides a in Q(i)[u, z].
inline std::optional<BPoly> try_divide(BPoly a, const BPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return BPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<GPoly> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    auto [f, r] = GPoly::divmod(a.lead(), b.lead());
    if (!r.is_zero()) return std::nullopt;
    int shift = a.degree() - db;
    a -= scale(b, f).shifted(shift);
    q[static_cast<std::size_t>(shift)] = std::move(f);
  }
  if (!a.is_zero()) return std::nullopt;
  return BPoly::from_coeffs(std::move(q));
}

inline BPoly exact_divide(const BPoly& a, const BPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw std::logic_error("BPoly: inexact division");
  return *q;
}

// lc(b)^(deg a - deg b + 1) a mod b.
inline BPoly pseudo_remainder(BPoly a, const BPoly& b) {
  const int db = b.degree();
  const GPoly& lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    GPoly la = a.lead();
    a = scale(a, lb) - scale(b, la).shifted(shift);
  }
  return a;
}

// Coprimality certificate through u -> u0 mod p for primitive a, b.
inline bool surely_coprime(const BPoly& a, const BPoly& b) {
  static const std::uint64_t points[] = {1234567891ull, 987654321987ull, 31415926535ull};
  for (std::uint64_t u0 : points) {
    auto image = [&](const BPoly& p) -> std::optional<modp::Vec> {
      modp::Vec v;
      for (const auto& c : p.coeffs()) {
        std::uint64_t acc = 0;
        for (std::size_t k = c.coeffs().size(); k-- > 0;) {
          auto r = modp::reduce(c.coeffs()[k]);
          if (!r) return std::nullopt;
          acc = modp::add(modp::mul(acc, u0), *r);
        }
        v.push_back(acc);
      }
      if (v.empty() || v.back() == 0) return std::nullopt;
      return v;
    };
    auto ia = image(a), ib = image(b);
    if (!ia || !ib) continue;
    return modp::gcd_degree(std::move(*ia), std::move(*ib)) == 0;
  }
  return false;
}

/// gcd in Q(i)[u, z], up to a unit.
inline BPoly gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  GPoly ca = content(a), cb = content(b);
  BPoly c(gcd(ca, cb));
  BPoly pa = divide_content(a, ca), pb = divide_content(b, cb);
  if (pa.is_constant() || pb.is_constant()) return c;
  if (surely_coprime(pa, pb)) return c;
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  if (try_divide(pa, pb)) return c * pb;
  while (!pb.is_zero()) {
    BPoly r = primitive_part(pseudo_remainder(pa, pb));
    pa = std::move(pb);
    pb = std::move(r);
    if (!pb.is_zero() && pb.is_constant()) return c;
  }
  return c * pa;
}

}  // namespace bipoly
}  // namespace tetra

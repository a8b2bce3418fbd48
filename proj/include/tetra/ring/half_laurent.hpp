#pragma once

// Laurent polynomials in u = q^{1/2} with Gaussian-rational coefficients.

#include "tetra/ring/gaussian_rational.hpp"
#include "tetra/ring/modp.hpp"
#include "tetra/ring/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace tetra {

using GPoly = Poly<GaussianRational>;

/// Laurent polynomial sum_e c_e u^e with u^2 = q.
///
/// Stored as u^low * body where body(0) != 0, so equal values have equal
/// representations and no zero coefficient is ever stored at either end.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(long c) : HalfLaurent(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  HalfLaurent(GaussianRational c) : body_(std::move(c)) {}   // NOLINT(google-explicit-constructor)
  HalfLaurent(int low, GPoly body) : low_(low), body_(std::move(body)) { normalize(); }

  static HalfLaurent monomial(GaussianRational c, int u_exp) {
    HalfLaurent r(std::move(c));
    if (!r.is_zero()) r.low_ = u_exp;
    return r;
  }
  static HalfLaurent u_power(int e) { return monomial(GaussianRational(1), e); }
  static HalfLaurent q_power(int e) { return u_power(2 * e); }

  bool is_zero() const { return body_.is_zero(); }
  bool is_one() const { return low_ == 0 && body_.is_one(); }
  int low() const { return low_; }
  int high() const { return low_ + body_.degree(); }
  const GPoly& body() const { return body_; }

  GaussianRational coeff(int u_exp) const { return body_.coeff(u_exp - low_); }

  template <class Fn>
  void for_each_term(Fn&& fn) const {
    const auto& c = body_.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) fn(low_ + static_cast<int>(k), c[k]);
  }

  bool is_monomial() const {
    std::size_t count = 0;
    for (const auto& c : body_.coeffs())
      if (!c.is_zero()) ++count;
    return count == 1;
  }

  HalfLaurent operator-() const { return {low_, -body_}; }

  HalfLaurent& operator+=(const HalfLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int m = std::min(low_, o.low_);
    GPoly sum = body_.shifted(low_ - m) + o.body_.shifted(o.low_ - m);
    low_ = m;
    body_ = std::move(sum);
    normalize();
    return *this;
  }
  HalfLaurent& operator-=(const HalfLaurent& o) { return *this += -o; }
  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    HalfLaurent r;
    r.low_ = a.low_ + b.low_;
    r.body_ = a.body_ * b.body_;
    return r;
  }

  HalfLaurent scaled(const GaussianRational& c) const { return {low_, body_.scaled(c)}; }
  HalfLaurent times_u_power(int e) const {
    HalfLaurent r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
  }

  GaussianRational eval(const GaussianRational& u) const {
    return body_.eval(u) * pow(u, low_);
  }

  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }

 private:
  void normalize() {
    if (body_.is_zero()) {
      low_ = 0;
      return;
    }
    int v = body_.valuation();
    if (v > 0) {
      body_ = body_.unshifted(v);
      low_ += v;
    }
  }

  int low_ = 0;
  GPoly body_;
};

inline HalfLaurent pow(const HalfLaurent& base, int e) {
  HalfLaurent r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace tetra

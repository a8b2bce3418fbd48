#pragma once

// The field Q(i)(q^{1/2}) of rational functions in u = q^{1/2}.

#include "tetra/ring/half_laurent.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace tetra {

/// Canonical form: u^k * N(u) / D(u) with N(0) != 0, D(0) != 0,
/// gcd(N, D) = 1 and D monic. The u^k factor lives in the numerator
/// HalfLaurent, so equality is structural.
class RatQ {
 public:
  RatQ() = default;
  RatQ(long c) : num_(c), den_(GaussianRational(1)) {}                      // NOLINT
  RatQ(GaussianRational c) : num_(std::move(c)), den_(GaussianRational(1)) {}  // NOLINT
  RatQ(HalfLaurent num) : num_(std::move(num)), den_(GaussianRational(1)) {}  // NOLINT
  RatQ(const HalfLaurent& num, const HalfLaurent& den) {
    if (den.is_zero()) throw std::domain_error("RatQ: zero denominator");
    assign(num.low() - den.low(), num.body(), den.body());
  }

  static RatQ u_power(int e) { return RatQ(HalfLaurent::u_power(e)); }
  static RatQ q_power(int e) { return u_power(2 * e); }
  static RatQ i() { return RatQ(GaussianRational::i()); }

  const HalfLaurent& num() const { return num_; }
  const GPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  HalfLaurent den_laurent() const { return HalfLaurent(0, den_); }

  RatQ operator-() const {
    RatQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  RatQ inverse() const {
    if (is_zero()) throw std::domain_error("RatQ: division by zero");
    RatQ r;
    r.assign(-num_.low(), den_, num_.body());
    return r;
  }

  RatQ& operator+=(const RatQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      HalfLaurent n = num_ + o.num_;
      if (den_.is_one() || n.is_zero()) {
        num_ = std::move(n);
        if (num_.is_zero()) den_ = GPoly(GaussianRational(1));
        return *this;
      }
      assign(n.low(), n.body(), den_);
      return *this;
    }
    GPoly g = gcd(den_, o.den_);
    GPoly d1 = den_.exact_div(g);
    GPoly d2 = o.den_.exact_div(g);
    HalfLaurent n = num_ * HalfLaurent(0, d2) + o.num_ * HalfLaurent(0, d1);
    if (n.is_zero()) return *this = RatQ();
    GPoly c = gcd(n.body(), g);
    int low = n.low();
    GPoly nb = n.body();
    if (!c.is_one()) {
      nb = nb.exact_div(c);
      g = g.exact_div(c);
    }
    num_ = HalfLaurent(low, std::move(nb));
    den_ = g * d1 * d2;
    return *this;
  }
  RatQ& operator-=(const RatQ& o) { return *this += -o; }

  RatQ& operator*=(const RatQ& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatQ();
    if (den_.is_one() && o.den_.is_one()) {
      num_ = num_ * o.num_;
      return *this;
    }
    GPoly n1 = num_.body(), n2 = o.num_.body();
    GPoly d1 = den_, d2 = o.den_;
    if (!d2.is_one()) {
      GPoly g = gcd(n1, d2);
      if (!g.is_one()) {
        n1 = n1.exact_div(g);
        d2 = d2.exact_div(g);
      }
    }
    if (!d1.is_one()) {
      GPoly g = gcd(n2, d1);
      if (!g.is_one()) {
        n2 = n2.exact_div(g);
        d1 = d1.exact_div(g);
      }
    }
    num_ = HalfLaurent(num_.low() + o.num_.low(), n1 * n2);
    den_ = d1 * d2;
    return *this;
  }
  RatQ& operator/=(const RatQ& o) { return *this *= o.inverse(); }

  friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
  friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
  friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
  friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }

  friend bool operator==(const RatQ& a, const RatQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  GaussianRational eval(const GaussianRational& u) const {
    GaussianRational d = den_.eval(u);
    if (d.is_zero()) throw std::domain_error("RatQ: evaluation at a pole");
    return num_.eval(u) / d;
  }

  std::size_t size_hint() const {
    std::size_t s = 0;
    for (const auto& c : num_.body().coeffs()) s += c.size_hint();
    for (const auto& c : den_.coeffs()) s += c.size_hint();
    return s;
  }

 private:
  // Sets *this to u^low * n / d for polynomials n, d with d != 0.
  void assign(int low, GPoly n, GPoly d) {
    if (n.is_zero()) {
      num_ = HalfLaurent();
      den_ = GPoly(GaussianRational(1));
      return;
    }
    int vn = n.valuation(), vd = d.valuation();
    if (vn > 0) n = n.unshifted(vn);
    if (vd > 0) d = d.unshifted(vd);
    low += vn - vd;
    if (!d.is_constant()) {
      GPoly g = gcd(n, d);
      if (!g.is_one()) {
        n = n.exact_div(g);
        d = d.exact_div(g);
      }
    }
    if (!(d.lead() == GaussianRational(1))) {
      GaussianRational inv = d.lead().inverse();
      n = n.scaled(inv);
      d = d.monic();
    }
    num_ = HalfLaurent(low, std::move(n));
    den_ = std::move(d);
  }

  HalfLaurent num_;
  GPoly den_{GaussianRational(1)};
};

inline RatQ pow(const RatQ& base, int e) {
  if (e < 0) return pow(base.inverse(), -e);
  RatQ r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace tetra

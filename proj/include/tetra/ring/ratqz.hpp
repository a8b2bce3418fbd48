#pragma once

// Rational functions in the spectral variable z over RatQ.

#include "tetra/ring/bipoly.hpp"
#include "tetra/ring/ratq.hpp"

#include <climits>
#include <cstdlib>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace tetra {

using ZPoly = Poly<RatQ>;

/// u^shift * N(u, z) / D(u, z) with N, D in Q(i)[u, z] coprime, neither
/// divisible by u, and the lowest term of D (least z-power, then least
/// u-power) having coefficient 1. Equal values have equal representations.
class RatQZ {
 public:
  RatQZ() = default;
  RatQZ(long c) : RatQZ(RatQ(c)) {}                          // NOLINT(google-explicit-constructor)
  RatQZ(GaussianRational c) : RatQZ(RatQ(std::move(c))) {}   // NOLINT(google-explicit-constructor)
  RatQZ(const RatQ& c) {                                     // NOLINT(google-explicit-constructor)
    if (c.is_zero()) return;
    assign_canonical(c.num().low(), BPoly(c.num().body()), BPoly(c.den()));
    normalize_unit();
  }
  explicit RatQZ(const ZPoly& num) : RatQZ(num, ZPoly(RatQ(1))) {}
  RatQZ(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) throw std::domain_error("RatQZ: zero denominator");
    // Clear the u-denominators of all coefficients.
    GPoly l(GaussianRational(1));
    int low = INT_MAX;
    for (const auto* p : {&num, &den})
      for (const auto& c : p->coeffs())
        if (!c.is_zero()) {
          if (!c.den().is_one()) l = l * c.den().exact_div(gcd(l, c.den()));
          low = std::min(low, c.num().low());
        }
    auto convert = [&](const ZPoly& p) {
      std::vector<GPoly> out;
      for (const auto& c : p.coeffs()) {
        if (c.is_zero()) out.emplace_back();
        else out.push_back(c.num().body().shifted(c.num().low() - low) * l.exact_div(c.den()));
      }
      return BPoly::from_coeffs(std::move(out));
    };
    assign(0, convert(num), convert(den));
  }

  static RatQZ z() { return z_power(1); }
  static RatQZ z_power(int k) {
    RatQZ r;
    BPoly m = BPoly::monomial(GPoly(GaussianRational(1)), std::abs(k));
    if (k >= 0) r.n_ = m;
    else {
      r.n_ = BPoly(GPoly(GaussianRational(1)));
      r.d_ = m;
    }
    return r;
  }

  /// Canonical data: value = u^u_shift() * num_poly() / den_poly().
  int u_shift() const { return shift_; }
  const BPoly& num_poly() const { return n_; }
  const BPoly& den_poly() const { return d_; }

  /// A numerator/denominator pair over RatQ (not normalised in z).
  ZPoly num() const { return to_zpoly(n_, shift_); }
  ZPoly den() const { return to_zpoly(d_, 0); }

  bool is_zero() const { return n_.is_zero(); }
  bool is_polynomial() const { return d_.is_constant(); }
  bool is_constant() const { return d_.is_constant() && n_.is_constant(); }
  RatQ constant() const {
    if (n_.is_zero()) return RatQ();
    return RatQ(HalfLaurent(shift_, n_.coeff(0)), HalfLaurent(0, d_.coeff(0)));
  }

  RatQZ operator-() const {
    RatQZ r = *this;
    r.n_ = -r.n_;
    return r;
  }

  RatQZ inverse() const {
    if (is_zero()) throw std::domain_error("RatQZ: division by zero");
    RatQZ r;
    r.shift_ = -shift_;
    r.n_ = d_;
    r.d_ = n_;
    r.normalize_unit();
    return r;
  }

  RatQZ& operator+=(const RatQZ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    // Align the u-shifts on the smaller one.
    int s = std::min(shift_, o.shift_);
    BPoly n1 = shift_ > s ? u_times(n_, shift_ - s) : n_;
    BPoly n2 = o.shift_ > s ? u_times(o.n_, o.shift_ - s) : o.n_;
    if (d_ == o.d_) {
      assign(s, n1 + n2, d_);
      return *this;
    }
    BPoly g = bipoly::gcd(d_, o.d_);
    if (trivial(g)) {
      assign_coprime_den(s, n1 * o.d_ + n2 * d_, d_ * o.d_);
      return *this;
    }
    BPoly d1 = bipoly::exact_divide(d_, g), d2 = bipoly::exact_divide(o.d_, g);
    BPoly n = n1 * d2 + n2 * d1;
    if (n.is_zero()) return *this = RatQZ();
    BPoly c = bipoly::gcd(n, g);
    if (!trivial(c)) {
      n = bipoly::exact_divide(n, c);
      g = bipoly::exact_divide(g, c);
    }
    assign_coprime_den(s, std::move(n), g * d1 * d2);
    return *this;
  }
  RatQZ& operator-=(const RatQZ& o) { return *this += -o; }

  RatQZ& operator*=(const RatQZ& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatQZ();
    BPoly n1 = n_, n2 = o.n_, d1 = d_, d2 = o.d_;
    if (!trivial(d2)) {
      BPoly g = bipoly::gcd(n1, d2);
      if (!trivial(g)) {
        n1 = bipoly::exact_divide(n1, g);
        d2 = bipoly::exact_divide(d2, g);
      }
    }
    if (!trivial(d1)) {
      BPoly g = bipoly::gcd(n2, d1);
      if (!trivial(g)) {
        n2 = bipoly::exact_divide(n2, g);
        d1 = bipoly::exact_divide(d1, g);
      }
    }
    assign_coprime_den(shift_ + o.shift_, n1 * n2, d1 * d2);
    return *this;
  }
  RatQZ& operator/=(const RatQZ& o) { return *this *= o.inverse(); }

  friend RatQZ operator+(RatQZ a, const RatQZ& b) { return a += b; }
  friend RatQZ operator-(RatQZ a, const RatQZ& b) { return a -= b; }
  friend RatQZ operator*(RatQZ a, const RatQZ& b) { return a *= b; }
  friend RatQZ operator/(RatQZ a, const RatQZ& b) { return a /= b; }

  friend bool operator==(const RatQZ& a, const RatQZ& b) {
    return a.shift_ == b.shift_ && a.n_ == b.n_ && a.d_ == b.d_;
  }

  // Substitute z -> value.
  RatQ eval(const RatQ& z) const {
    RatQ d = den().eval(z);
    if (d.is_zero()) throw std::domain_error("RatQZ: evaluation at a pole");
    return num().eval(z) / d;
  }
  // Substitute both u and z by Gaussian rationals.
  GaussianRational eval(const GaussianRational& u, const GaussianRational& z) const {
    auto at = [&](const BPoly& p) {
      GaussianRational acc;
      for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc *= z;
        if (!p.coeffs()[k].is_zero()) acc += p.coeffs()[k].eval(u);
      }
      return acc;
    };
    GaussianRational d = at(d_);
    if (d.is_zero()) throw std::domain_error("RatQZ: evaluation at a pole");
    return at(n_) * pow(u, shift_) / d;
  }

  std::size_t size_hint() const {
    std::size_t s = 0;
    for (const auto* p : {&n_, &d_})
      for (const auto& c : p->coeffs())
        for (const auto& x : c.coeffs()) s += x.size_hint() + 1;
    return s;
  }

 private:
  // Constant in both u and z.
  static bool trivial(const BPoly& p) { return p.is_constant() && p.coeff(0).is_constant(); }

  static BPoly u_times(const BPoly& p, int k) {
    std::vector<GPoly> c;
    for (const auto& x : p.coeffs()) c.push_back(x.shifted(k));
    return BPoly::from_coeffs(std::move(c));
  }

  static ZPoly to_zpoly(const BPoly& p, int shift) {
    std::vector<RatQ> c;
    for (const auto& x : p.coeffs()) c.emplace_back(x.is_zero() ? RatQ() : RatQ(HalfLaurent(shift, x)));
    return ZPoly::from_coeffs(std::move(c));
  }

  // General case: reduce by the full gcd.
  void assign(int shift, BPoly n, BPoly d) {
    if (d.is_zero()) throw std::domain_error("RatQZ: zero denominator");
    if (n.is_zero()) return set_zero();
    BPoly g = bipoly::gcd(n, d);
    if (!trivial(g)) {
      n = bipoly::exact_divide(n, g);
      d = bipoly::exact_divide(d, g);
    }
    assign_canonical(shift, std::move(n), std::move(d));
    normalize_unit();
  }

  void assign_coprime_den(int shift, BPoly n, BPoly d) {
    if (n.is_zero()) return set_zero();
    assign_canonical(shift, std::move(n), std::move(d));
    normalize_unit();
  }

  // n, d coprime; strips powers of u into the shift.
  void assign_canonical(int shift, BPoly n, BPoly d) {
    int vn = bipoly::u_valuation(n), vd = bipoly::u_valuation(d);
    shift_ = shift + vn - vd;
    n_ = bipoly::u_unshift(n, vn);
    d_ = bipoly::u_unshift(d, vd);
  }

  // Scale so the lowest term of the denominator is 1.
  void normalize_unit() {
    const GPoly& low = d_.coeff(d_.valuation());
    GaussianRational c = low.coeff(low.valuation());
    if (c.is_one()) return;
    GaussianRational inv = c.inverse();
    n_ = bipoly::scale(n_, inv);
    d_ = bipoly::scale(d_, inv);
  }

  void set_zero() {
    shift_ = 0;
    n_ = BPoly();
    d_ = BPoly(GPoly(GaussianRational(1)));
  }

  int shift_ = 0;
  BPoly n_;
  BPoly d_{GPoly(GaussianRational(1))};
};

}  // namespace tetra

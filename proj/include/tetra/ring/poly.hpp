#pragma once

// Dense univariate polynomials over an exact coefficient type.
//
// The coefficient type needs value-initialised zero, construction from 1,
// the ring operators and `is_zero()`. Division, gcd and `monic()` further
// require a field.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tetra {

template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F c) {
    if (!c.is_zero()) c_.push_back(std::move(c));
  }

  static Poly from_coeffs(std::vector<F> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }
  static Poly monomial(F c, int degree) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, F{});
    p.c_.back() = std::move(c);
    return p;
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
  const F& lead() const {
    assert(!c_.empty());
    return c_.back();
  }
  F coeff(int k) const {
    if (k < 0 || k > degree()) return F{};
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<F>& coeffs() const { return c_; }
  // Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
      if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, F{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }

  Poly scaled(const F& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_)
      if (!c.is_zero()) c *= s;
    return r;
  }
  // Multiply by x^k, k >= 0.
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(static_cast<std::size_t>(k), F{});
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  // Divide by x^k; the low coefficients must vanish.
  Poly unshifted(int k) const {
    Poly r;
    if (k >= static_cast<int>(c_.size())) return r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
  }

  template <class X>
  X eval(const X& x) const {
    X acc{};
    for (std::size_t k = c_.size(); k-- > 0;) {
      acc *= x;
      acc += X(c_[k]);
    }
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // ---- field operations ----

  Poly monic() const {
    if (is_zero() || lead() == F(1)) return *this;
    F inv = F(1) / lead();
    Poly r = scaled(inv);
    r.c_.back() = F(1);
    return r;
  }

  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly r = a;
    if (r.degree() < b.degree()) return {Poly{}, r};
    Poly q;
    q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F{});
    const bool unit_lead = b.lead() == F(1);
    F inv_lead = unit_lead ? F(1) : F(1) / b.lead();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      int shift = r.degree() - db;
      F f = unit_lead ? r.lead() : r.lead() * inv_lead;
      for (int k = 0; k < db; ++k) {
        const F& bc = b.c_[static_cast<std::size_t>(k)];
        if (!bc.is_zero()) r.c_[static_cast<std::size_t>(k + shift)] -= f * bc;
      }
      r.c_.pop_back();
      r.trim();
      q.c_[static_cast<std::size_t>(shift)] = std::move(f);
    }
    q.trim();
    return {std::move(q), std::move(r)};
  }

  // Quotient of an exact division; throws if the remainder is nonzero.
  Poly exact_div(const Poly& b) const {
    if (b.is_one()) return *this;
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::logic_error("Poly: inexact division");
    return q;
  }

  friend Poly gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(F(1));
    if constexpr (requires { surely_coprime(a, b); }) {
      if (surely_coprime(a, b)) return Poly(F(1));
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    b = b.monic();
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
      if (!b.is_zero() && b.is_constant()) return Poly(F(1));
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

}  // namespace tetra

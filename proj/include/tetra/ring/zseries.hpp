#pragma once

// Power series in z truncated at a fixed order.

#include "tetra/ring/ratqz.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tetra {

/// sum_{k <= order} c_k z^k. Binary operations require equal orders;
/// products are truncated at that order.
class ZSeries {
 public:
  ZSeries() = default;
  explicit ZSeries(int order) : c_(static_cast<std::size_t>(check(order)) + 1) {}
  ZSeries(int order, const RatQ& constant) : ZSeries(order) { c_[0] = constant; }
  ZSeries(int order, std::vector<RatQ> coeffs) : ZSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
  }

  static ZSeries one(int order) { return ZSeries(order, RatQ(1)); }
  static ZSeries from_poly(const ZPoly& p, int order) {
    ZSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.c_[static_cast<std::size_t>(k)] = p.coeff(k);
    return s;
  }
  // Expansion around z = 0; needs den(0) != 0.
  static ZSeries from_ratqz(const RatQZ& f, int order) {
    ZSeries n = from_poly(f.num(), order);
    if (f.is_polynomial()) return n.scaled(f.den().coeff(0).inverse());
    return n * from_poly(f.den(), order).inverse();
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatQ& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  RatQ& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<RatQ>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RatQ& c) { return c.is_zero(); });
  }

  ZSeries operator-() const {
    ZSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  ZSeries& operator+=(const ZSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  ZSeries& operator-=(const ZSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    a.same_order(b);
    ZSeries r(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }

  ZSeries scaled(const RatQ& s) const {
    ZSeries r = *this;
    for (auto& c : r.c_)
      if (!c.is_zero()) c *= s;
    return r;
  }
  // Multiply by z^k (k >= 0), dropping terms beyond the order.
  ZSeries shifted(int k) const {
    ZSeries r(order());
    for (int j = 0; j + k <= order(); ++j) r.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
    return r;
  }
  // Substitute z -> z^k (k >= 1).
  ZSeries substitute_power(int k) const {
    if (k < 1) throw std::invalid_argument("ZSeries: substitution power must be positive");
    ZSeries r(order());
    for (int j = 0; j * k <= order(); ++j) r.c_[static_cast<std::size_t>(j * k)] = c_[static_cast<std::size_t>(j)];
    return r;
  }

  bool invertible() const { return !c_.empty() && !c_[0].is_zero(); }
  ZSeries inverse() const {
    if (!invertible()) throw std::domain_error("ZSeries: constant term is zero");
    ZSeries r(order());
    RatQ inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      RatQ acc;
      for (std::size_t j = 1; j <= k; ++j)
        if (!c_[j].is_zero() && !r.c_[k - j].is_zero()) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -(acc * inv0);
    }
    return r;
  }

  friend bool operator==(const ZSeries& a, const ZSeries& b) { return a.c_ == b.c_; }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("ZSeries: negative order");
    return order;
  }
  void same_order(const ZSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("ZSeries: order mismatch");
  }
  std::vector<RatQ> c_;
};

}  // namespace tetra

#pragma once

// Yang-Baxter check for a two-site matrix with series entries:
//   X12(x) X13(xy) X23(y) = X23(y) X13(xy) X12(x)
// on V (x) V (x) V, V = F^{(x)n}, with x and y independent truncated series
// variables. Entries are supplied by a callback and must conserve a + b = i + j.

#include "tetra/fock.hpp"
#include "tetra/parallel.hpp"
#include "tetra/report.hpp"
#include "tetra/ring.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace tetra {

/// Truncated bivariate series sum c_{ab} x^a y^b, 0 <= a, b <= order.
class XYSeries {
 public:
  XYSeries() = default;
  explicit XYSeries(int order) : order_(order), c_(static_cast<std::size_t>((order + 1) * (order + 1))) {}

  int order() const { return order_; }
  const RatQ& at(int a, int b) const { return c_[idx(a, b)]; }
  RatQ& at(int a, int b) { return c_[idx(a, b)]; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }

  XYSeries& operator+=(const XYSeries& o) {
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }

  enum class Var { X, XY, Y };

  // Multiplication by f(x), f(xy) or f(y).
  XYSeries times(const ZSeries& f, Var v) const {
    XYSeries r(order_);
    int dx = v == Var::Y ? 0 : 1, dy = v == Var::X ? 0 : 1;
    for (int a = 0; a <= order_; ++a)
      for (int b = 0; b <= order_; ++b) {
        const RatQ& c = at(a, b);
        if (c.is_zero()) continue;
        for (int k = 0; k <= order_; ++k) {
          int a2 = a + k * dx, b2 = b + k * dy;
          if (a2 > order_ || b2 > order_) break;
          if (f[k].is_zero()) continue;
          r.at(a2, b2) += c * f[k];
        }
      }
    return r;
  }

  friend bool operator==(const XYSeries& a, const XYSeries& b) { return a.c_ == b.c_; }

  std::string str() const {
    std::string s;
    for (int a = 0; a <= order_; ++a)
      for (int b = 0; b <= order_; ++b)
        if (!at(a, b).is_zero())
          s += (s.empty() ? "" : " + ") + ("(" + to_string(at(a, b)) + ")*x^" + std::to_string(a) + "*y^" +
                                           std::to_string(b));
    return s.empty() ? "0" : s;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * (order_ + 1) + b); }
  int order_ = 0;
  std::vector<RatQ> c_;
};

/// Matrix element X^{a,b}_{i,j} as a z-series.
using SeriesEntry = std::function<ZSeries(const FockIndex& a, const FockIndex& b, const FockIndex& i,
                                          const FockIndex& j)>;

namespace detail {

using Triple = std::tuple<FockIndex, FockIndex, FockIndex>;
using TripleVec = std::map<Triple, XYSeries>;

inline FockIndex& slot(Triple& t, int p) {
  return p == 0 ? std::get<0>(t) : p == 1 ? std::get<1>(t) : std::get<2>(t);
}

// X acting on slots (p, r) with spectral variable v.
inline TripleVec apply_pair(const TripleVec& vec, int p, int r, XYSeries::Var v, const SeriesEntry& entry) {
  TripleVec out;
  for (const auto& [key, coeff] : vec) {
    Triple k = key;
    FockIndex i = slot(k, p), j = slot(k, r);
    for (const auto& [a, b] : split_pairs(i + j)) {
      ZSeries e = entry(a, b, i, j);
      if (e.is_zero()) continue;
      Triple t = key;
      slot(t, p) = a;
      slot(t, r) = b;
      XYSeries term = coeff.times(e, v);
      if (term.is_zero()) continue;
      auto [it, inserted] = out.try_emplace(t, term);
      if (!inserted) it->second += term;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

/// Thread-safe memo around a SeriesEntry.
class EntryCache {
 public:
  explicit EntryCache(SeriesEntry f) : f_(std::move(f)) {}
  ZSeries operator()(const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j) {
    auto key = std::make_tuple(a, b, i, j);
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    ZSeries v = f_(a, b, i, j);
    std::lock_guard lock(mu_);
    return memo_.emplace(key, std::move(v)).first->second;
  }

 private:
  SeriesEntry f_;
  std::mutex mu_;
  std::map<std::tuple<FockIndex, FockIndex, FockIndex, FockIndex>, ZSeries> memo_;
};

}  // namespace detail

/// Compares both sides on every input |i1> (x) |i2> (x) |i3> with
/// |i1| + |i2| + |i3| <= max_degree (accepted by `keep`, if given), for all
/// outputs and all coefficients x^a y^b with a, b <= zmax.
inline Report verify_ybe(const std::string& target, int n, int max_degree, int zmax, SeriesEntry entry,
                         std::function<bool(const FockIndex&, const FockIndex&, const FockIndex&)> keep = nullptr,
                         int jobs = 1) {
  using V = XYSeries::Var;
  detail::EntryCache cache(std::move(entry));
  SeriesEntry cached = [&](const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j) {
    return cache(a, b, i, j);
  };
  std::vector<detail::Triple> inputs;
  for (const auto& flat : enumerate_window(3 * n, max_degree)) {
    detail::Triple t{flat.slice(0, n), flat.slice(n, n), flat.slice(2 * n, n)};
    if (keep && !keep(std::get<0>(t), std::get<1>(t), std::get<2>(t))) continue;
    inputs.push_back(std::move(t));
  }
  std::vector<Report> parts(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t k) {
    detail::TripleVec start;
    XYSeries one(zmax);
    one.at(0, 0) = RatQ(1);
    start.emplace(inputs[k], one);
    // Rightmost factor acts first.
    auto lhs = detail::apply_pair(detail::apply_pair(detail::apply_pair(start, 1, 2, V::Y, cached), 0, 2, V::XY, cached),
                                  0, 1, V::X, cached);
    auto rhs = detail::apply_pair(detail::apply_pair(detail::apply_pair(start, 0, 1, V::X, cached), 0, 2, V::XY, cached),
                                  1, 2, V::Y, cached);
    Report& rep = parts[k];
    const auto& [i1, i2, i3] = inputs[k];
    auto record = [&](const detail::Triple& out, const XYSeries& l, const XYSeries& r) {
      ++rep.checked;
      if (l == r) return;
      const auto& [a1, a2, a3] = out;
      rep.failures.push_back({join_tuple({&a1.m, &a2.m, &a3.m, &i1.m, &i2.m, &i3.m}), l.str(), r.str()});
    };
    XYSeries zero(zmax);
    for (const auto& [out, l] : lhs) {
      auto it = rhs.find(out);
      record(out, l, it == rhs.end() ? zero : it->second);
    }
    for (const auto& [out, r] : rhs)
      if (!lhs.count(out)) record(out, zero, r);
  });
  Report rep;
  rep.target = target;
  for (auto& p : parts) rep.merge(std::move(p));
  return rep;
}

}  // namespace tetra

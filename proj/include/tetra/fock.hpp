#pragma once

// Bosonic Fock space F^{(x)n}: multi-index basis, sparse vectors and
// windowed sparse operators.

#include "tetra/ring.hpp"

#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

/// Occupation numbers |m_1> (x) ... (x) |m_n>.
struct FockIndex {
  std::vector<int> m;

  FockIndex() = default;
  explicit FockIndex(std::vector<int> v) : m(std::move(v)) {}
  FockIndex(std::initializer_list<int> v) : m(v) {}
  static FockIndex zero(int n) { return FockIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static FockIndex unit(int n, int r) {  // e_r, 1-based
    FockIndex f = zero(n);
    f.m.at(static_cast<std::size_t>(r - 1)) = 1;
    return f;
  }

  int size() const { return static_cast<int>(m.size()); }
  int degree() const { return std::accumulate(m.begin(), m.end(), 0); }
  int parity() const { return degree() % 2 == 0 ? 1 : -1; }
  bool valid() const {
    for (int v : m)
      if (v < 0) return false;
    return true;
  }
  int operator[](int r) const { return m[static_cast<std::size_t>(r)]; }
  int& operator[](int r) { return m[static_cast<std::size_t>(r)]; }

  FockIndex operator+(const FockIndex& o) const {
    FockIndex r = *this;
    for (std::size_t k = 0; k < m.size(); ++k) r.m[k] += o.m[k];
    return r;
  }
  FockIndex operator-(const FockIndex& o) const {
    FockIndex r = *this;
    for (std::size_t k = 0; k < m.size(); ++k) r.m[k] -= o.m[k];
    return r;
  }
  FockIndex reversed() const { return FockIndex(std::vector<int>(m.rbegin(), m.rend())); }
  // Concatenation: the index of |a> (x) |b> in the doubled space.
  FockIndex concat(const FockIndex& o) const {
    FockIndex r = *this;
    r.m.insert(r.m.end(), o.m.begin(), o.m.end());
    return r;
  }
  FockIndex slice(int from, int count) const {
    return FockIndex(std::vector<int>(m.begin() + from, m.begin() + from + count));
  }

  friend auto operator<=>(const FockIndex&, const FockIndex&) = default;
  friend bool operator==(const FockIndex&, const FockIndex&) = default;
};

inline std::string to_string(const FockIndex& f) {
  std::string s = "(";
  for (std::size_t k = 0; k < f.m.size(); ++k) s += (k ? "," : "") + std::to_string(f.m[k]);
  return s + ")";
}

/// <l|m> = (q^2; q^2)_m delta_{l,m}.
inline RatQ pairing(int l, int m) {
  if (l < 0 || m < 0) throw std::invalid_argument("pairing: negative occupation");
  if (l != m) return RatQ();
  return q_pochhammer(QPower::q(2), m);
}

/// All multi-indices of length n and total degree `degree` in lexicographic
/// order, optionally restricted to the parity sector (-1)^degree = parity.
inline std::vector<FockIndex> enumerate_basis(int n, int degree, std::optional<int> parity = std::nullopt) {
  if (n < 1) throw std::invalid_argument("enumerate_basis: n must be positive");
  std::vector<FockIndex> out;
  if (degree < 0) return out;
  if (parity && *parity != (degree % 2 == 0 ? 1 : -1)) return out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, degree);
  return out;
}

/// Basis vectors of total degree <= max_degree, grouped by degree.
inline std::vector<FockIndex> enumerate_window(int n, int max_degree) {
  std::vector<FockIndex> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto b = enumerate_basis(n, d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

/// Componentwise decompositions a + b = nu, ordered lexicographically in a.
inline std::vector<std::pair<FockIndex, FockIndex>> split_pairs(const FockIndex& nu) {
  std::vector<std::pair<FockIndex, FockIndex>> out;
  FockIndex a = FockIndex::zero(nu.size());
  std::function<void(int)> rec = [&](int pos) {
    if (pos == nu.size()) {
      out.emplace_back(a, nu - a);
      return;
    }
    for (int v = 0; v <= nu[pos]; ++v) {
      a[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

template <class S>
class SparseVector {
 public:
  using Map = std::map<FockIndex, S>;

  SparseVector() = default;
  static SparseVector basis(FockIndex idx, S coeff = S(1)) {
    SparseVector v;
    v.add(std::move(idx), coeff);
    return v;
  }

  void add(const FockIndex& idx, const S& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(idx, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  const Map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  S coeff(const FockIndex& idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? S() : it->second;
  }
  int max_degree() const {
    int d = -1;
    for (const auto& [k, v] : entries_) d = std::max(d, k.degree());
    return d;
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, v] : o.entries_) add(k, v);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [k, v] : o.entries_) add(k, -v);
    return *this;
  }
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  SparseVector scaled(const S& c) const {
    SparseVector r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : entries_) r.add(k, v * c);
    return r;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Map entries_;
};

class WindowError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Linear operator given by its action on every basis vector of total
/// degree <= window. Applying it to a vector with support outside the
/// window is an error rather than a silent truncation.
///
/// `spectral_weight` is the power of the spectral parameter the operator
/// carries; it adds under composition.
template <class S>
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(int sites, int window, int spectral_weight = 0)
      : sites_(sites), window_(window), weight_(spectral_weight) {}

  // Builds the table from a per-basis-vector action.
  template <class Fn>
  static SparseOperator from_action(int sites, int window, int spectral_weight, Fn&& act) {
    SparseOperator op(sites, window, spectral_weight);
    for (const auto& idx : enumerate_window(sites, window)) {
      SparseVector<S> img = act(idx);
      if (!img.is_zero()) op.action_.emplace(idx, std::move(img));
    }
    return op;
  }
  static SparseOperator identity(int sites, int window) {
    return from_action(sites, window, 0, [](const FockIndex& i) { return SparseVector<S>::basis(i); });
  }
  static SparseOperator zero(int sites, int window) { return SparseOperator(sites, window, 0); }

  int sites() const { return sites_; }
  int window() const { return window_; }
  int spectral_weight() const { return weight_; }
  const std::map<FockIndex, SparseVector<S>>& action() const { return action_; }

  SparseVector<S> image(const FockIndex& idx) const {
    check(idx);
    auto it = action_.find(idx);
    return it == action_.end() ? SparseVector<S>() : it->second;
  }

  SparseVector<S> apply(const SparseVector<S>& v) const {
    SparseVector<S> out;
    for (const auto& [idx, c] : v.entries()) {
      check(idx);
      auto it = action_.find(idx);
      if (it == action_.end()) continue;
      for (const auto& [j, d] : it->second.entries()) out.add(j, d * c);
    }
    return out;
  }

  // (*this) o other, defined on the part of other's window that other maps
  // into this window.
  SparseOperator compose(const SparseOperator& other) const {
    SparseOperator r(sites_, other.window_, weight_ + other.weight_);
    for (const auto& [idx, img] : other.action_) {
      if (img.max_degree() > window_) {
        r.window_ = std::min(r.window_, idx.degree() - 1);
        continue;
      }
      SparseVector<S> v = apply(img);
      if (!v.is_zero()) r.action_.emplace(idx, std::move(v));
    }
    // Drop entries above a window shrunk by truncation.
    for (auto it = r.action_.begin(); it != r.action_.end();) {
      if (it->first.degree() > r.window_) it = r.action_.erase(it);
      else ++it;
    }
    return r;
  }

  SparseOperator plus(const SparseOperator& o) const {
    if (o.weight_ != weight_) throw std::invalid_argument("SparseOperator: adding operators of different weight");
    SparseOperator r(sites_, std::min(window_, o.window_), weight_);
    for (const auto& idx : enumerate_window(sites_, r.window_)) {
      SparseVector<S> v = image(idx) + o.image(idx);
      if (!v.is_zero()) r.action_.emplace(idx, std::move(v));
    }
    return r;
  }

  SparseOperator scaled(const S& c) const {
    SparseOperator r(sites_, window_, weight_);
    for (const auto& [idx, img] : action_) {
      SparseVector<S> v = img.scaled(c);
      if (!v.is_zero()) r.action_.emplace(idx, std::move(v));
    }
    return r;
  }

 private:
  void check(const FockIndex& idx) const {
    if (idx.size() != sites_) throw std::invalid_argument("SparseOperator: index has wrong number of sites");
    if (idx.degree() > window_)
      throw WindowError("SparseOperator: vector " + to_string(idx) + " escapes the degree window " +
                        std::to_string(window_));
  }

  int sites_ = 1;
  int window_ = 0;
  int weight_ = 0;
  std::map<FockIndex, SparseVector<S>> action_;
};

}  // namespace tetra

#pragma once

// The 3d R matrix on F^{(x)3}, its weight symmetry, the tetrahedron
// equation and the boundary-vector eigenrelations.

#include "tetra/fock.hpp"
#include "tetra/parallel.hpp"
#include "tetra/report.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tetra {

/// Indices (a, b, c, i, j, k) of R^{a,b,c}_{i,j,k}: output a,b,c, input i,j,k.
using RIndex = std::array<int, 6>;

/// Direct evaluation of R^{a,b,c}_{i,j,k}:
///
///   delta^{a+b}_{i+j} delta^{b+c}_{j+k} sum_{lambda+mu=b, mu<=i} (-1)^lambda
///     q^{ik + b + lambda(c-a) + mu(mu-i-k-1)} [lambda+a, a]_{q^2} [i, mu]_{q^2}
inline HalfLaurent r_element_formula(int a, int b, int c, int i, int j, int k) {
  if (std::min({a, b, c, i, j, k}) < 0) return {};
  if (a + b != i + j || b + c != j + k) return {};
  HalfLaurent sum;
  for (int mu = 0; mu <= std::min(b, i); ++mu) {
    int lambda = b - mu;
    int q_exp = i * k + b + lambda * (c - a) + mu * (mu - i - k - 1);
    HalfLaurent term = gaussian_binomial_poly(lambda + a, a, QPower::q(2)) *
                       gaussian_binomial_poly(i, mu, QPower::q(2));
    term = term.times_u_power(2 * q_exp);
    if (lambda % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

/// Memoised table of 3d R elements, shared by all verifiers.
///
/// Concurrent readers take a shared lock; a miss computes outside the lock
/// and inserts under the exclusive lock.
class ThreeDR {
 public:
  using Override = std::function<std::optional<HalfLaurent>(const RIndex&)>;

  static ThreeDR& shared() {
    static ThreeDR table;
    return table;
  }

  HalfLaurent element(int a, int b, int c, int i, int j, int k) {
    if (a + b != i + j || b + c != j + k || std::min({a, b, c, i, j, k}) < 0) return {};
    RIndex key{a, b, c, i, j, k};
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    HalfLaurent v;
    std::optional<HalfLaurent> forced;
    {
      std::shared_lock lock(mu_);
      if (override_) forced = override_(key);
    }
    v = forced ? *forced : r_element_formula(a, b, c, i, j, k);
    std::unique_lock lock(mu_);
    memo_.emplace(key, v);
    return v;
  }

  /// Replaces selected entries (test builds use this to corrupt the table
  /// and exercise the mismatch paths). Clears the memo.
  void set_override(Override fn) {
    std::unique_lock lock(mu_);
    override_ = std::move(fn);
    memo_.clear();
  }
  void clear_override() { set_override(nullptr); }

  std::size_t memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

 private:
  struct Hash {
    std::size_t operator()(const RIndex& k) const {
      std::uint64_t h = 1469598103934665603ull;
      for (int v : k) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };
  mutable std::shared_mutex mu_;
  std::unordered_map<RIndex, HalfLaurent, Hash> memo_;
  Override override_;
};

inline HalfLaurent r_element(int a, int b, int c, int i, int j, int k) {
  return ThreeDR::shared().element(a, b, c, i, j, k);
}

/// (q^2; q^2)_m as a polynomial.
inline HalfLaurent pochhammer_q2(int m) { return q_pochhammer_poly(QPower::q(2), QPower::q(2), m); }

/// Checks (q^2)_a (q^2)_b (q^2)_c R^{abc}_{ijk} = (q^2)_i (q^2)_j (q^2)_k R^{ijk}_{abc}
/// for every conserving tuple with i + j + k <= max_degree.
inline Report verify_weight_symmetry(int max_degree) {
  Report rep;
  rep.target = "weight-symmetry";
  for (const auto& in : enumerate_window(3, max_degree)) {
    int i = in[0], j = in[1], k = in[2];
    for (int b = 0; b <= std::min(i + j, j + k); ++b) {
      int a = i + j - b, c = j + k - b;
      HalfLaurent lhs = pochhammer_q2(a) * pochhammer_q2(b) * pochhammer_q2(c) * r_element(a, b, c, i, j, k);
      HalfLaurent rhs = pochhammer_q2(i) * pochhammer_q2(j) * pochhammer_q2(k) * r_element(i, j, k, a, b, c);
      ++rep.checked;
      if (!(lhs == rhs)) rep.failures.push_back({{a, b, c, i, j, k}, to_string(lhs), to_string(rhs)});
    }
  }
  return rep;
}

namespace detail {

using Vec6 = std::map<std::array<int, 6>, HalfLaurent>;

// R acting on tensor slots (p, r, s) of F^{(x)6}.
inline Vec6 apply_r(const Vec6& v, int p, int r, int s) {
  Vec6 out;
  for (const auto& [idx, coeff] : v) {
    int i = idx[static_cast<std::size_t>(p)], j = idx[static_cast<std::size_t>(r)],
        k = idx[static_cast<std::size_t>(s)];
    for (int b = 0; b <= std::min(i + j, j + k); ++b) {
      int a = i + j - b, c = j + k - b;
      HalfLaurent val = r_element(a, b, c, i, j, k);
      if (val.is_zero()) continue;
      auto target = idx;
      target[static_cast<std::size_t>(p)] = a;
      target[static_cast<std::size_t>(r)] = b;
      target[static_cast<std::size_t>(s)] = c;
      auto [it, inserted] = out.try_emplace(target, coeff * val);
      if (!inserted) {
        it->second += coeff * val;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace detail

/// R_124 R_135 R_236 R_456 = R_456 R_236 R_135 R_124 on every input of total
/// degree <= max_degree; every output coefficient of either side is compared.
inline Report verify_tetrahedron(int max_degree, int jobs = 1) {
  auto inputs = enumerate_window(6, max_degree);
  std::vector<Report> parts(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t n) {
    detail::Vec6 start;
    std::array<int, 6> in{};
    std::copy(inputs[n].m.begin(), inputs[n].m.end(), in.begin());
    start.emplace(in, HalfLaurent(1));
    // Slots are 0-based: R_124 -> (0,1,3), R_135 -> (0,2,4), R_236 -> (1,2,5), R_456 -> (3,4,5).
    auto lhs = detail::apply_r(detail::apply_r(detail::apply_r(detail::apply_r(start, 3, 4, 5), 1, 2, 5), 0, 2, 4), 0, 1, 3);
    auto rhs = detail::apply_r(detail::apply_r(detail::apply_r(detail::apply_r(start, 0, 1, 3), 0, 2, 4), 1, 2, 5), 3, 4, 5);
    Report& rep = parts[n];
    auto compare = [&](const std::array<int, 6>& out, const HalfLaurent& l, const HalfLaurent& r) {
      ++rep.checked;
      if (!(l == r)) {
        std::vector<int> t(in.begin(), in.end());
        t.insert(t.end(), out.begin(), out.end());
        rep.failures.push_back({t, to_string(l), to_string(r)});
      }
    };
    for (const auto& [out, l] : lhs) {
      auto it = rhs.find(out);
      compare(out, l, it == rhs.end() ? HalfLaurent() : it->second);
    }
    for (const auto& [out, r] : rhs)
      if (!lhs.count(out)) compare(out, HalfLaurent(), r);
    if (lhs.empty() && rhs.empty()) ++rep.checked;
  });
  Report rep;
  rep.target = "tetrahedron";
  for (auto& p : parts) rep.merge(std::move(p));
  return rep;
}

enum class BoundarySide { Bra, Ket };

/// Polynomial in the formal boundary parameters x, y over RatQ.
using XYPoly = std::map<std::pair<int, int>, RatQ>;

inline void add_term(XYPoly& p, std::pair<int, int> mono, const RatQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline std::string to_string(const XYPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [mono, c] : p) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")*x^" + std::to_string(mono.first) + "*y^" + std::to_string(mono.second);
  }
  return s;
}

/// Coefficient of |m1> (x) |m2> (x) |m3> in |chi_s(x)> (x) |chi_s(xy)> (x) |chi_s(y)>,
/// where |chi_s(w)> = sum_m w^m / (q^{s^2})_m |s m>. Zero unless s divides each m.
inline XYPoly boundary_coefficient(int s, int m1, int m2, int m3) {
  XYPoly p;
  if (m1 % s || m2 % s || m3 % s) return p;
  QPower base = QPower::q(s * s);
  RatQ c = (q_pochhammer(base, m1 / s) * q_pochhammer(base, m2 / s) * q_pochhammer(base, m3 / s)).inverse();
  add_term(p, {(m1 + m2) / s, (m2 + m3) / s}, c);
  return p;
}

/// Ket side: the |a,b,c> coefficient of R|chi_s(x,y)> equals that of
/// |chi_s(x,y)> for a + b + c <= max_degree. Bra side: <chi_s(x,y)|R and
/// <chi_s(x,y)| agree on every |i,j,k> with i + j + k <= max_degree, using
/// <l|m> = (q^2)_m delta_{lm}.
inline Report verify_boundary_eigenrelation(int s, BoundarySide side, int max_degree) {
  if (s != 1 && s != 2) throw std::invalid_argument("boundary vectors exist for s = 1, 2 only");
  Report rep;
  rep.target = side == BoundarySide::Ket ? "boundary-ket" : "boundary-bra";
  auto scale = [](const XYPoly& p, const RatQ& c) {
    XYPoly r;
    for (const auto& [mono, v] : p) add_term(r, mono, v * c);
    return r;
  };
  auto weight = [](int a, int b, int c) { return RatQ(pochhammer_q2(a) * pochhammer_q2(b) * pochhammer_q2(c)); };
  for (const auto& t : enumerate_window(3, max_degree)) {
    XYPoly lhs, rhs;
    if (side == BoundarySide::Ket) {
      int a = t[0], b = t[1], c = t[2];
      for (int j = 0; j <= std::min(a + b, b + c); ++j) {
        int i = a + b - j, k = b + c - j;
        HalfLaurent r = r_element(a, b, c, i, j, k);
        if (r.is_zero()) continue;
        for (const auto& [mono, v] : boundary_coefficient(s, i, j, k)) add_term(lhs, mono, v * RatQ(r));
      }
      rhs = boundary_coefficient(s, a, b, c);
    } else {
      int i = t[0], j = t[1], k = t[2];
      for (int b = 0; b <= std::min(i + j, j + k); ++b) {
        int a = i + j - b, c = j + k - b;
        HalfLaurent r = r_element(a, b, c, i, j, k);
        if (r.is_zero()) continue;
        for (const auto& [mono, v] : boundary_coefficient(s, a, b, c))
          add_term(lhs, mono, v * weight(a, b, c) * RatQ(r));
      }
      rhs = scale(boundary_coefficient(s, i, j, k), weight(i, j, k));
    }
    ++rep.checked;
    if (lhs != rhs) rep.failures.push_back({t.m, to_string(lhs), to_string(rhs)});
  }
  return rep;
}

}  // namespace tetra

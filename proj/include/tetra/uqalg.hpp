#pragma once

// Quantum affine algebras U_q(D^(2)_{n+1}), U_q(A^(2)_{2n}), U_q(C^(1)_n):
// Cartan data, q-oscillator representations on F^{(x)n}, coproducts and the
// checks of the defining relations.

#include "tetra/fock.hpp"
#include "tetra/report.hpp"
#include "tetra/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

enum class AlgebraKind { D2, A2, C1 };

struct Algebra {
  AlgebraKind kind = AlgebraKind::D2;
  int n = 1;
};

inline AlgebraKind parse_algebra(const std::string& s) {
  if (s == "d2") return AlgebraKind::D2;
  if (s == "a2") return AlgebraKind::A2;
  if (s == "c1") return AlgebraKind::C1;
  throw std::invalid_argument("unknown algebra '" + s + "' (expected d2, a2 or c1)");
}

inline std::string algebra_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::D2: return "d2";
    case AlgebraKind::A2: return "a2";
    case AlgebraKind::C1: return "c1";
  }
  return "?";
}

struct CartanData {
  std::vector<std::vector<int>> a;
  std::vector<int> qi;  // q_i = u^{qi[i]}, i.e. half-exponents of q
};

inline CartanData cartan_matrix(const Algebra& alg) {
  if (alg.n < 1) throw std::invalid_argument("rank n must be at least 1");
  const int n = alg.n;
  CartanData c;
  c.qi.assign(static_cast<std::size_t>(n + 1), 2);
  switch (alg.kind) {
    case AlgebraKind::D2: c.qi.front() = 1; c.qi.back() = 1; break;
    case AlgebraKind::A2: c.qi.front() = 1; c.qi.back() = 4; break;
    case AlgebraKind::C1: c.qi.front() = 4; c.qi.back() = 4; break;
  }
  if (n == 1) {
    // Both end nodes are adjacent; the max-formula does not apply.
    switch (alg.kind) {
      case AlgebraKind::D2: c.a = {{2, -2}, {-2, 2}}; break;
      case AlgebraKind::A2: c.a = {{2, -4}, {-1, 2}}; break;
      case AlgebraKind::C1: c.a = {{2, -2}, {-2, 2}}; break;
    }
  } else {
    c.a.assign(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        auto& aij = c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i == j) aij = 2;
        else if (std::abs(i - j) == 1) {
          int di = c.qi[static_cast<std::size_t>(i)], dj = c.qi[static_cast<std::size_t>(j)];
          if (dj % di != 0 && di % dj != 0) throw std::logic_error("non-integral Cartan entry");
          aij = -std::max(dj / di, 1);
        }
      }
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      if (c.qi[ui] * c.a[ui][uj] != c.qi[uj] * c.a[uj][ui])
        throw std::logic_error("Cartan matrix is not symmetrised by the q_i data");
    }
  return c;
}

enum class GenType { E, F, K, KInv };

struct Generator {
  GenType type;
  int index;
};

inline std::string to_string(const Generator& g) {
  const char* t = g.type == GenType::E ? "e" : g.type == GenType::F ? "f" : g.type == GenType::K ? "k" : "kinv";
  return t + std::to_string(g.index);
}

/// Power of the spectral parameter carried by a generator.
inline int spectral_weight(const Generator& g) {
  if (g.index != 0) return 0;
  return g.type == GenType::E ? 1 : g.type == GenType::F ? -1 : 0;
}

namespace detail {

inline RatQ bracket(int m) { return q_number(m); }

inline RatQ two_step_coeff(int m) {
  RatQ b2 = bracket(2);
  return bracket(m) * bracket(m - 1) / (b2 * b2);
}

// Eigenvalue of k_r on |m>.
inline RatQ k_eigenvalue(const Algebra& alg, int r, const FockIndex& m) {
  const int n = alg.n;
  if (r == 0) {
    if (alg.kind == AlgebraKind::C1) return -RatQ::q_power(2 * m[0] + 1);
    return RatQ::i() * RatQ(-1) * RatQ::u_power(2 * m[0] + 1);
  }
  if (r == n) {
    if (alg.kind == AlgebraKind::D2) return RatQ::i() * RatQ::u_power(-2 * m[n - 1] - 1);
    return -RatQ::q_power(-2 * m[n - 1] - 1);
  }
  return RatQ::q_power(-m[r - 1] + m[r]);
}

}  // namespace detail

/// Image of the basis vector |m> under a generator: (target, coefficient),
/// or nothing when the image vanishes. x-dependence is not included here.
inline std::optional<std::pair<FockIndex, RatQ>> act_basis(const Algebra& alg, const Generator& g, const FockIndex& m) {
  const int n = alg.n;
  const int r = g.index;
  if (r < 0 || r > n) throw std::invalid_argument("generator index out of range");
  if (m.size() != n) throw std::invalid_argument("basis vector has the wrong number of sites");
  if (g.type == GenType::K) return std::pair{m, detail::k_eigenvalue(alg, r, m)};
  if (g.type == GenType::KInv) return std::pair{m, detail::k_eigenvalue(alg, r, m).inverse()};
  auto shifted = [&](int site, int delta) {  // site is 1-based
    FockIndex t = m;
    t[site - 1] += delta;
    return t;
  };
  auto result = [](FockIndex t, RatQ c) -> std::optional<std::pair<FockIndex, RatQ>> {
    if (!t.valid() || c.is_zero()) return std::nullopt;
    return std::pair{std::move(t), std::move(c)};
  };
  const bool e = g.type == GenType::E;
  RatQ ikappa = RatQ::i() * kappa();
  if (r == 0) {
    if (alg.kind == AlgebraKind::C1) {
      if (e) return result(shifted(1, 2), RatQ(1));
      return result(shifted(1, -2), detail::two_step_coeff(m[0]));
    }
    if (e) return result(shifted(1, 1), RatQ(1));
    return result(shifted(1, -1), ikappa * detail::bracket(m[0]));
  }
  if (r == n) {
    if (alg.kind == AlgebraKind::D2) {
      if (e) return result(shifted(n, -1), ikappa * detail::bracket(m[n - 1]));
      return result(shifted(n, 1), RatQ(1));
    }
    if (e) return result(shifted(n, -2), detail::two_step_coeff(m[n - 1]));
    return result(shifted(n, 2), RatQ(1));
  }
  if (e) {
    FockIndex t = m;
    t[r - 1] -= 1;
    t[r] += 1;
    return result(std::move(t), detail::bracket(m[r - 1]));
  }
  FockIndex t = m;
  t[r - 1] += 1;
  t[r] -= 1;
  return result(std::move(t), detail::bracket(m[r]));
}

/// Largest increase of total degree caused by one generator.
inline int max_degree_shift(const Algebra& alg) { return alg.kind == AlgebraKind::D2 ? 1 : 2; }

/// The generator as an operator on basis vectors of degree <= window.
inline SparseOperator<RatQ> rep_generator(const Algebra& alg, const Generator& g, int window) {
  if (window < 0) throw std::invalid_argument("degree window must be non-negative");
  return SparseOperator<RatQ>::from_action(alg.n, window, spectral_weight(g), [&](const FockIndex& m) {
    SparseVector<RatQ> v;
    if (auto img = act_basis(alg, g, m)) v.add(img->first, img->second);
    return v;
  });
}

// ---------------------------------------------------------------------------
// Two-site actions.

enum class Coproduct { Delta, DeltaOp };

/// One term of a two-site action: coefficient * z^zpow * |target>.
struct TwoSiteTerm {
  FockIndex target;
  RatQ coeff;
  int zpow;
};

/// Delta(g) or Delta'(g) on |a> (x) |b> (index of length 2n), divided by y^w
/// for a generator of spectral weight w, so that only z = x/y remains:
///   Delta(e)  = 1 (x) e + z^w e (x) k        Delta(f)  = z^w f (x) 1 + k^-1 (x) f
///   Delta'(e) = z^w e (x) 1 + k (x) e        Delta'(f) = 1 (x) f + z^w f (x) k^-1
inline std::vector<TwoSiteTerm> coproduct_terms(const Algebra& alg, const Generator& g, Coproduct side,
                                                const FockIndex& ab) {
  const int n = alg.n;
  FockIndex a = ab.slice(0, n), b = ab.slice(n, n);
  const int w = spectral_weight(g);
  std::vector<TwoSiteTerm> out;
  // (x (x) y) |a> (x) |b> with x, y each a generator or the identity (nullptr).
  auto tensor = [&](const Generator* x, const Generator* y, int zpow) {
    FockIndex ta = a, tb = b;
    RatQ c(1);
    if (x) {
      auto img = act_basis(alg, *x, a);
      if (!img) return;
      ta = img->first;
      c *= img->second;
    }
    if (y) {
      auto img = act_basis(alg, *y, b);
      if (!img) return;
      tb = img->first;
      c *= img->second;
    }
    out.push_back({ta.concat(tb), std::move(c), zpow});
  };
  Generator k{GenType::K, g.index}, kinv{GenType::KInv, g.index};
  switch (g.type) {
    case GenType::K:
    case GenType::KInv:
      tensor(&g, &g, 0);
      break;
    case GenType::E:
      if (side == Coproduct::Delta) {
        tensor(nullptr, &g, 0);
        tensor(&g, &k, w);
      } else {
        tensor(&g, nullptr, w);
        tensor(&k, &g, 0);
      }
      break;
    case GenType::F:
      if (side == Coproduct::Delta) {
        tensor(&g, nullptr, w);
        tensor(&kinv, &g, 0);
      } else {
        tensor(nullptr, &g, 0);
        tensor(&g, &kinv, w);
      }
      break;
  }
  return out;
}

/// Delta(g) or Delta'(g) as an operator on the 2n-site window.
inline SparseOperator<RatQZ> coproduct_action(const Algebra& alg, const Generator& g, Coproduct side, int window) {
  if (window < 0) throw std::invalid_argument("degree window must be non-negative");
  return SparseOperator<RatQZ>::from_action(2 * alg.n, window, spectral_weight(g), [&](const FockIndex& ab) {
    SparseVector<RatQZ> v;
    for (const auto& t : coproduct_terms(alg, g, side, ab)) v.add(t.target, RatQZ(t.coeff) * RatQZ::z_power(t.zpow));
    return v;
  });
}

// ---------------------------------------------------------------------------
// Defining relations.

namespace detail {

// A word g_1 g_2 ... g_k (g_k acts first) with a scalar.
struct Word {
  RatQ coeff;
  std::vector<Generator> gens;
};

inline int word_weight(const Word& w) {
  int s = 0;
  for (const auto& g : w.gens) s += spectral_weight(g);
  return s;
}

struct Relation {
  std::string name;
  std::vector<Word> lhs, rhs;
};

inline std::vector<Relation> defining_relations(const Algebra& alg, const CartanData& c) {
  const int n = alg.n;
  auto qi = [&](int i) { return c.qi[static_cast<std::size_t>(i)]; };
  auto a = [&](int i, int j) { return c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  std::vector<Relation> rels;
  auto G = [](GenType t, int i) { return Generator{t, i}; };
  for (int i = 0; i <= n; ++i) {
    std::string si = std::to_string(i);
    rels.push_back({"k" + si + "*kinv" + si, {{RatQ(1), {G(GenType::K, i), G(GenType::KInv, i)}}}, {{RatQ(1), {}}}});
    rels.push_back({"kinv" + si + "*k" + si, {{RatQ(1), {G(GenType::KInv, i), G(GenType::K, i)}}}, {{RatQ(1), {}}}});
    for (int j = 0; j <= n; ++j) {
      std::string ij = si + "," + std::to_string(j);
      if (i < j)
        rels.push_back({"[k,k]" + ij, {{RatQ(1), {G(GenType::K, i), G(GenType::K, j)}}},
                        {{RatQ(1), {G(GenType::K, j), G(GenType::K, i)}}}});
      RatQ scale = RatQ::u_power(qi(i) * a(i, j));
      rels.push_back({"kek" + ij, {{RatQ(1), {G(GenType::K, i), G(GenType::E, j), G(GenType::KInv, i)}}},
                      {{scale, {G(GenType::E, j)}}}});
      rels.push_back({"kfk" + ij, {{RatQ(1), {G(GenType::K, i), G(GenType::F, j), G(GenType::KInv, i)}}},
                      {{scale.inverse(), {G(GenType::F, j)}}}});
      Relation ef{"[e,f]" + ij,
                  {{RatQ(1), {G(GenType::E, i), G(GenType::F, j)}}, {RatQ(-1), {G(GenType::F, j), G(GenType::E, i)}}},
                  {}};
      if (i == j) {
        RatQ inv_den = (RatQ::u_power(qi(i)) - RatQ::u_power(-qi(i))).inverse();
        ef.rhs = {{inv_den, {G(GenType::K, i)}}, {-inv_den, {G(GenType::KInv, i)}}};
      }
      rels.push_back(std::move(ef));
      if (i == j) continue;
      // Serre relations with divided powers x^(v) = x^v / [v]_{q_i}!.
      int top = 1 - a(i, j);
      for (GenType t : {GenType::E, GenType::F}) {
        Relation s{std::string(t == GenType::E ? "serre-e" : "serre-f") + ij, {}, {}};
        for (int v = 0; v <= top; ++v) {
          RatQ coeff = (q_factorial(top - v, QPower{qi(i)}) * q_factorial(v, QPower{qi(i)})).inverse();
          if (v % 2) coeff = -coeff;
          Word w{coeff, {}};
          for (int k = 0; k < top - v; ++k) w.gens.push_back(G(t, i));
          w.gens.push_back(G(t, j));
          for (int k = 0; k < v; ++k) w.gens.push_back(G(t, i));
          s.lhs.push_back(std::move(w));
        }
        rels.push_back(std::move(s));
      }
    }
  }
  return rels;
}

}  // namespace detail

/// Every defining relation applied to every basis vector of degree
/// <= max_degree. Generator tables are built on a window wide enough that no
/// intermediate vector leaves it.
inline Report verify_relations(const Algebra& alg, int max_degree) {
  CartanData c = cartan_matrix(alg);
  auto rels = detail::defining_relations(alg, c);
  std::size_t longest = 0;
  for (const auto& r : rels)
    for (const auto* side : {&r.lhs, &r.rhs})
      for (const auto& w : *side) longest = std::max(longest, w.gens.size());
  const int window = max_degree + max_degree_shift(alg) * static_cast<int>(longest);
  std::map<std::pair<int, int>, SparseOperator<RatQ>> ops;
  auto op = [&](const Generator& g) -> const SparseOperator<RatQ>& {
    auto key = std::make_pair(static_cast<int>(g.type), g.index);
    auto it = ops.find(key);
    if (it == ops.end()) it = ops.emplace(key, rep_generator(alg, g, window)).first;
    return it->second;
  };
  auto apply_side = [&](const std::vector<detail::Word>& side, const FockIndex& m) {
    SparseVector<RatQ> total;
    for (const auto& w : side) {
      SparseVector<RatQ> v = SparseVector<RatQ>::basis(m);
      for (auto g = w.gens.rbegin(); g != w.gens.rend() && !v.is_zero(); ++g) v = op(*g).apply(v);
      total += v.scaled(w.coeff);
    }
    return total;
  };
  auto vec_str = [](const SparseVector<RatQ>& v) {
    std::vector<std::string> parts;
    for (const auto& [k, x] : v.entries()) parts.push_back(to_string(x) + "|" + to_string(k) + ">");
    return parts.empty() ? std::string("0") : join_strings(parts, " + ");
  };
  Report rep;
  rep.target = "relations";
  for (const auto& r : rels) {
    // Spectral-weight homogeneity.
    std::optional<int> weight;
    for (const auto* side : {&r.lhs, &r.rhs})
      for (const auto& w : *side) {
        int ww = detail::word_weight(w);
        if (weight && *weight != ww) throw std::logic_error("relation " + r.name + " is not weight-homogeneous");
        weight = ww;
      }
    for (const auto& m : enumerate_window(alg.n, max_degree)) {
      auto l = apply_side(r.lhs, m), rr = apply_side(r.rhs, m);
      ++rep.checked;
      if (!(l == rr)) rep.failures.push_back({m.m, r.name + ": " + vec_str(l), vec_str(rr)});
    }
  }
  return rep;
}

/// C^(1)_n generators preserve the parity sectors (F^{(x)n})_+ and _-.
inline Report verify_parity_preservation(int n, int max_degree) {
  Algebra alg{AlgebraKind::C1, n};
  Report rep;
  rep.target = "c1-parity";
  for (int r = 0; r <= n; ++r)
    for (GenType t : {GenType::E, GenType::F, GenType::K, GenType::KInv})
      for (const auto& m : enumerate_window(n, max_degree)) {
        ++rep.checked;
        auto img = act_basis(alg, {t, r}, m);
        if (img && img->first.parity() != m.parity())
          rep.failures.push_back({m.m, to_string(Generator{t, r}), to_string(img->first)});
      }
  return rep;
}

// ---------------------------------------------------------------------------
// Recursions for w_{l,k} = |k e_{n-1}> (x) |(l-k) e_n> under Delta.

namespace detail {

using Vec2 = SparseVector<RatQ>;

inline Vec2 delta_apply(const Algebra& alg, const Generator& g, const Vec2& v) {
  Vec2 out;
  for (const auto& [idx, c] : v.entries())
    for (const auto& t : coproduct_terms(alg, g, Coproduct::Delta, idx)) {
      if (t.zpow != 0) throw std::logic_error("recursion uses a generator carrying the spectral parameter");
      out.add(t.target, t.coeff * c);
    }
  return out;
}

inline Vec2 two_site(int n, int k1, int site1, int k2, int site2) {
  FockIndex idx = FockIndex::zero(2 * n);
  idx[site1 - 1] += k1;
  idx[n + site2 - 1] += k2;
  return Vec2::basis(idx);
}

}  // namespace detail

/// Coefficient of f_n f_{n-1}^2 in the A2/C1 two-step recursion. As printed it
/// is q^-2; the identity only holds with q^-2/[2] (the other two terms force
/// it on the |2e_n> (x) |2e_{n-1}> component once l - k >= 2).
enum class TwoStepCoefficient { Corrected, AsPrinted };

inline Report verify_w_recursions(const Algebra& alg, int l_max,
                                  TwoStepCoefficient variant = TwoStepCoefficient::Corrected) {
  const int n = alg.n;
  if (n < 2) throw std::invalid_argument("the w recursions need n >= 2");
  Generator fa{GenType::F, n - 1}, fb{GenType::F, n};
  auto F = [&](const Generator& g, const detail::Vec2& v) { return detail::delta_apply(alg, g, v); };
  auto w = [&](int l, int k) { return detail::two_site(n, k, n - 1, l - k, n); };
  auto str = [](const detail::Vec2& v) {
    std::vector<std::string> parts;
    for (const auto& [k, x] : v.entries()) parts.push_back(to_string(x) + "|" + to_string(k) + ">");
    return parts.empty() ? std::string("0") : join_strings(parts, " + ");
  };
  Report rep;
  rep.target = "w-recursions";
  auto record = [&](std::vector<int> tag, const detail::Vec2& lhs, const detail::Vec2& rhs) {
    ++rep.checked;
    if (!(lhs == rhs)) rep.failures.push_back({std::move(tag), str(lhs), str(rhs)});
  };
  const RatQ qinv = RatQ::q_power(-1);
  if (alg.kind == AlgebraKind::D2) {
    for (int l = 1; l <= l_max; ++l)
      for (int k = 1; k <= l; ++k) {
        detail::Vec2 prev = w(l - 1, k - 1);
        detail::Vec2 rhs = F(fa, F(fb, prev)) - F(fb, F(fa, prev)).scaled(qinv);
        RatQ c = RatQ::i() * RatQ::u_power(2 * (l - k) + 1) / q_number(l - k + 1);
        rhs += F(fa, w(l, k - 1)).scaled(c);
        record({0, l, k}, w(l, k), rhs);
      }
    return rep;
  }
  const RatQ b2 = q_number(2);
  for (int l = 2; l <= l_max; ++l)
    for (int k = 2; k <= l; ++k) {
      detail::Vec2 prev = w(l - 2, k - 2);
      RatQ last = variant == TwoStepCoefficient::Corrected ? qinv * qinv / b2 : qinv * qinv;
      detail::Vec2 rhs = F(fa, F(fa, F(fb, prev))).scaled(b2.inverse()) - F(fa, F(fb, F(fa, prev))).scaled(qinv) +
                         F(fb, F(fa, F(fa, prev))).scaled(last);
      RatQ c = RatQ::q_power(2 * l - 2 * k + 1) / (q_number(l - k + 1) * q_number(l - k + 2));
      rhs += F(fa, F(fa, w(l, k - 2))).scaled(c);
      record({2, l, k}, w(l, k), rhs);
    }
  for (int l = 3; l <= l_max; ++l) {
    RatQ bl = q_number(l), bl1 = q_number(l - 1);
    detail::Vec2 rhs = F(fb, w(l - 2, 1)).scaled(-bl1 / bl);
    detail::Vec2 base = detail::two_site(n, 1, n, l - 3, n);
    rhs += (F(fa, F(fb, base)) - F(fb, F(fa, base)).scaled(qinv * qinv)).scaled(qinv * bl1 / (b2 * bl));
    rhs += F(fa, detail::two_site(n, 1, n, l - 1, n)).scaled(RatQ::q_power(l - 1) / bl);
    record({1, l, 1}, w(l, 1), rhs);
  }
  return rep;
}

}  // namespace tetra

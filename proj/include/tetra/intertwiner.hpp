#pragma once

// Quantum R matrices of the q-oscillator representations: solved from the
// intertwining relations, gauge transformed, compared with S^{s,t}(z) and
// checked against the Yang-Baxter equation.

#include "tetra/fock.hpp"
#include "tetra/reduction.hpp"
#include "tetra/report.hpp"
#include "tetra/ring.hpp"
#include "tetra/ring/text.hpp"
#include "tetra/uqalg.hpp"
#include "tetra/ybe.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

/// One conservation block: all (a, b) with a + b = nu, in lexicographic order
/// of a. matrix[row][col] is the coefficient of |row> in R|col>.
struct RMatrixBlock {
  FockIndex nu;
  std::vector<std::pair<FockIndex, FockIndex>> basis;
  std::vector<std::vector<RatQZ>> matrix;

  int position(const FockIndex& a) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), a,
                               [](const std::pair<FockIndex, FockIndex>& p, const FockIndex& x) { return p.first < x; });
    if (it == basis.end() || !(it->first == a)) throw std::out_of_range("RMatrixBlock: index outside the block");
    return static_cast<int>(it - basis.begin());
  }
};

struct RMatrix {
  Algebra alg;
  int max_degree = 0;
  std::map<FockIndex, RMatrixBlock> blocks;
  std::size_t unknowns = 0;
  std::size_t rank = 0;  // of the homogeneous system

  /// Coefficient of |a> (x) |b> in R(|i> (x) |j>); zero off-block.
  RatQZ entry(const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j) const {
    FockIndex nu = a + b;
    if (!(nu == i + j)) return RatQZ();
    auto it = blocks.find(nu);
    if (it == blocks.end()) throw std::out_of_range("RMatrix: block " + to_string(nu) + " was not solved");
    const auto& blk = it->second;
    return blk.matrix[static_cast<std::size_t>(blk.position(a))][static_cast<std::size_t>(blk.position(i))];
  }
};

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Componentwise change of the Fock index under a raising/lowering generator.
inline std::vector<int> generator_shift(const Algebra& alg, const Generator& g) {
  const int n = alg.n, r = g.index;
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  const int sign = g.type == GenType::E ? 1 : -1;
  if (r == 0) d[0] += sign * (alg.kind == AlgebraKind::C1 ? 2 : 1);
  else if (r == n) d[static_cast<std::size_t>(n - 1)] -= sign * (alg.kind == AlgebraKind::D2 ? 1 : 2);
  else {
    d[static_cast<std::size_t>(r - 1)] -= sign;
    d[static_cast<std::size_t>(r)] += sign;
  }
  return d;
}

inline std::optional<FockIndex> shifted_block(const FockIndex& nu, const std::vector<int>& d) {
  FockIndex out = nu;
  for (int r = 0; r < nu.size(); ++r) out[r] += d[static_cast<std::size_t>(r)];
  if (!out.valid()) return std::nullopt;
  return out;
}

// u0 and z0 used to specialise coefficients when selecting rows.
inline constexpr std::uint64_t kU0 = 1234567891011ull;
inline constexpr std::uint64_t kZ0 = 987654321987ull;

inline std::optional<std::uint64_t> eval_modp(const GPoly& p, std::uint64_t u) {
  auto v = modp::reduce(p);
  if (!v) return std::nullopt;
  std::uint64_t acc = 0;
  for (std::size_t k = v->size(); k-- > 0;) acc = modp::add(modp::mul(acc, u), (*v)[k]);
  return acc;
}

inline std::optional<std::uint64_t> eval_modp(const BPoly& p, std::uint64_t u, std::uint64_t z) {
  std::uint64_t acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    auto c = eval_modp(p.coeffs()[k], u);
    if (!c) return std::nullopt;
    acc = modp::add(modp::mul(acc, z), *c);
  }
  return acc;
}

// Value of f at (u, z) mod p, or nothing if a denominator vanishes there.
inline std::optional<std::uint64_t> eval_modp(const RatQZ& f, std::uint64_t u, std::uint64_t z) {
  if (f.is_zero()) return 0;
  auto n = eval_modp(f.num_poly(), u, z), d = eval_modp(f.den_poly(), u, z);
  if (!n || !d || *d == 0) return std::nullopt;
  std::uint64_t s = f.u_shift() >= 0 ? modp::power(u, static_cast<std::uint64_t>(f.u_shift()))
                                     : modp::inv(modp::power(u, static_cast<std::uint64_t>(-f.u_shift())));
  return modp::mul(modp::mul(*n, modp::inv(*d)), s);
}

struct Row {
  std::map<int, RatQZ> coeffs;
  RatQZ rhs;
};

// Greedy selection of linearly independent rows, using the images mod p.
// Returns the indices of the chosen rows.
inline std::vector<std::size_t> independent_rows(const std::vector<Row>& rows, std::size_t unknowns) {
  std::vector<std::map<int, std::uint64_t>> basis(unknowns);  // pivot column -> reduced row
  std::vector<bool> used(unknowns, false);
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::map<int, std::uint64_t> v;
    for (const auto& [c, x] : rows[r].coeffs) {
      auto e = eval_modp(x, kU0, kZ0);
      if (!e) throw SolveError("coefficient has a pole at the specialisation point");
      if (*e) v[c] = *e;
    }
    while (!v.empty()) {
      auto [c, x] = *v.begin();
      if (!used[static_cast<std::size_t>(c)]) break;
      const auto& b = basis[static_cast<std::size_t>(c)];  // leading entry 1 at column c
      for (const auto& [bc, bx] : b) {
        std::uint64_t nv = modp::sub(v[bc], modp::mul(x, bx));
        if (nv) v[bc] = nv;
        else v.erase(bc);
      }
    }
    if (v.empty()) continue;
    auto [c, x] = *v.begin();
    std::uint64_t inv = modp::inv(x);
    for (auto& [vc, vx] : v) vx = modp::mul(vx, inv);
    basis[static_cast<std::size_t>(c)] = std::move(v);
    used[static_cast<std::size_t>(c)] = true;
    chosen.push_back(r);
  }
  return chosen;
}

// Exact sparse elimination of a non-singular square system, Markowitz pivots.
inline std::vector<RatQZ> solve_square(std::vector<Row> rows, std::size_t unknowns) {
  std::vector<std::set<std::size_t>> col_rows(unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, x] : rows[r].coeffs) col_rows[static_cast<std::size_t>(c)].insert(r);
  std::vector<bool> row_done(rows.size(), false);
  std::vector<std::pair<std::size_t, int>> order;  // (row, pivot column)
  for (std::size_t step = 0; step < unknowns; ++step) {
    std::size_t best_row = rows.size();
    int best_col = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max(), best_size = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row_done[r]) continue;
      std::size_t rl = rows[r].coeffs.size();
      for (const auto& [c, x] : rows[r].coeffs) {
        std::size_t cost = (rl - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
        std::size_t size = x.size_hint();
        if (cost < best_cost || (cost == best_cost && size < best_size)) {
          best_cost = cost;
          best_size = size;
          best_row = r;
          best_col = c;
        }
      }
    }
    if (best_col < 0) throw SolveError("singular system");
    Row& p = rows[best_row];
    row_done[best_row] = true;
    order.emplace_back(best_row, best_col);
    RatQZ inv = p.coeffs.at(best_col).inverse();
    for (auto& [c, x] : p.coeffs) x *= inv;
    p.rhs *= inv;
    std::vector<std::size_t> targets;
    for (std::size_t r : col_rows[static_cast<std::size_t>(best_col)])
      if (!row_done[r]) targets.push_back(r);
    for (std::size_t r : targets) {
      Row& t = rows[r];
      RatQZ f = t.coeffs.at(best_col);
      for (const auto& [c, x] : p.coeffs) {
        auto it = t.coeffs.find(c);
        RatQZ nv = (it == t.coeffs.end() ? RatQZ() : it->second) - f * x;
        if (nv.is_zero()) {
          if (it != t.coeffs.end()) t.coeffs.erase(it);
          col_rows[static_cast<std::size_t>(c)].erase(r);
        } else if (it == t.coeffs.end()) {
          t.coeffs.emplace(c, std::move(nv));
          col_rows[static_cast<std::size_t>(c)].insert(r);
        } else {
          it->second = std::move(nv);
        }
      }
      if (!p.rhs.is_zero()) t.rhs -= f * p.rhs;
    }
    for (const auto& [c, x] : p.coeffs) col_rows[static_cast<std::size_t>(c)].erase(best_row);
  }
  std::vector<RatQZ> x(unknowns);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Row& p = rows[it->first];
    RatQZ v = p.rhs;
    for (const auto& [c, a] : p.coeffs)
      if (c != it->second && !x[static_cast<std::size_t>(c)].is_zero()) v -= a * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(it->second)] = std::move(v);
  }
  return x;
}

}  // namespace detail

/// Normalisation conditions: (block, a, i, value) meaning the coefficient of
/// |a>(x)|nu-a> in R(|i>(x)|nu-i>) equals value. One per sector.
struct RNormalization {
  FockIndex a, b, i, j;
  RatQZ value;
};

inline std::vector<RNormalization> r_normalizations(const Algebra& alg) {
  FockIndex o = FockIndex::zero(alg.n), e = FockIndex::unit(alg.n, 1);
  std::vector<RNormalization> out{{o, o, o, o, RatQZ(1)}};
  if (alg.kind != AlgebraKind::C1) return out;
  RatQZ one_minus_z = RatQZ(1) - RatQZ::z();
  RatQZ mixed = RatQZ(-RatQ::i() * RatQ::u_power(1)) / one_minus_z;
  out.push_back({o, e, o, e, mixed});
  out.push_back({e, o, e, o, mixed});
  RatQZ q2 = RatQZ(RatQ::q_power(2));
  out.push_back({e, e, e, e, (RatQZ::z() - q2) / (RatQZ(1) - RatQZ::z() * q2)});
  return out;
}

/// Solve the intertwining relations for all blocks with |nu| <= max_degree.
/// Relations for e_r, f_r are kept when both blocks they touch are in range;
/// the k_r relations are built in through block structure (and, for C1, the
/// parity sectors). Uniqueness is certified: the homogeneous system must have
/// rank = unknowns - (number of normalisations), and every kept relation is
/// re-checked exactly on the solution.
inline RMatrix solve_r(const Algebra& alg, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  cartan_matrix(alg);
  const int n = alg.n;
  const bool sectors = alg.kind == AlgebraKind::C1;
  RMatrix R;
  R.alg = alg;
  R.max_degree = max_degree;
  // Unknown numbering.
  std::map<std::tuple<FockIndex, int, int>, int> var;
  for (const auto& nu : enumerate_window(n, max_degree)) {
    RMatrixBlock blk;
    blk.nu = nu;
    blk.basis = split_pairs(nu);
    const std::size_t d = blk.basis.size();
    blk.matrix.assign(d, std::vector<RatQZ>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (sectors && blk.basis[r].first.parity() != blk.basis[c].first.parity()) continue;
        var.emplace(std::tuple{nu, static_cast<int>(r), static_cast<int>(c)}, static_cast<int>(var.size()));
      }
    R.blocks.emplace(nu, std::move(blk));
  }
  const std::size_t N = var.size();
  R.unknowns = N;
  auto var_of = [&](const FockIndex& nu, int r, int c) -> std::optional<int> {
    auto it = var.find(std::tuple{nu, r, c});
    if (it == var.end()) return std::nullopt;
    return it->second;
  };

  // Delta'(g) R = R Delta(g), component <c,d| of the image of |i,j>.
  std::vector<detail::Row> rows;
  for (int r = 0; r <= n; ++r)
    for (GenType t : {GenType::E, GenType::F}) {
      Generator g{t, r};
      auto shift = detail::generator_shift(alg, g);
      for (const auto& [nu, blk] : R.blocks) {
        auto nu2 = detail::shifted_block(nu, shift);
        if (!nu2 || nu2->degree() > max_degree) continue;
        const auto& blk2 = R.blocks.at(*nu2);
        for (std::size_t col = 0; col < blk.basis.size(); ++col) {
          std::vector<std::map<int, RatQZ>> eq(blk2.basis.size());
          auto add = [&](std::size_t out, int v, const RatQZ& x) {
            auto [it, fresh] = eq[out].emplace(v, x);
            if (!fresh) {
              it->second += x;
              if (it->second.is_zero()) eq[out].erase(it);
            }
          };
          // Delta'(g) applied to R|i,j> = sum_ab R[ab][ij] |a,b>.
          for (std::size_t row = 0; row < blk.basis.size(); ++row) {
            auto v = var_of(nu, static_cast<int>(row), static_cast<int>(col));
            if (!v) continue;
            const auto& [a, b] = blk.basis[row];
            for (const auto& term : coproduct_terms(alg, g, Coproduct::DeltaOp, a.concat(b))) {
              int out = blk2.position(term.target.slice(0, n));
              add(static_cast<std::size_t>(out), *v, RatQZ(term.coeff) * RatQZ::z_power(term.zpow));
            }
          }
          // - R applied to Delta(g)|i,j>.
          const auto& [i, j] = blk.basis[col];
          for (const auto& term : coproduct_terms(alg, g, Coproduct::Delta, i.concat(j))) {
            int in = blk2.position(term.target.slice(0, n));
            RatQZ x = -(RatQZ(term.coeff) * RatQZ::z_power(term.zpow));
            for (std::size_t out = 0; out < blk2.basis.size(); ++out)
              if (auto v = var_of(*nu2, static_cast<int>(out), in)) add(out, *v, x);
          }
          for (auto& e : eq)
            if (!e.empty()) rows.push_back({std::move(e), RatQZ()});
        }
      }
    }
  const std::size_t homogeneous = rows.size();

  auto norms = r_normalizations(alg);
  std::vector<detail::Row> norm_rows;
  for (const auto& nm : norms) {
    FockIndex nu = nm.a + nm.b;
    if (nu.degree() > max_degree) continue;
    const auto& blk = R.blocks.at(nu);
    auto v = var_of(nu, blk.position(nm.a), blk.position(nm.i));
    if (!v) throw std::logic_error("normalisation outside the unknowns");
    norm_rows.push_back({{{*v, RatQZ(1)}}, nm.value});
  }
  const std::size_t K = norm_rows.size();

  // Rank of the homogeneous part (mod p; a lower bound for the true rank).
  auto hom_rows = detail::independent_rows(rows, N);
  R.rank = hom_rows.size();
  if (R.rank + K < N)
    throw SolveError("rank deficiency: " + std::to_string(N - R.rank) + " free parameters for " +
                     std::to_string(K) + " normalisations");
  if (R.rank + K > N) throw SolveError("inconsistent system: homogeneous rank exceeds unknowns - normalisations");

  std::vector<detail::Row> square = norm_rows;
  for (std::size_t r : hom_rows) square.push_back(rows[r]);
  auto chosen = detail::independent_rows(square, N);
  if (chosen.size() != N) throw SolveError("normalisations are not independent of the relations");
  auto x = detail::solve_square(std::move(square), N);

  // Every relation, including the ones not used in the solve, must hold.
  for (std::size_t r = 0; r < homogeneous; ++r) {
    RatQZ acc;
    for (const auto& [c, a] : rows[r].coeffs)
      if (!x[static_cast<std::size_t>(c)].is_zero()) acc += a * x[static_cast<std::size_t>(c)];
    if (!acc.is_zero()) throw SolveError("solution violates an intertwining relation");
  }
  for (const auto& [key, v] : var) {
    const auto& [nu, r, c] = key;
    R.blocks.at(nu).matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(v)];
  }
  return R;
}

enum class GaugeDirection { Forward, Inverse };

/// R~ = (K^-1 (x) 1) R (1 (x) K) with K|m> = (-i q^(1/2))^{|m|} |m>: entry
/// (a,b;i,j) is multiplied by (-i q^(1/2))^{|j|-|a|} (inverse: the reciprocal).
inline RMatrix gauge_transform(const RMatrix& R, GaugeDirection dir) {
  RMatrix out = R;
  const RatQ g = -RatQ::i() * RatQ::u_power(1);
  for (auto& [nu, blk] : out.blocks)
    for (std::size_t r = 0; r < blk.basis.size(); ++r)
      for (std::size_t c = 0; c < blk.basis.size(); ++c) {
        auto& x = blk.matrix[r][c];
        if (x.is_zero()) continue;
        int e = blk.basis[c].second.degree() - blk.basis[r].first.degree();
        if (dir == GaugeDirection::Inverse) e = -e;
        if (e != 0) x *= RatQZ(pow(g, e));
      }
  return out;
}

/// (s, t) of the S matrix that corresponds to the algebra.
inline std::pair<int, int> matching_st(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::D2: return {1, 1};
    case AlgebraKind::A2: return {1, 2};
    case AlgebraKind::C1: return {2, 2};
  }
  return {1, 1};
}

/// Every gauged R entry against the matching S entry: num = den * S as
/// z-series to order zmax. For C1 the sector of an entry is (parity|a|,
/// parity|b|) on both sides, and the four normalisation values are checked
/// against S first.
inline Report check_theorem(const Algebra& alg, int max_degree, int zmax, int jobs = 1) {
  RMatrix R = gauge_transform(solve_r(alg, max_degree), GaugeDirection::Forward);
  auto [s, t] = matching_st(alg.kind);
  SMatrix S = build_s_matrix(s, t, alg.n, max_degree, zmax, jobs);
  Report rep;
  rep.target = "theorem";
  for (const auto& [nu, blk] : R.blocks)
    for (std::size_t r = 0; r < blk.basis.size(); ++r)
      for (std::size_t c = 0; c < blk.basis.size(); ++c) {
        const auto& [a, b] = blk.basis[r];
        const auto& [i, j] = blk.basis[c];
        const RatQZ& x = blk.matrix[r][c];
        auto it = S.entries.find({a, b, i, j});
        ZSeries sv = it == S.entries.end() ? ZSeries(zmax) : it->second;
        ZSeries lhs = ZSeries::from_poly(x.num(), zmax);
        ZSeries rhs = ZSeries::from_poly(x.den(), zmax) * sv;
        ++rep.checked;
        if (!(lhs == rhs))
          rep.failures.push_back({join_tuple({&a.m, &b.m, &i.m, &j.m}), to_string(x),
                                  join_strings(to_strings(sv))});
      }
  return rep;
}

/// Yang-Baxter equation for R (or its gauge transform) on the triple window.
/// For C1 every triple of sectors is checked separately.
inline Report verify_yber(const Algebra& alg, int max_degree, int zmax, bool gauged = false, int jobs = 1) {
  RMatrix R = solve_r(alg, max_degree);
  if (gauged) R = gauge_transform(R, GaugeDirection::Forward);
  SeriesEntry entry = [&R, zmax](const FockIndex& a, const FockIndex& b, const FockIndex& i, const FockIndex& j) {
    return ZSeries::from_ratqz(R.entry(a, b, i, j), zmax);
  };
  std::string target = gauged ? "yber-gauged" : "yber";
  if (alg.kind != AlgebraKind::C1) return verify_ybe(target, alg.n, max_degree, zmax, entry, nullptr, jobs);
  Report rep;
  rep.target = target;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      for (int e3 : {1, -1})
        rep.merge(verify_ybe(
            target, alg.n, max_degree, zmax, entry,
            [=](const FockIndex& i1, const FockIndex& i2, const FockIndex& i3) {
              return i1.parity() == e1 && i2.parity() == e2 && i3.parity() == e3;
            },
            jobs));
  return rep;
}

/// Blocks as [{algebra, n, nu, basis: [[a, b], ...], entries: [[...], ...]}].
inline nlohmann::json to_json(const RMatrix& R) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [nu, blk] : R.blocks) {
    nlohmann::json basis = nlohmann::json::array(), entries = nlohmann::json::array();
    for (const auto& [a, b] : blk.basis) basis.push_back({a.m, b.m});
    for (const auto& row : blk.matrix) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      entries.push_back(std::move(r));
    }
    out.push_back({{"algebra", algebra_name(R.alg.kind)},
                   {"n", R.alg.n},
                   {"nu", nu.m},
                   {"basis", std::move(basis)},
                   {"entries", std::move(entries)}});
  }
  return out;
}

}  // namespace tetra

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "tetra/intertwiner.hpp"
#include "tetra/reduction.hpp"
#include "tetra/threedr.hpp"
#include "tetra/uqalg.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace tetra;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  void report(const Report& r, const std::string& what) {
    detail << " " << what << "=" << r.checked;
    if (!r.passed()) {
      const auto& f = r.failures.front();
      std::vector<std::string> t;
      for (int x : f.tuple) t.push_back(std::to_string(x));
      require(false, what + " " + std::to_string(r.failures.size()) + " failures, first " + join_strings(t));
    }
    if (r.checked == 0) require(false, what + " checked nothing");
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << " (" << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s)" << o.detail.str() << std::endl;
}

FockIndex f1(int v) { return FockIndex{v}; }

struct TheoremConfig {
  Algebra alg;
  int degree;
};

const std::vector<TheoremConfig> kTheoremConfigs = {
    {{AlgebraKind::D2, 1}, 4}, {{AlgebraKind::D2, 2}, 3}, {{AlgebraKind::A2, 1}, 4}, {{AlgebraKind::C1, 1}, 4}};

std::string label(const Algebra& a) { return algebra_name(a.kind) + "/n" + std::to_string(a.n); }

}  // namespace

int main() {
  const int jobs = 4;

  criterion(1, "tetrahedron equation, input degree <= 4", [&](Outcome& o) {
    o.report(verify_tetrahedron(4, jobs), "tuples");
  });

  criterion(2, "weight symmetry of the 3d R, degree <= 5", [&](Outcome& o) {
    o.report(verify_weight_symmetry(5), "entries");
  });

  criterion(3, "boundary eigenrelations s = 1, 2, degree <= 4", [&](Outcome& o) {
    for (int s : {1, 2})
      for (auto side : {BoundarySide::Bra, BoundarySide::Ket})
        o.report(verify_boundary_eigenrelation(s, side, 4),
                 "s" + std::to_string(s) + (side == BoundarySide::Bra ? "bra" : "ket"));
  });

  criterion(4, "n = 1 closed form, spot values and z = 1", [&](Outcome& o) {
    const int Z = 8;
    int checked = 0;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int i = 0; i <= 4; ++i) {
          int j = a + b - i;
          if (j < 0 || j > 4) continue;
          ++checked;
          o.require(s_element(1, 1, f1(a), f1(b), f1(i), f1(j), Z) == ZSeries::from_ratqz(s_closed_n1(a, b, i, j), Z),
                    "series " + std::to_string(a) + std::to_string(b) + std::to_string(i) + std::to_string(j));
        }
    o.detail << " entries=" << checked;
    o.require(s_closed_n1(1, 0, 1, 0) == parse_ratqz("(1 - z)/(1 + q*z)"), "spot (1-z)/(1+qz)");
    o.require(s_closed_n1(0, 1, 1, 0) == parse_ratqz("(1 + q)/(1 + q*z)"), "spot (1+q)/(1+qz)");
    o.require(s_element(1, 1, f1(1), f1(0), f1(1), f1(0), Z) ==
                  ZSeries::from_ratqz(parse_ratqz("(1 - z)/(1 + q*z)"), Z),
              "spot series");
    int at_one = 0;
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b)
        for (int i = 0; i <= 5; ++i) {
          int j = a + b - i;
          if (j < 0 || j > 5) continue;
          ++at_one;
          RatQ expect = (a == j && b == i) ? RatQ(1) : RatQ();
          o.require(s_closed_n1(a, b, i, j).eval(RatQ(1)) == expect, "z=1 at " + std::to_string(a) + std::to_string(b) +
                                                                         std::to_string(i) + std::to_string(j));
        }
    o.detail << " z1=" << at_one;
  });

  criterion(5, "defining relations incl. Serre, all algebras, n = 1..3, degree <= 6", [&](Outcome& o) {
    for (auto kind : {AlgebraKind::D2, AlgebraKind::A2, AlgebraKind::C1})
      for (int n = 1; n <= 3; ++n) {
        Algebra alg{kind, n};
        o.report(verify_relations(alg, 6), label(alg));
      }
  });

  criterion(6, "normalisation values from the solver", [&](Outcome& o) {
    const int Z = 6;
    for (const auto& cfg : kTheoremConfigs) {
      RMatrix R = solve_r(cfg.alg, cfg.degree);
      RMatrix G = gauge_transform(R, GaugeDirection::Forward);
      auto [s, t] = matching_st(cfg.alg.kind);
      for (const auto& nm : r_normalizations(cfg.alg)) {
        std::string where = label(cfg.alg) + " " + to_string(nm.a) + to_string(nm.b);
        o.require(R.entry(nm.a, nm.b, nm.i, nm.j) == nm.value, where + " solver value");
        // The gauged value must agree with the contraction built independently.
        RatQZ g = G.entry(nm.a, nm.b, nm.i, nm.j);
        o.require(ZSeries::from_ratqz(g, Z) == s_element(s, t, nm.a, nm.b, nm.i, nm.j, Z), where + " against S");
      }
    }
    const auto c1 = r_normalizations({AlgebraKind::C1, 1});
    o.require(c1.size() == 4, "four C1 normalisations");
    o.require(c1.size() == 4 && c1[1].value == parse_ratqz("-i*q^(1/2)/(1 - z)") &&
                  c1[2].value == parse_ratqz("-i*q^(1/2)/(1 - z)") &&
                  c1[3].value == parse_ratqz("(z - q^2)/(1 - z*q^2)") && c1[0].value == RatQZ(1),
              "stated values");
  });

  criterion(7, "gauged R equals S order by order, Z_max = 6", [&](Outcome& o) {
    for (const auto& cfg : kTheoremConfigs) o.report(check_theorem(cfg.alg, cfg.degree, 6, jobs), label(cfg.alg));
    // Each C1 parity sector contributes.
    RMatrix R = solve_r({AlgebraKind::C1, 1}, 4);
    std::map<std::pair<int, int>, int> sectors;
    for (const auto& [nu, blk] : R.blocks)
      for (std::size_t r = 0; r < blk.basis.size(); ++r)
        for (std::size_t c = 0; c < blk.basis.size(); ++c)
          if (!blk.matrix[r][c].is_zero()) ++sectors[{blk.basis[r].first.parity(), blk.basis[r].second.parity()}];
    o.require(sectors.size() == 4, "all four C1 sectors populated");
  });

  criterion(8, "Yang-Baxter for S (s,t) = (1,1), (1,2) and for gauged R", [&](Outcome& o) {
    const int Z = 6;
    o.report(verify_sybe(1, 1, 1, 2, Z, jobs), "S11");
    o.report(verify_sybe(1, 2, 1, 2, Z, jobs), "S12");
    o.report(verify_yber({AlgebraKind::D2, 1}, 2, Z, true, jobs), "R~d2");
    // All eight C1 sector triples, (+,+,+) among them.
    o.report(verify_yber({AlgebraKind::C1, 1}, 2, Z, true, jobs), "R~c1");
  });

  criterion(9, "transpose relation with S^{2,1}, n = 1, 2", [&](Outcome& o) {
    o.report(verify_s21(1, 3, 6), "n1");
    o.report(verify_s21(2, 3, 6), "n2");
  });

  criterion(10, "w-recursions, n = 2, l <= 6", [&](Outcome& o) {
    for (auto kind : {AlgebraKind::D2, AlgebraKind::A2, AlgebraKind::C1}) {
      Algebra alg{kind, 2};
      o.report(verify_w_recursions(alg, 6), label(alg));
    }
    // The two-step coefficient needs the 1/[2]; the bare q^-2 fails once l - k >= 2.
    auto printed = verify_w_recursions({AlgebraKind::A2, 2}, 6, TwoStepCoefficient::AsPrinted);
    o.detail << " (bare q^-2 coefficient: " << printed.failures.size() << " failures)";
  });

  criterion(11, "solver uniqueness: nullity equals normalisation count", [&](Outcome& o) {
    for (const auto& cfg : kTheoremConfigs) {
      RMatrix R = solve_r(cfg.alg, cfg.degree);
      std::size_t K = 0;
      for (const auto& nm : r_normalizations(cfg.alg))
        if ((nm.a + nm.b).degree() <= cfg.degree) ++K;
      o.detail << " " << label(cfg.alg) << ":" << R.unknowns << "-" << R.rank << "=" << K;
      o.require(R.unknowns - R.rank == K, label(cfg.alg) + " nullity");
    }
  });

  std::cout << (failures ? "acceptance: FAIL (" + std::to_string(failures) + " criteria)" : "acceptance: PASS")
            << std::endl;
  return failures ? 1 : 0;
}

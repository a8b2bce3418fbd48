#include "tetra/reduction.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace tetra;

namespace {

FockIndex f1(int v) { return FockIndex{v}; }

// 1 / (1 + c z) expanded directly: sum (-c z)^k.
ZSeries geometric(const RatQ& c, int order) {
  ZSeries s(order);
  RatQ p(1);
  for (int k = 0; k <= order; ++k) {
    s[k] = p;
    p *= -c;
  }
  return s;
}

ZSeries linear(const RatQ& c0, const RatQ& c1, int order) {
  ZSeries s(order);
  s[0] = c0;
  if (order >= 1) s[1] = c1;
  return s;
}

}  // namespace

TEST(Reduction, SpotValuesN1) {
  const int Z = 8;
  RatQ q = RatQ::q_power(1);
  EXPECT_EQ(s_element(1, 1, f1(0), f1(0), f1(0), f1(0), Z), ZSeries::one(Z));
  // (1 - z) / (1 + q z)
  EXPECT_EQ(s_element(1, 1, f1(1), f1(0), f1(1), f1(0), Z), linear(RatQ(1), RatQ(-1), Z) * geometric(q, Z));
  // (1 + q) / (1 + q z)
  EXPECT_EQ(s_element(1, 1, f1(0), f1(1), f1(1), f1(0), Z), geometric(q, Z).scaled(RatQ(1) + q));
  EXPECT_EQ(s_closed_n1(1, 0, 1, 0), parse_ratqz("(1 - z)/(1 + q*z)"));
  EXPECT_EQ(s_closed_n1(0, 1, 1, 0), parse_ratqz("(1 + q)/(1 + q*z)"));
}

TEST(Reduction, ConservationViolatedIsZero) {
  for (int s : {1, 2})
    EXPECT_TRUE(s_element(s, 2, f1(1), f1(1), f1(0), f1(1), 5).is_zero());
  EXPECT_TRUE(s_closed_n1(2, 0, 0, 1).is_zero());
}

TEST(Reduction, LowestTermsFor22) {
  EXPECT_EQ(s_element_raw(2, 2, f1(0), f1(1), f1(0), f1(1), 0)[0], -RatQ::q_power(1));
  EXPECT_EQ(s_element_raw(2, 2, f1(1), f1(1), f1(1), f1(1), 0)[0], -RatQ::q_power(2));
  EXPECT_EQ(s_element_raw(1, 1, f1(0), f1(0), f1(0), f1(0), 0)[0], RatQ(1));
}

TEST(Reduction, ClosedFormMatchesContraction) {
  const int Z = 8;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int i = 0; i <= 4; ++i) {
        int j = a + b - i;
        if (j < 0 || j > 4) continue;
        EXPECT_EQ(s_element(1, 1, f1(a), f1(b), f1(i), f1(j), Z), ZSeries::from_ratqz(s_closed_n1(a, b, i, j), Z))
            << a << b << i << j;
      }
}

TEST(Reduction, TranspositionLawOnSeries) {
  const int Z = 8;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int i = 0; i <= a; ++i) {
        int j = a + b - i;
        if (j < 0 || j > 4) continue;
        RatQ ratio = RatQ(pochhammer_q2(i) * pochhammer_q2(j)) / RatQ(pochhammer_q2(a) * pochhammer_q2(b));
        EXPECT_EQ(s_element(1, 1, f1(a), f1(b), f1(i), f1(j), Z),
                  s_element(1, 1, f1(i), f1(j), f1(a), f1(b), Z).scaled(ratio).shifted(a - i));
      }
}

TEST(Reduction, ClosedFormAtUnitSpectralParameter) {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int i = 0; i <= 5; ++i) {
        int j = a + b - i;
        if (j < 0 || j > 5) continue;
        RatQ expect = (a == j && b == i) ? RatQ(1) : RatQ();
        EXPECT_EQ(s_closed_n1(a, b, i, j).eval(RatQ(1)), expect) << a << b << i << j;
      }
}

TEST(Reduction, ParityConstraintAndSectors) {
  auto m = build_s_matrix(2, 2, 1, 2, 4);
  auto sectors = decompose_parity(m);
  ASSERT_EQ(sectors.size(), 4u);
  std::size_t total = 0;
  for (const auto& [eps, sub] : sectors) {
    total += sub.entries.size();
    for (const auto& [key, v] : sub.entries) {
      const auto& [a, b, i, j] = key;
      EXPECT_EQ(a.parity(), eps.first);
      EXPECT_EQ(b.parity(), eps.second);
      EXPECT_EQ(a.parity(), i.parity());
    }
  }
  EXPECT_EQ(total, m.entries.size());
  EXPECT_TRUE(s_element_raw(2, 2, f1(1), f1(0), f1(0), f1(1), 6).is_zero());
  EXPECT_TRUE(sectors.count({1, 1}) && sectors.at({1, 1}).entries.count({f1(0), f1(0), f1(0), f1(0)}));
  EXPECT_THROW(decompose_parity(build_s_matrix(1, 1, 1, 1, 2)), std::invalid_argument);
}

TEST(Reduction, TransposeRelation) {
  for (int n : {1, 2}) {
    auto rep = verify_s21(n, n == 1 ? 3 : 2, 6);
    EXPECT_TRUE(rep.passed()) << n;
    EXPECT_GT(rep.checked, 0u);
  }
}

TEST(Reduction, YangBaxter) {
  for (auto [s, t] : {std::pair{1, 1}, std::pair{1, 2}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = verify_sybe(s, t, 1, 2, 4);
    std::cout << "sybe " << s << t << " checked " << rep.checked << " in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
    EXPECT_TRUE(rep.passed()) << (rep.failures.empty() ? "" : rep.failures[0].lhs + " vs " + rep.failures[0].rhs);
  }
}

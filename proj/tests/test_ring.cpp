#include "tetra/ring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tetra;

namespace {

// Small random scalars; every generator draws from one seeded engine.
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  GaussianRational gq() {
    return GaussianRational(mpq_class(range(-4, 4), range(1, 3)), mpq_class(range(0, 3) ? 0 : range(-2, 2), range(1, 2)));
  }
  GaussianRational nonzero_gq() {
    for (;;)
      if (auto c = gq(); !c.is_zero()) return c;
  }
  HalfLaurent laurent(int terms = 3) {
    HalfLaurent h;
    for (int k = 0; k < terms; ++k) h = h + HalfLaurent::monomial(gq(), range(-3, 4));
    return h;
  }
  HalfLaurent nonzero_laurent() {
    for (;;)
      if (auto h = laurent(); !h.is_zero()) return h;
  }
  RatQ ratq() { return RatQ(laurent(), nonzero_laurent()); }
  RatQ nonzero_ratq() { return RatQ(nonzero_laurent(), nonzero_laurent()); }
  // Polynomial coefficients keep the bivariate gcds cheap.
  ZPoly zpoly(int max_degree) {
    std::vector<RatQ> c;
    for (int k = 0; k <= max_degree; ++k) c.push_back(range(0, 2) ? RatQ(laurent(2)) : RatQ());
    return ZPoly::from_coeffs(std::move(c));
  }
  // Denominator regular at z = 0; sometimes constant in z.
  RatQZ ratqz() {
    std::vector<RatQ> c = zpoly(range(0, 1)).coeffs();
    if (c.empty()) c.push_back(RatQ());
    if (c[0].is_zero()) c[0] = RatQ(nonzero_laurent());
    return RatQZ(zpoly(2), ZPoly::from_coeffs(std::move(c)));
  }
};

RatQ Q(int e) { return RatQ::q_power(e); }

// (a; p)_n by direct multiplication.
RatQ poch(const RatQ& a, const RatQ& p, int n) {
  RatQ r(1), x = a;
  for (int k = 0; k < n; ++k, x *= p) r *= RatQ(1) - x;
  return r;
}

}  // namespace

TEST(GaussianRationalTest, FieldLaws) {
  Gen g(1);
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  for (int k = 0; k < 200; ++k) {
    auto a = g.gq(), b = g.gq(), c = g.nonzero_gq();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(c * c.inverse(), GaussianRational(1));
    EXPECT_EQ(a - a, GaussianRational());
  }
}

TEST(HalfLaurentTest, RingLaws) {
  Gen g(2);
  for (int k = 0; k < 100; ++k) {
    auto a = g.laurent(), b = g.laurent(), c = g.laurent();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
  EXPECT_EQ(HalfLaurent::u_power(1) * HalfLaurent::u_power(1), HalfLaurent::q_power(1));
  EXPECT_EQ(HalfLaurent::q_power(-2) * HalfLaurent::q_power(2), HalfLaurent(1));
}

TEST(RatQTest, FieldLawsAndCanonicalForm) {
  Gen g(3);
  for (int k = 0; k < 100; ++k) {
    auto a = g.ratq(), b = g.ratq(), c = g.nonzero_ratq();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * c) / c, a);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ(c * c.inverse(), RatQ(1));
    // Canonical: equal values print identically.
    EXPECT_EQ(to_string((a * c) / c), to_string(a));
  }
  EXPECT_EQ(to_string(Q(-1) + Q(1)), "q^(-1) + q");
  EXPECT_EQ((Q(2) - RatQ(1)) / (Q(1) - RatQ(1)), Q(1) + RatQ(1));
}

TEST(RatQZTest, FieldLawsAndCanonicalForm) {
  Gen g(4);
  for (int k = 0; k < 40; ++k) {
    auto a = g.ratqz(), b = g.ratqz(), c = g.ratqz();
    if (c.is_zero()) continue;
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * c) / c, a);
    EXPECT_EQ(a - a, RatQZ());
    EXPECT_EQ(to_string((a * c) / c), to_string(a));
  }
}

TEST(RatQZTest, DenominatorDependingOnlyOnQ) {
  // (-1 - q^2) * 1/(1 + q^2) must reduce to -1.
  RatQZ d = RatQZ(Q(2) + RatQ(1)).inverse();
  RatQZ x = d * RatQZ(-(Q(2) + RatQ(1)));
  EXPECT_EQ(x, RatQZ(-1));
  EXPECT_EQ(to_string(x), "-1");
  // Its series must divide by the q-dependent constant.
  RatQZ y = RatQZ::z() * d;
  EXPECT_EQ(ZSeries::from_ratqz(y, 2)[1], (Q(2) + RatQ(1)).inverse());
}

TEST(RatQZTest, ZPowersAndEvaluation) {
  RatQZ z = RatQZ::z();
  EXPECT_EQ(RatQZ::z_power(-2) * z * z, RatQZ(1));
  RatQZ f = (RatQZ(1) - z) / (RatQZ(1) + RatQZ(Q(1)) * z);
  EXPECT_EQ(f.eval(RatQ(1)), RatQ());
  EXPECT_EQ(f.eval(RatQ()), RatQ(1));
  // At u = 2 (q = 4), z = 1/2: (1/2)/(3) = 1/6.
  EXPECT_EQ(f.eval(GaussianRational(2), GaussianRational::fraction(1, 2)), GaussianRational::fraction(1, 6));
}

TEST(ZSeriesTest, AgreesWithRationalFunctions) {
  Gen g(5);
  const int N = 4;
  for (int k = 0; k < 30; ++k) {
    auto a = g.ratqz(), b = g.ratqz();
    auto sa = ZSeries::from_ratqz(a, N), sb = ZSeries::from_ratqz(b, N);
    // Oracle: den * series == num.
    EXPECT_EQ(sa * ZSeries::from_poly(a.den(), N), ZSeries::from_poly(a.num(), N));
    EXPECT_EQ(ZSeries::from_ratqz(a + b, N), sa + sb);
    EXPECT_EQ(ZSeries::from_ratqz(a * b, N), sa * sb);
    if (sb.invertible()) {
      EXPECT_EQ(ZSeries::from_ratqz(a / b, N), sa * sb.inverse());
    }
  }
}

TEST(ZSeriesTest, GeometricSeries) {
  // 1/(1 - c z) = sum c^k z^k.
  RatQ c = Q(1) + RatQ(2);
  auto s = ZSeries::from_ratqz(RatQZ(1) / (RatQZ(1) - RatQZ(c) * RatQZ::z()), 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(s[k], pow(c, k));
  auto t = ZSeries::one(6).shifted(2).substitute_power(2);
  EXPECT_EQ(t[4], RatQ(1));
  EXPECT_EQ(t[2], RatQ());
}

TEST(QCombinatorics, NumbersAndFactorials) {
  EXPECT_EQ(q_number(3), Q(-2) + RatQ(1) + Q(2));
  EXPECT_EQ(q_number(0), RatQ());
  EXPECT_EQ(q_factorial(3), q_number(2) * q_number(3));
  EXPECT_EQ(kappa() * (Q(1) - RatQ(1)), Q(1) + RatQ(1));
  EXPECT_EQ(q_pochhammer(QPower::q(2), 2), (RatQ(1) - Q(2)) * (RatQ(1) - Q(4)));
  EXPECT_EQ(q_number(2, QPower::sqrt_q()), RatQ::u_power(1) + RatQ::u_power(-1));
}

TEST(QCombinatorics, BinomialPascalAndTheorem) {
  for (int half : {1, 2, 4}) {
    QPower p{half};
    RatQ pq = RatQ::u_power(half);
    for (int m = 1; m <= 7; ++m)
      for (int k = 1; k < m; ++k)
        EXPECT_EQ(q_binomial(m, k, p), q_binomial(m - 1, k - 1, p) + pow(pq, k) * q_binomial(m - 1, k, p));
    // prod_{j<m} (1 + p^j z) = sum_k p^{k(k-1)/2} [m,k]_p z^k.
    const int m = 5;
    ZSeries prod = ZSeries::one(m);
    for (int j = 0; j < m; ++j) {
      ZSeries f(m);
      f[0] = RatQ(1);
      f[1] = pow(pq, j);
      prod *= f;
    }
    for (int k = 0; k <= m; ++k) EXPECT_EQ(prod[k], pow(pq, k * (k - 1) / 2) * q_binomial(m, k, p));
  }
}

TEST(QCombinatorics, NormalisationSeriesMatchBinomialTheorem) {
  // (a w; p)_inf / (w; p)_inf = sum_n (a; p)_n / (p; p)_n w^n.
  const int N = 6;
  auto oracle = [&](const RatQ& a, const RatQ& p, const RatQ& c, int zpow) {
    ZSeries s(N);
    for (int n = 0; n * zpow <= N; ++n) s[n * zpow] = poch(a, p, n) / poch(p, p, n) * pow(c, n);
    return s;
  };
  // (z; q)/(-qz; q): w = -q z, a = -1/q.
  EXPECT_EQ(infinite_pochhammer_ratio_series(Normalization::S11, N), oracle(-Q(-1), Q(1), -Q(1), 1));
  // (z^2; q^2)/(-q z^2; q^2).
  EXPECT_EQ(infinite_pochhammer_ratio_series(Normalization::S12, N), oracle(-Q(-1), Q(2), -Q(1), 2));
  // (z; q^4)/(q^2 z; q^4).
  EXPECT_EQ(infinite_pochhammer_ratio_series(Normalization::SectorEqual, N), oracle(Q(-2), Q(4), Q(2), 1));
  // (q^2 z; q^4)/(z; q^4).
  EXPECT_EQ(infinite_pochhammer_ratio_series(Normalization::SectorMixed, N), oracle(Q(2), Q(4), RatQ(1), 1));
  EXPECT_EQ(sector_normalization(-1, -1), Normalization::SectorEqual);
  EXPECT_EQ(parse_normalization("+-"), Normalization::SectorMixed);
  EXPECT_THROW(parse_normalization("xx"), std::invalid_argument);
}

TEST(Text, ParseRoundTrip) {
  for (const char* s : {"(1 - z)/(1 + q*z)", "(-q^2 + z)/(1 - q^2*z)", "-i*q^(1/2)/(1 - z)", "(-1 - q)/(1 - q)",
                        "q^(-1) + q", "0", "1", "3/2*i", "z^3"}) {
    RatQZ f = parse_ratqz(s);
    EXPECT_EQ(to_string(f), s);
    EXPECT_EQ(parse_ratqz(to_string(f)), f);
  }
  EXPECT_EQ(parse_ratqz("(z - q^2)/(1 - z*q^2)"), parse_ratqz("(-q^2 + z)/(1 - q^2*z)"));
  Gen g(6);
  for (int k = 0; k < 40; ++k) {
    RatQZ f = g.ratqz();
    EXPECT_EQ(parse_ratqz(to_string(f)), f) << to_string(f);
  }
  EXPECT_THROW(parse_ratqz("(1 + "), std::invalid_argument);
  EXPECT_THROW(parse_ratq("1 + z"), std::invalid_argument);
}

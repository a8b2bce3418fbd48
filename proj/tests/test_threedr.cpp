#include "tetra/threedr.hpp"

#include <gtest/gtest.h>

using namespace tetra;

namespace {

HalfLaurent q(int e) { return HalfLaurent::q_power(e); }

}  // namespace

TEST(ThreeDR, SpotValues) {
  EXPECT_EQ(r_element(0, 0, 0, 0, 0, 0), HalfLaurent(1));
  EXPECT_EQ(r_element(1, 0, 1, 1, 0, 1), q(1));
  EXPECT_EQ(r_element(0, 1, 0, 1, 0, 1), HalfLaurent(1) - q(2));
  EXPECT_EQ(r_element(1, 0, 1, 0, 1, 0), HalfLaurent(1));
  EXPECT_EQ(r_element(0, 1, 0, 0, 1, 0), -q(1));
}

TEST(ThreeDR, SymmetryForcesUnitEntry) {
  // (q^2)_1 (1 - q^2) = (q^2)_1 (q^2)_1 R^{101}_{010}
  HalfLaurent p1 = HalfLaurent(1) - q(2);
  EXPECT_EQ(p1 * r_element(0, 1, 0, 1, 0, 1), p1 * p1 * r_element(1, 0, 1, 0, 1, 0));
}

TEST(ThreeDR, ConservationExhaustive) {
  const int d = 6;
  for (const auto& out : enumerate_window(3, d))
    for (const auto& in : enumerate_window(3, d)) {
      bool conserving = out[0] + out[1] == in[0] + in[1] && out[1] + out[2] == in[1] + in[2];
      if (!conserving) {
        EXPECT_TRUE(r_element(out[0], out[1], out[2], in[0], in[1], in[2]).is_zero());
      }
    }
}

TEST(ThreeDR, IntegerPolynomialValues) {
  for (const auto& in : enumerate_window(3, 6))
    for (int b = 0; b <= std::min(in[0] + in[1], in[1] + in[2]); ++b) {
      HalfLaurent r = r_element(in[0] + in[1] - b, b, in[1] + in[2] - b, in[0], in[1], in[2]);
      if (r.is_zero()) continue;
      EXPECT_GE(r.low(), 0);
      EXPECT_EQ(r.low() % 2, 0);
      r.for_each_term([](int e, const GaussianRational& c) {
        EXPECT_EQ(e % 2, 0);
        EXPECT_TRUE(c.is_real());
        EXPECT_EQ(c.re().get_den(), 1);
      });
    }
}

TEST(ThreeDR, WeightSymmetry) {
  EXPECT_EQ(verify_weight_symmetry(0).checked, 1u);
  auto rep = verify_weight_symmetry(5);
  EXPECT_TRUE(rep.passed());
  std::size_t expected = 0;
  for (const auto& in : enumerate_window(3, 5)) expected += static_cast<std::size_t>(std::min(in[0] + in[1], in[1] + in[2]) + 1);
  EXPECT_EQ(rep.checked, expected);
}

TEST(ThreeDR, Tetrahedron) {
  EXPECT_TRUE(verify_tetrahedron(0).passed());
  EXPECT_TRUE(verify_tetrahedron(2).passed());
  EXPECT_TRUE(verify_tetrahedron(3, 2).passed());
}

TEST(ThreeDR, BoundaryEigenrelations) {
  for (int s : {1, 2})
    for (auto side : {BoundarySide::Ket, BoundarySide::Bra}) {
      auto rep = verify_boundary_eigenrelation(s, side, 4);
      EXPECT_TRUE(rep.passed()) << rep.target << " s=" << s;
      EXPECT_EQ(rep.checked, 35u);
    }
}

TEST(ThreeDR, CorruptedEntryIsDetected) {
  ThreeDR::shared().set_override([](const RIndex& k) -> std::optional<HalfLaurent> {
    if (k == RIndex{0, 1, 0, 1, 0, 1}) return HalfLaurent(1) - q(1);
    return std::nullopt;
  });
  EXPECT_FALSE(verify_weight_symmetry(2).passed());
  EXPECT_FALSE(verify_tetrahedron(2).passed());
  ThreeDR::shared().clear_override();
  EXPECT_TRUE(verify_tetrahedron(2).passed());
}

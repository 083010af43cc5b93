#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "genus_forge/elliptic.hpp"

namespace genus_forge {
namespace {

std::vector<EllipticCurve> small_curves(std::uint32_t max_p) {
  std::vector<EllipticCurve> out;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    if (p > max_p) break;
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        if (is_smooth(p, a, b)) out.emplace_back(p, a, b);
      }
    }
  }
  return out;
}

TEST(Elliptic, ExampleCurvePoints) {
  EllipticCurve e(5, 1, 0);
  auto pts = enumerate_points(e);
  std::vector<CurvePoint> want{CurvePoint::infinity(), e.point(0, 0), e.point(2, 0), e.point(3, 0)};
  EXPECT_EQ(pts, want);
  EXPECT_EQ(group_structure(e), (GroupStructure{2, 2}));
  EXPECT_EQ(cosets_mod_2(e), want);
  EXPECT_EQ(add(e, e.point(0, 0), e.point(0, 0)), CurvePoint::infinity());
}

TEST(Elliptic, CurveOverF3) {
  EllipticCurve e(3, 1, 0);
  // Scan: x=0 -> 0 (square), x=1 -> 2 (non-square), x=2 -> 10 = 1 (square).
  std::vector<CurvePoint> want{CurvePoint::infinity(), e.point(0, 0), e.point(2, 1), e.point(2, 2)};
  EXPECT_EQ(enumerate_points(e), want);
  EXPECT_EQ(add(e, e.point(2, 1), e.point(2, 2)), CurvePoint::infinity());
  EXPECT_EQ(add(e, e.point(2, 1), e.point(2, 1)), e.point(0, 0));
  EXPECT_EQ(group_structure(e), (GroupStructure{1, 4}));
  EXPECT_EQ(doubling_image(e), (std::vector<CurvePoint>{CurvePoint::infinity(), e.point(0, 0)}));
  EXPECT_EQ(cosets_mod_2(e), (std::vector<CurvePoint>{CurvePoint::infinity(), e.point(2, 1)}));
  EXPECT_EQ(coset_representative(e, e.point(0, 0)), CurvePoint::infinity());
  EXPECT_EQ(coset_representative(e, e.point(2, 2)), e.point(2, 1));
}

TEST(Elliptic, Errors) {
  EXPECT_THROW(EllipticCurve(5, 0, 0), std::domain_error);
  EXPECT_THROW(EllipticCurve(3, 0, 1), std::domain_error);  // -a^3 = 0 in characteristic 3
  EXPECT_THROW(EllipticCurve(9, 1, 0), std::invalid_argument);
  EllipticCurve e(5, 1, 0);
  EXPECT_THROW(e.point(1, 1), std::domain_error);
  EXPECT_THROW(add(e, CurvePoint::affine(Fp(1, 5), Fp(1, 5)), CurvePoint::infinity()), std::domain_error);
  EXPECT_EQ(add(e, e.point(2, 0), CurvePoint::infinity()), e.point(2, 0));
}

TEST(Elliptic, GroupAxiomsOnSmallCurves) {
  for (const auto& e : small_curves(11)) {
    auto pts = enumerate_points(e);
    if (pts.size() > 100) continue;
    for (const auto& pt : pts) {
      ASSERT_TRUE(e.contains(pt));
      ASSERT_EQ(add(e, pt, CurvePoint::infinity()), pt);
      ASSERT_EQ(add(e, pt, negate(e, pt)), CurvePoint::infinity());
      if (!pt.is_infinity() && pt.y().is_zero()) ASSERT_EQ(point_order(e, pt), 2u);
      for (const auto& q : pts) {
        ASSERT_EQ(add(e, pt, q), add(e, q, pt));
        for (const auto& r : pts) ASSERT_EQ(add(e, add(e, pt, q), r), add(e, pt, add(e, q, r)));
      }
    }
  }
}

TEST(Elliptic, CountsAndQuotients) {
  for (const auto& e : small_curves(13)) {
    auto pts = enumerate_points(e);
    const double n = static_cast<double>(pts.size()), p = e.p();
    EXPECT_LE(std::abs(n - (p + 1)), 2 * std::sqrt(p) + 1e-9);
    auto gs = group_structure(e);
    EXPECT_EQ(gs.order(), pts.size());
    // |C/2C| = |C[2]| = 1 + number of roots of x^3 + ax + b.
    std::size_t roots = 0;
    for (std::uint32_t x = 0; x < e.p(); ++x) roots += e.rhs().eval(Fp(x, e.p())).is_zero();
    const auto cos = cosets_mod_2(e);
    EXPECT_EQ(cos.size(), 1 + roots) << e.to_string();
    EXPECT_EQ(cos.size(), gs.mod2_order());
    EXPECT_EQ(pts.size() % cos.size(), 0u);
    EXPECT_EQ(cos.size() & (cos.size() - 1), 0u);
    EXPECT_TRUE(cos.front().is_infinity());
    EXPECT_TRUE(std::is_sorted(cos.begin(), cos.end()));
  }
}

}  // namespace
}  // namespace genus_forge

#include <gtest/gtest.h>

#include "genus_forge/poly.hpp"
#include "test_support.hpp"

namespace genus_forge {
namespace {

TEST(Poly, XgcdExamples) {
  // x and x^2+1 over F_5: one Euclidean step gives (-x)*x + 1*(x^2+1) = 1.
  Poly x(5, {0, 1}), g(5, {1, 0, 1});
  auto r = xgcd(x, g);
  EXPECT_TRUE(r.d.is_one());
  EXPECT_EQ(r.u, Poly(5, {0, -1}));
  EXPECT_EQ(r.v, Poly(5, {1}));

  auto self = xgcd(x, x);
  EXPECT_EQ(self.d, x);
  EXPECT_EQ(self.u * x + self.v * x, x);

  // x-3 and x^2+3x over F_5 are coprime: g(3) = 18 = 3 != 0.
  Poly f2(5, {-3, 1}), g2(5, {0, 3, 1});
  EXPECT_EQ(g2.eval(Fp(3, 5)), Fp(3, 5));
  auto r2 = xgcd(f2, g2);
  EXPECT_TRUE(r2.d.is_one());
  EXPECT_EQ(r2.u * f2 + r2.v * g2, Poly::constant(5, 1));

  EXPECT_THROW(xgcd(Poly(5), Poly(5)), std::domain_error);
}

TEST(Poly, XgcdIdentityRandom) {
  auto g = testing::rng(3);
  for (int i = 0; i < 1000; ++i) {
    std::uint32_t p = (i % 2) ? 5 : 7;
    Poly a = testing::random_poly(g, p, 6), b = testing::random_poly(g, p, 5);
    if (a.is_zero() && b.is_zero()) continue;
    auto r = xgcd(a, b);
    ASSERT_TRUE(r.d.is_monic());
    ASSERT_EQ(r.u * a + r.v * b, r.d);
    if (!a.is_zero()) ASSERT_TRUE((a % r.d).is_zero());
    if (!b.is_zero()) ASSERT_TRUE((b % r.d).is_zero());
  }
}

TEST(Poly, IrreducibilityExamples) {
  EXPECT_TRUE(is_irreducible(Poly(3, {1, 0, 1})));
  EXPECT_FALSE(is_irreducible(Poly(5, {1, 0, 1})));
  EXPECT_FALSE(is_irreducible(Poly(5, {0, 1, 0, 1})));
  EXPECT_THROW(is_irreducible(Poly::constant(5, 2)), std::domain_error);
}

TEST(Poly, BenOrMatchesTrialDivision) {
  for (std::uint32_t p : {3u, 5u}) {
    for (int d = 1; d <= 4; ++d) {
      for (const auto& f : monic_polys(p, d)) ASSERT_EQ(is_irreducible(f), is_irreducible_trial(f));
    }
  }
}

int mobius(int n) {
  int result = 1;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

TEST(Poly, NecklaceCounts) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int d = 1; d <= 4; ++d) {
      if (p == 7 && d == 4) continue;
      long long sum = 0;
      for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long pw = 1;
        for (int k = 0; k < d / e; ++k) pw *= p;
        sum += mobius(e) * pw;
      }
      EXPECT_EQ(static_cast<long long>(monic_irreducibles(p, d).size()), sum / d) << "p=" << p << " d=" << d;
    }
    EXPECT_EQ(monic_irreducibles(p, 2).size(), (p * p - p) / 2);
  }
}

TEST(Poly, EnumeratePlaces) {
  auto linear = enumerate_places(3, 1);
  ASSERT_EQ(linear.size(), 4u);
  EXPECT_EQ(linear[0].name(), "t");
  EXPECT_EQ(linear[1].name(), "t+1");
  EXPECT_EQ(linear[2].name(), "t+2");
  EXPECT_TRUE(linear[3].is_infinite());

  // Root sieve over all 9 monic quadratics of F_3.
  std::vector<std::string> sieved;
  for (const auto& f : monic_polys(3, 2)) {
    bool has_root = false;
    for (int r = 0; r < 3; ++r) has_root |= f.eval(Fp(r, 3)).is_zero();
    if (!has_root) sieved.push_back(to_canonical_string(f, "t"));
  }
  EXPECT_EQ(sieved, (std::vector<std::string>{"t^2+1", "t^2+t+2", "t^2+2*t+2"}));

  auto quad = enumerate_places(3, 2);
  ASSERT_EQ(quad.size(), 7u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(quad[3 + i].name(), sieved[i]);
  EXPECT_TRUE(quad.back().is_infinite());
  EXPECT_THROW(enumerate_places(3, 0), std::invalid_argument);
}

TEST(Poly, Factorization) {
  Poly f(5, {0, 1, 0, 1});  // x^3 + x = x (x-2)(x-3)
  auto fac = factor(f, 2);
  ASSERT_EQ(fac.factors.size(), 3u);
  Poly prod = Poly::constant(5, 1) * fac.unit;
  for (const auto& [q, m] : fac.factors) prod *= q.pow(static_cast<unsigned>(m));
  EXPECT_EQ(prod, f);
  EXPECT_THROW(factor(Poly(3, {1, 2, 0, 1}).pow(1) * Poly(3, {2, 1}), 1), std::domain_error);

  auto g = testing::rng(4);
  for (int i = 0; i < 200; ++i) {
    Poly h = testing::random_nonzero_poly(g, 3, 6);
    auto fh = factor(h, 6);
    Poly back = Poly::constant(3, 1) * fh.unit;
    for (const auto& [q, m] : fh.factors) {
      ASSERT_TRUE(is_irreducible(q));
      back *= q.pow(static_cast<unsigned>(m));
    }
    ASSERT_EQ(back, h);
  }
}

TEST(Poly, SquareRoots) {
  auto g = testing::rng(5);
  for (int i = 0; i < 300; ++i) {
    Poly a = testing::random_poly(g, 7, 4);
    auto r = sqrt(a * a);
    ASSERT_TRUE(r.has_value());
    ASSERT_EQ(*r * *r, a * a);
  }
  EXPECT_FALSE(sqrt(Poly(5, {0, 1})).has_value());
  EXPECT_FALSE(sqrt(Poly(3, {2})).has_value());
}

TEST(Poly, TextRoundTrip) {
  Poly f = parse_poly("2*x^2+1", 5, "x");
  EXPECT_EQ(f, Poly(5, {1, 0, 2}));
  EXPECT_EQ(parse_poly("[1,0,2]", 5, "x"), f);
  EXPECT_EQ(to_string(Poly(5, {-1, 0, -2}), "x"), "-2*x^2-1");
  EXPECT_EQ(parse_poly("-2*x^2-1", 5, "x"), Poly(5, {-1, 0, -2}));
  EXPECT_EQ(parse_poly("t - 3", 5, "t"), Poly(5, {2, 1}));
  EXPECT_EQ(to_string(Poly(5), "x"), "0");
  EXPECT_THROW(parse_poly("2*x^-1", 5, "x"), std::invalid_argument);
  EXPECT_THROW(parse_poly("2*z", 5, "x"), std::invalid_argument);
}

TEST(RatFun, InverseProduct) {
  auto g = testing::rng(6);
  for (int i = 0; i < 300; ++i) {
    RatFun a(testing::random_nonzero_poly(g, 5, 3), testing::random_nonzero_poly(g, 5, 3));
    ASSERT_TRUE(a.den().is_monic());
    RatFun one = a * a.inverse();
    ASSERT_TRUE(one.num().is_one());
    ASSERT_TRUE(one.den().is_one());
  }
  RatFun r(Poly(5, {0, 0, 1}), Poly(5, {0, 2}));  // x^2 / 2x = 3x
  EXPECT_EQ(r, RatFun(Poly(5, {0, 3})));
  EXPECT_THROW(RatFun(Poly(5, {1}), Poly(5)), std::domain_error);
}

TEST(Place, Valuations) {
  Place t = parse_place("t", 3), inf = parse_place("inf", 3);
  RatFun f(Poly(3, {0, 0, 1}), Poly(3, {1, 1}));  // t^2/(t+1)
  EXPECT_EQ(t.valuation(f), 2);
  EXPECT_EQ(inf.valuation(f), -1);
  EXPECT_THROW(parse_place("t^2+2", 3), std::invalid_argument);  // = (t-1)(t+1)
  EXPECT_TRUE(t < inf);
}

}  // namespace
}  // namespace genus_forge

#include <gtest/gtest.h>

#include <chrono>

#include "genus_forge/qlattice.hpp"
#include "test_support.hpp"

namespace genus_forge {
namespace {

LaurentElem L(const std::string& s, std::uint32_t p = 3) { return parse_laurent(s, p); }

GramMatrix<LaurentElem> laurent_diag(std::initializer_list<const char*> entries, std::uint32_t p = 3) {
  std::vector<LaurentElem> d;
  for (const char* s : entries) d.push_back(L(s, p));
  return GramMatrix<LaurentElem>::diagonal(d);
}

TEST(Gram, SymmetryIsEnforced) {
  EXPECT_THROW(GramMatrix<LaurentElem>({{L("1"), L("t")}, {L("0"), L("1")}}), std::domain_error);
}

TEST(Gram, Evaluate) {
  auto q = laurent_diag({"1", "-1", "-t"});
  EXPECT_TRUE(evaluate(q, {L("1"), L("1"), L("0")}).is_zero());
  auto h = GramMatrix<LaurentElem>({{L("0"), L("1")}, {L("1"), L("0")}});
  EXPECT_TRUE(evaluate(h, {L("t^2+t^-1"), L("0")}).is_zero());
  EXPECT_EQ(evaluate(laurent_diag({"1", "1", "t"}), {L("1"), L("1"), L("1")}), L("2+t"));
  EXPECT_THROW(evaluate(q, {L("1")}), std::invalid_argument);
}

TEST(Gram, Regularity) {
  EXPECT_TRUE(is_regular(laurent_diag({"1", "-1", "-t"})));
  EXPECT_EQ(laurent_diag({"1", "-1", "-t"}).det(), L("t"));
  EXPECT_FALSE(is_regular(laurent_diag({"1", "1", "0"})));
  EXPECT_FALSE(is_regular(laurent_diag({"1", "1", "1+t"})));
}

TEST(Congruence, IdentityAndSingular) {
  auto q = laurent_diag({"1", "-1", "-t"});
  EXPECT_EQ(congruence(q, Matrix<LaurentElem>::identity(3, L("0"))), q);
  EXPECT_THROW(congruence(q, Matrix<LaurentElem>::diagonal({L("1"), L("0"), L("1")})), std::domain_error);
}

TEST(Congruence, OverF9ToAnisotropicForm) {
  auto f9 = ExtField::create(3, {Fp(1, 3), Fp(0, 3), Fp(1, 3)});  // X^2 + 1
  const ExtFieldElem zero(f9, 0);
  const ExtFieldElem i = ExtFieldElem::generator(f9);
  auto lift = [&](const LaurentElem& u) {
    return map_coefficients(u, zero, [&](const Fp& c) { return ExtFieldElem(f9, c.value()); });
  };
  using L9 = Laurent<ExtFieldElem>;
  auto q = GramMatrix<L9>::diagonal({lift(L("1")), lift(L("-1")), lift(L("-t"))});
  auto t = Matrix<L9>::diagonal({L9::monomial(zero.one_like(), 0), L9::monomial(i, 0), L9::monomial(-i, 0)});
  auto target = GramMatrix<L9>::diagonal({lift(L("1")), lift(L("1")), lift(L("t"))});
  EXPECT_EQ(congruence(q, t), target);
}

TEST(Congruence, HyperbolicBlock) {
  EllipticCurve e(5, 1, 0);
  auto k = [&](const char* s) { return parse_kelem(s, e); };
  auto h = GramMatrix<KElem>({{k("0"), k("1")}, {k("1"), k("0")}});
  auto b = Matrix<KElem>({{k("x"), k("-y/x")}, {k("y"), k("-x")}});
  EXPECT_EQ(congruence(h, b), GramMatrix<KElem>({{k("2*x*y"), k("-2*x^2-1")}, {k("-2*x^2-1"), k("2*y")}}));
}

TEST(Algorithm1, EllipticExample) {
  EllipticCurve e(5, 1, 0);
  auto k = [&](const char* s) { return parse_kelem(s, e); };
  SplitForm f0{GramMatrix<KElem>::diagonal({k("1")})};
  auto reps = algorithm1(e, f0);
  ASSERT_EQ(reps.size(), 4u);
  EXPECT_TRUE(reps[0].point.is_infinity());
  EXPECT_EQ(reps[0].gram, f0.full(e));
  EXPECT_EQ(reps[1].point, e.point(0, 0));
  EXPECT_EQ(reps[1].gram, GramMatrix<KElem>({{k("2*x*y"), k("-2*x^2-1"), k("0")},
                                              {k("-2*x^2-1"), k("2*y"), k("0")},
                                              {k("0"), k("0"), k("1")}}));
  EXPECT_EQ(reps[1].transform, Matrix<KElem>({{k("x"), k("-y/x")}, {k("y"), k("-x")}}));
  for (const auto& r : reps) {
    EXPECT_TRUE(is_regular(r.gram));
    EXPECT_EQ(r.gram.det(), f0.full(e).det());
  }
  EXPECT_EQ(algorithm1(e, f0, Algorithm1Mode::full).size(), 4u);
}

TEST(Algorithm1, RejectsSingularV0) {
  EllipticCurve e(5, 1, 0);
  SplitForm f0{GramMatrix<KElem>::diagonal({KElem::x(e)})};
  EXPECT_THROW(algorithm1(e, f0), std::domain_error);
}

TEST(Algorithm1, IntegralAndRegularOnSmallCurves) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        if (!is_smooth(p, a, b)) continue;
        EllipticCurve e(p, a, b);
        SplitForm f0{GramMatrix<KElem>::diagonal({KElem::constant(e, 1)})};
        auto reps = algorithm1(e, f0, Algorithm1Mode::full);
        ASSERT_EQ(reps.size(), enumerate_points(e).size());
        ASSERT_EQ(algorithm1(e, f0).size(), cosets_mod_2(e).size());
        for (const auto& r : reps) {
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) ASSERT_TRUE(is_integral(r.gram(i, j)));
          ASSERT_TRUE(is_regular(r.gram));
          ASSERT_TRUE(r.transform.det().is_one());
          ASSERT_EQ(congruence(f0.hyperbolic(e), r.transform), GramMatrix<KElem>({{r.gram(0, 0), r.gram(0, 1)},
                                                                                  {r.gram(1, 0), r.gram(1, 1)}}));
        }
      }
    }
  }
}

TEST(Isotropy, LaurentExampleForms) {
  auto w = isotropy_search(laurent_diag({"1", "-1", "-t"}), 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<LaurentElem>{L("1"), L("1"), L("0")}));
  auto start = std::chrono::steady_clock::now();
  EXPECT_FALSE(isotropy_search(laurent_diag({"1", "1", "t"}), 3).has_value());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 5.0);
  auto h = GramMatrix<LaurentElem>({{L("0"), L("1")}, {L("1"), L("0")}});
  EXPECT_EQ(*isotropy_search(h, 3), (std::vector<LaurentElem>{L("1"), L("0")}));
}

TEST(Isotropy, EllipticRing) {
  EllipticCurve e(5, 1, 0);
  auto k = [&](const char* s) { return parse_kelem(s, e); };
  auto w = isotropy_search(GramMatrix<KElem>::diagonal({k("1"), k("-1")}), 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(evaluate(GramMatrix<KElem>::diagonal({k("1"), k("-1")}), *w).is_zero());
  // x^2 - x^3 - x + y^2 ... the form <1, -(x^3+x)> is isotropic via (y, 1).
  auto q = GramMatrix<KElem>::diagonal({k("1"), k("-x^3-x")});
  auto v = isotropy_search(q, 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(evaluate(q, *v).is_zero());
  auto reps = algorithm1(e, SplitForm{GramMatrix<KElem>::diagonal({k("1")})});
  auto iso = isotropy_search(reps[1].gram, 1);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(evaluate(reps[1].gram, *iso).is_zero());
}

// Any vector with all entries of bounded size found by brute force implies a
// witness from the search; every witness is nonzero and isotropic.
TEST(Isotropy, AgreesWithBruteForce) {
  auto g = testing::rng(30);
  const auto elems = bounded_elements(L("0"), 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<LaurentElem> d;
    for (int i = 0; i < 3; ++i) {
      int e = static_cast<int>(g() % 3) - 1;
      d.push_back(LaurentElem::monomial(testing::random_nonzero_fp(g, 3), e) +
                  LaurentElem::monomial(testing::random_fp(g, 3), e + 1));
    }
    auto q = GramMatrix<LaurentElem>::diagonal(d);
    bool brute = false;
    for (const auto& a : elems)
      for (const auto& b : elems)
        for (const auto& c : elems)
          if (!brute && !(a.is_zero() && b.is_zero() && c.is_zero()) && evaluate(q, {a, b, c}).is_zero()) brute = true;
    auto w = isotropy_search(q, 1);
    if (brute) ASSERT_TRUE(w.has_value());
    if (w) {
      ASSERT_TRUE(evaluate(q, *w).is_zero());
      ASSERT_FALSE((*w)[0].is_zero() && (*w)[1].is_zero() && (*w)[2].is_zero());
    }
  }
}

TEST(Isotropy, BoundedElementsOrder) {
  auto l = bounded_elements(L("0"), 1);
  ASSERT_EQ(l.size(), 27u);
  EXPECT_TRUE(l[0].is_zero());
  EXPECT_EQ(l[1], L("1"));
  EXPECT_EQ(l[3], L("t"));
  EXPECT_EQ(l[9], L("t^-1"));
  EllipticCurve e(3, 1, 0);
  auto k = bounded_elements(KElem(e), 0);
  ASSERT_EQ(k.size(), 9u);
  EXPECT_EQ(k[3], KElem::y(e));
}

// On a curve with a point of order 4, a point L in 2C \ {0} gives a rank-2
// lattice different from the hyperbolic plane, but L lies in the coset of
// infinity, so the rank-3 run over C/2C merges the two.
TEST(Algorithm1, WittCancellationProbe) {
  EllipticCurve e(3, 1, 0);
  ASSERT_EQ(group_structure(e), (GroupStructure{1, 4}));
  auto full = algorithm1(e, SplitForm{}, Algorithm1Mode::full);
  auto mod2 = algorithm1(e, SplitForm{GramMatrix<KElem>::diagonal({KElem::constant(e, 1)})});
  ASSERT_EQ(full.size(), 4u);
  ASSERT_EQ(mod2.size(), 2u);
  const CurvePoint l = multiply(e, 2, e.point(2, 1));
  ASSERT_FALSE(l.is_infinity());
  for (std::size_t i = 0; i < full.size(); ++i)
    for (std::size_t j = i + 1; j < full.size(); ++j) EXPECT_FALSE(full[i].gram == full[j].gram);
  EXPECT_TRUE(coset_representative(e, l).is_infinity());
}

}  // namespace
}  // namespace genus_forge

#include <gtest/gtest.h>

#include <set>

#include "genus_forge/field.hpp"
#include "genus_forge/poly.hpp"
#include "test_support.hpp"

namespace genus_forge {
namespace {

TEST(Field, PrimeArithmetic) {
  EXPECT_EQ(Fp(2, 3) + Fp(2, 3), Fp(1, 3));
  EXPECT_EQ(Fp(2, 5).inverse(), Fp(3, 5));
  EXPECT_EQ(Fp(1, 5) / Fp(2, 5), Fp(3, 5));
  EXPECT_EQ(Fp(-1, 7).value(), 6u);
  EXPECT_EQ(Fp(4, 5).signed_value(), -1);
}

TEST(Field, Errors) {
  EXPECT_THROW(Fp(1, 5) / Fp(0, 5), std::domain_error);
  EXPECT_THROW(Fp(1, 5) + Fp(1, 7), std::domain_error);
  EXPECT_THROW(check_odd_prime(2), std::invalid_argument);
  EXPECT_THROW(check_odd_prime(9), std::invalid_argument);
  EXPECT_THROW(check_odd_prime(1009), std::invalid_argument);
  EXPECT_NO_THROW(check_odd_prime(997));
}

TEST(Field, ExtensionDefiningRelation) {
  // F_3[X]/(X^2+1): X*X = -1 = 2.
  auto f9 = ExtField::create(3, {Fp(1, 3), Fp(0, 3), Fp(1, 3)});
  auto x = ExtFieldElem::generator(f9);
  EXPECT_EQ(x * x, ExtFieldElem(f9, 2));
  EXPECT_EQ(f9->order(), 9u);
  EXPECT_THROW(ExtFieldElem(f9, 0).inverse(), std::domain_error);
  auto f25 = ExtField::create(5, {Fp(2, 5), Fp(0, 5), Fp(1, 5)});
  EXPECT_THROW(x + ExtFieldElem::generator(f25), std::domain_error);
}

TEST(Field, SquareExamples) {
  EXPECT_FALSE(is_square(Fp(2, 3)));
  EXPECT_TRUE(is_square(Fp(4, 5)));
  EXPECT_TRUE(is_square(Fp(0, 7)));
  auto f9 = ExtField::create(3, {Fp(1, 3), Fp(0, 3), Fp(1, 3)});
  EXPECT_TRUE(is_square(ExtFieldElem(f9, 0)));
  // Every element of F_3 is a square in F_9.
  EXPECT_TRUE(is_square(ExtFieldElem(f9, 2)));
}

TEST(Field, InverseProperty) {
  auto g = testing::rng(1);
  for (std::uint32_t p : {3u, 5u, 7u, 13u, 101u, 997u}) {
    for (int i = 0; i < 200; ++i) {
      Fp a = testing::random_nonzero_fp(g, p);
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
  for (const auto& pi : {Poly(3, {1, 0, 1}), monic_irreducibles(5, 3).back(), monic_irreducibles(7, 4).front()}) {
    ASSERT_TRUE(is_irreducible(pi));
    auto f = residue_field(pi);
    for (int i = 0; i < 100; ++i) {
      auto a = ExtFieldElem::from_index(f, 1 + g() % (f->order() - 1));
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

// Squareness must match exhaustive squaring on every field with <= 5000
// elements that we can build, and exactly half the units are squares.
TEST(Field, SquaresAgreeWithExhaustiveSquaring) {
  auto check = [](const auto& elements) {
    using E = std::decay_t<decltype(elements.front())>;
    std::vector<bool> hit(elements.size(), false);
    std::size_t q = elements.size();
    for (std::size_t i = 0; i < q; ++i) {
      E sq = elements[i] * elements[i];
      for (std::size_t j = 0; j < q; ++j) {
        if (elements[j] == sq) hit[j] = true;
      }
    }
    std::size_t nonzero_squares = 0;
    for (std::size_t j = 0; j < q; ++j) {
      ASSERT_EQ(is_square(elements[j]), hit[j]);
      ASSERT_EQ(is_square_exhaustive(elements[j]), hit[j]);
      auto r = sqrt(elements[j]);
      ASSERT_EQ(r.has_value(), hit[j]);
      if (r) ASSERT_EQ(*r * *r, elements[j]);
      if (hit[j] && !elements[j].is_zero()) ++nonzero_squares;
    }
    EXPECT_EQ(nonzero_squares, (q - 1) / 2);
  };
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 67u, 101u, 331u}) {
    std::vector<Fp> el;
    for (std::uint32_t v = 0; v < p; ++v) el.emplace_back(v, p);
    check(el);
  }
  for (const auto& pi : {Poly(3, {2, 2, 1}), Poly(5, {2, 0, 1}), monic_irreducibles(3, 3).front(),
                         Poly(7, {1, 0, 1}), monic_irreducibles(3, 4).back(), monic_irreducibles(5, 3).front()}) {
    auto f = residue_field(pi);
    std::vector<ExtFieldElem> el;
    for (std::uint64_t i = 0; i < f->order(); ++i) el.push_back(ExtFieldElem::from_index(f, i));
    check(el);
  }
}

TEST(Field, MultiplicativeGroupOrder) {
  auto f = residue_field(Poly(5, {2, 0, 1}));
  auto g = testing::rng(2);
  for (int i = 0; i < 50; ++i) {
    auto a = ExtFieldElem::from_index(f, 1 + g() % 24);
    EXPECT_TRUE(a.pow(24).is_one());
  }
}

}  // namespace
}  // namespace genus_forge

#include <gtest/gtest.h>

#include "gencluster/semifield.hpp"
#include "support/generators.hpp"

namespace gencluster {
namespace {

using testing::Rng;

SemifieldElement mono(const SemifieldContextPtr& ctx, ExponentVector e) {
  return SemifieldElement::monomial(ctx, std::move(e));
}

TEST(Tropical, OplusIsComponentwiseMin) {
  auto ctx = SemifieldContext::tropical(2);
  EXPECT_EQ(oplus(mono(ctx, {1, -2}), mono(ctx, {0, 3})), mono(ctx, {0, -2}));
  EXPECT_EQ(oplus(mono(ctx, {1, 0}), SemifieldElement::identity(ctx)), mono(ctx, {0, 0}));
}

TEST(Tropical, MultiplicationAddsExponents) {
  auto ctx = SemifieldContext::tropical(2);
  EXPECT_EQ(otimes(mono(ctx, {1, -2}), mono(ctx, {2, 5})), mono(ctx, {3, 3}));
  EXPECT_EQ(inv(mono(ctx, {1, -2})), mono(ctx, {-1, 2}));
  EXPECT_EQ(pow(mono(ctx, {1, -2}), -3), mono(ctx, {-3, 6}));
}

TEST(Trivial, EverythingIsOne) {
  auto ctx = SemifieldContext::trivial();
  auto one = SemifieldElement::identity(ctx);
  EXPECT_TRUE(oplus(one, one).is_identity());
  EXPECT_TRUE(m_fold_sum(mpz_class(5), one).is_identity());
  EXPECT_EQ(to_string(one), "1");
}

TEST(MFoldSum, IdempotentAndRejectsNonPositive) {
  auto ctx = SemifieldContext::tropical(1);
  EXPECT_EQ(m_fold_sum(mpz_class(7), mono(ctx, {3})), mono(ctx, {3}));
  EXPECT_THROW(m_fold_sum(mpz_class(0), mono(ctx, {3})), DomainError);
}

TEST(Context, MismatchIsReported) {
  auto a = SemifieldContext::tropical(std::vector<std::string>{"p", "q"});
  auto b = SemifieldContext::tropical(std::vector<std::string>{"p", "r"});
  EXPECT_THROW(otimes(mono(a, {1, 0}), mono(b, {1, 0})), ContextError);
  // Structurally equal contexts are interchangeable.
  auto c = SemifieldContext::tropical(std::vector<std::string>{"p", "q"});
  EXPECT_EQ(otimes(mono(a, {1, 0}), mono(c, {1, 0})), mono(a, {2, 0}));
}

TEST(Combination, ZeroProjectsToNothing) {
  auto ctx = SemifieldContext::tropical(1);
  auto zero = NonNegCombination::zero(ctx);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(project_tilde(zero).has_value());
  EXPECT_EQ(to_string(zero), "0");
}

TEST(Combination, TildeReplacesPlusByOplus) {
  auto ctx = SemifieldContext::tropical(2);
  auto z = NonNegCombination::term(mono(ctx, {1, 0}), mpz_class(2)) +
           NonNegCombination::term(mono(ctx, {0, -1}), mpz_class(3));
  ASSERT_TRUE(project_tilde(z).has_value());
  EXPECT_EQ(*project_tilde(z), mono(ctx, {0, -1}));
  EXPECT_EQ(z.terms().size(), 2u);
}

TEST(Combination, SumMergesMultiplicities) {
  auto ctx = SemifieldContext::trivial();
  auto one = SemifieldElement::identity(ctx);
  auto z = NonNegCombination::term(one, mpz_class(2)) + NonNegCombination::term(one, mpz_class(3));
  EXPECT_EQ(z.terms().at({}), 5);
  EXPECT_THROW(z.add_term(one, mpz_class(0)), DomainError);
}

TEST(Combination, ProductConvolves) {
  auto ctx = SemifieldContext::tropical(1);
  auto a = NonNegCombination::term(mono(ctx, {1}), mpz_class(2)) + NonNegCombination::one(ctx);
  auto sq = a * a;  // (2p + 1)^2 = 4p^2 + 4p + 1
  EXPECT_EQ(sq.terms().at({2}), 4);
  EXPECT_EQ(sq.terms().at({1}), 4);
  EXPECT_EQ(sq.terms().at({0}), 1);
  EXPECT_TRUE((a * NonNegCombination::zero(ctx)).is_zero());
}

TEST(KillGenerators, ZeroesTrailingBlock) {
  auto ctx = SemifieldContext::tropical(3);
  EXPECT_EQ(kill_generators(mono(ctx, {1, 2, 3}), 1, 2), mono(ctx, {1, 0, 0}));
}

// Semifield axioms on random tropical elements.
TEST(TropicalProperties, Axioms) {
  Rng rng(0x5e11f1e1d);
  for (int trial = 0; trial < 500; ++trial) {
    auto ctx = SemifieldContext::tropical(static_cast<std::size_t>(testing::uniform(rng, 1, 4)));
    auto a = testing::random_element(rng, ctx), b = testing::random_element(rng, ctx),
         c = testing::random_element(rng, ctx);
    ASSERT_EQ(oplus(a, b), oplus(b, a));
    ASSERT_EQ(oplus(oplus(a, b), c), oplus(a, oplus(b, c)));
    ASSERT_EQ(otimes(a, oplus(b, c)), oplus(otimes(a, b), otimes(a, c)));
    ASSERT_EQ(oplus(a, a), a);
    ASSERT_TRUE(otimes(a, inv(a)).is_identity());
  }
}

// z ↦ z̃ is a semiring homomorphism to (P, ⊕, ·) on nonzero combinations.
TEST(TropicalProperties, TildeIsAHomomorphism) {
  Rng rng(0x7117de);
  testing::Bounds bounds;
  for (int trial = 0; trial < 300; ++trial) {
    auto ctx = SemifieldContext::tropical(2);
    auto a = testing::random_combination(rng, ctx, bounds), b = testing::random_combination(rng, ctx, bounds);
    ASSERT_EQ(*project_tilde(a + b), oplus(*project_tilde(a), *project_tilde(b)));
    ASSERT_EQ(*project_tilde(a * b), otimes(*project_tilde(a), *project_tilde(b)));
  }
}

}  // namespace
}  // namespace gencluster

#include <gtest/gtest.h>

#include "gencluster/seed.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace gencluster {
namespace {

using testing::Rng;

SeedIssue first_issue(const SeedData& data) {
  auto diags = validate_seed(data);
  EXPECT_FALSE(diags.empty());
  return diags.empty() ? SeedIssue::dimension_mismatch : diags.front().issue;
}

TEST(ExchangeMatrix, FindsMinimalSymmetrizer) {
  ExchangeMatrix b(2, {0, 1, -2, 0});
  EXPECT_EQ(b.symmetrizer(), (std::vector<std::int64_t>{2, 1}));
  ExchangeMatrix c(3, {0, 1, 0, -1, 0, 1, 0, -1, 0});
  EXPECT_EQ(c.symmetrizer(), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_THROW(ExchangeMatrix(2, {0, 1, 1, 0}), InvalidSeed);
  // A cycle whose products do not balance has no symmetrizer.
  EXPECT_FALSE(ExchangeMatrix::find_symmetrizer(3, std::vector<std::int64_t>{0, 1, -1, -2, 0, 1, 1, -1, 0}));
}

TEST(ExchangeMatrix, GeneralizedMutation) {
  // b'_ij = b_ij + d_k([b_ik]_+ b_kj + b_ik [-b_kj]_+) off row/column k.
  ExchangeMatrix b(3, {0, 1, 0, -1, 0, 1, 0, -1, 0});
  std::vector<std::int64_t> d{1, 2, 1};
  auto m = mutate_matrix(b, d, 1, +1);
  EXPECT_EQ(m.entries(), (std::vector<std::int64_t>{0, -1, 2, 1, 0, -1, -2, 1, 0}));
  EXPECT_EQ(mutate_matrix(m, d, 1, +1), b);
  EXPECT_EQ(mutate_matrix(b, d, 1, -1), m);
  EXPECT_EQ(m.symmetrizer(), b.symmetrizer());
}

TEST(Validation, ReportsEachIssue) {
  auto good = testing::worked_example();
  EXPECT_TRUE(validate_seed(good).empty());

  auto bad = good;
  bad.b = {0, 1, -1};
  EXPECT_EQ(first_issue(bad), SeedIssue::dimension_mismatch);

  bad = good;
  bad.b = {0, 1, 1, 0};
  EXPECT_EQ(first_issue(bad), SeedIssue::not_skew_symmetrizable);

  bad = good;
  bad.d = {0, 1};
  EXPECT_EQ(first_issue(bad), SeedIssue::bad_degree);

  bad = good;
  bad.z[0].pop_back();
  EXPECT_EQ(first_issue(bad), SeedIssue::bad_tuple_length);

  bad = testing::trivial_data(2, {0, 1, -1, 0}, {2, 1}, {{2, 2, 1}, {1, 1}});
  EXPECT_EQ(first_issue(bad), SeedIssue::bad_boundary_coefficient);

  bad = testing::trivial_data(2, {0, 1, -1, 0}, {3, 1}, {{1, 2, 3, 1}, {1, 1}});
  EXPECT_EQ(first_issue(bad), SeedIssue::non_reciprocal);
  EXPECT_TRUE(validate_seed(testing::trivial_data(2, {0, 1, -1, 0}, {3, 1}, {{1, 2, 3, 1}, {1, 1}},
                                                  SeedMode{true, false}))
                  .empty());

  bad = good;
  bad.y[0] = SemifieldElement::identity(SemifieldContext::tropical(1));
  EXPECT_EQ(first_issue(bad), SeedIssue::context_mismatch);

  EXPECT_THROW(Seed::initial(bad), InvalidSeed);
  EXPECT_EQ(to_string(SeedIssue::bad_tuple_length), "BadTupleLength");
}

TEST(Mutation, WorkedExample) {
  auto s = Seed::initial(testing::worked_example());
  auto t = mutate(s, 0);
  EXPECT_EQ(to_string(t.x()[0]), "(x2^2 + 2*x2 + 1)/x1");
  EXPECT_EQ(t.x()[1], s.x()[1]);
  EXPECT_EQ(t.b()(0, 1), -1);
  EXPECT_EQ(t.b()(1, 0), 1);
  EXPECT_TRUE(t.y()[0].is_identity());
  EXPECT_EQ(mutate(s, 0, -1), t);
  EXPECT_EQ(mutate(t, 0), s);
}

TEST(Mutation, RejectsBadDirectionAndSign) {
  auto s = Seed::initial(testing::worked_example());
  EXPECT_THROW(mutate(s, 2), IndexError);
  EXPECT_THROW(mutate(s, 0, 0), DomainError);
}

TEST(Mutation, TropicalCoefficientsUseTildeDenominator) {
  // One generator p; y_1 = p, z_1 = (1, 3p^{-1}, 1), d_1 = 2.
  SeedData data;
  data.semifield = SemifieldContext::tropical(std::vector<std::string>{"p"});
  data.rank = 2;
  data.b = {0, 1, -1, 0};
  data.d = {2, 1};
  auto p = SemifieldElement::generator(data.semifield, 0);
  auto one = NonNegCombination::one(data.semifield);
  data.z = {{one, NonNegCombination::term(inv(p), 3), one}, {one, one}};
  data.y = {p, SemifieldElement::identity(data.semifield)};
  auto s = Seed::initial(data);
  // D = 1 ⊕ p^{-1}·p ⊕ p^2 = p^0.
  EXPECT_TRUE(exchange_denominator_tilde(s, 0)->is_identity());
  // ε = -1: D = 1 ⊕ p^{-1}p^{-1} ⊕ p^{-2} = p^{-2}.
  EXPECT_EQ(*exchange_denominator_tilde(s, 0, -1), pow(p, -2));
  auto t = mutate(s, 0);
  EXPECT_EQ(t.y()[0], inv(p));
  // y_2' = y_2 · y_1^{d_1 [b_12]_+} · D^{-b_12} = p^2.
  EXPECT_EQ(t.y()[1], pow(p, 2));
  EXPECT_EQ(to_string(t.x()[0]), "(x2^2 + 3*x2 + p^2)/x1");
  EXPECT_EQ(mutate(s, 0, -1), t);
}

// Zero interior coefficients are skipped: the ⊕-denominator is built from the
// nonzero terms only and the exchange numerator has no term for them.
TEST(Mutation, ZeroInteriorCoefficientsAreIgnored) {
  SeedData data;
  data.semifield = SemifieldContext::tropical(std::vector<std::string>{"p", "q"});
  data.rank = 2;
  data.b = {0, 1, -1, 0};
  data.d = {4, 1};
  const auto& ctx = data.semifield;
  auto zero = NonNegCombination::zero(ctx);
  auto one = NonNegCombination::one(ctx);
  auto q = SemifieldElement::monomial(ctx, {0, 1});
  data.z = {{one, zero, NonNegCombination::term(q, 5), zero, one}, {one, one}};
  auto y1 = SemifieldElement::monomial(ctx, {1, -1});
  data.y = {y1, SemifieldElement::identity(ctx)};
  auto s = Seed::initial(data);

  const auto manual = oplus(oplus(SemifieldElement::identity(ctx), otimes(q, pow(y1, 2))), pow(y1, 4));
  EXPECT_EQ(*exchange_denominator_tilde(s, 0, +1), manual);
  const auto manual_minus = oplus(oplus(SemifieldElement::identity(ctx), otimes(q, pow(y1, -2))), pow(y1, -4));
  EXPECT_EQ(*exchange_denominator_tilde(s, 0, -1), manual_minus);

  auto t = mutate(s, 0);
  const auto& num = t.x()[0].numerator();
  for (const auto& term : num.terms()) {
    EXPECT_NE(term.exponents[1] % 2, 1) << "odd powers of x2 come from zero coefficients";
  }
  EXPECT_EQ(num.size(), 3u);
  EXPECT_EQ(mutate(t, 0), s);

  // The trivial bundled shape: x1' = (x2^3 + 1)/x1.
  auto z = Seed::initial(testing::trivial_data(2, {0, 1, -1, 0}, {3, 1}, {{1, 0, 0, 1}, {1, 1}}));
  EXPECT_EQ(to_string(mutate(z, 0).x()[0]), "(x2^3 + 1)/x1");
}

TEST(Mutation, AllZeroTupleIsAnError) {
  auto data = testing::trivial_data(2, {0, 1, -1, 0}, {1, 1}, {{0, 0}, {1, 1}}, SeedMode::relaxed());
  auto s = Seed::initial(data);
  EXPECT_THROW(mutate(s, 0), EmptyExchangeSum);
  EXPECT_NO_THROW(mutate(s, 1));
}

// Without reciprocity the two sign conventions disagree, which is why strict
// mode requires z_{k,s} = z_{k,d_k-s}.
TEST(Mutation, NonReciprocalCoefficientsBreakSignIndependence) {
  auto data = testing::trivial_data(2, {0, 1, -1, 0}, {2, 1}, {{1, 3, 1}, {1, 1}});
  auto lopsided = testing::trivial_data(2, {0, 1, -1, 0}, {3, 1}, {{1, 2, 5, 1}, {1, 1}}, SeedMode{true, false});
  auto s = Seed::initial(data);
  EXPECT_EQ(mutate(s, 0, +1), mutate(s, 0, -1));
  auto r = Seed::initial(lopsided);
  EXPECT_FALSE(mutate(r, 0, +1) == mutate(r, 0, -1));
  // Same-sign involution still holds.
  EXPECT_EQ(mutate(mutate(r, 0, +1), 0, +1), r);
}

TEST(Laurent, CertificationReturnsPolynomialOrRemainder) {
  auto s = Seed::initial(testing::worked_example());
  auto t = mutate_along(s, std::vector<std::size_t>{0, 1, 0, 1});
  for (const auto& x : t.x()) EXPECT_NO_THROW(certify_laurent(x));
  auto c = AlgebraContext::standard(2);
  RationalFunction f(LaurentPolynomial::constant(c, 1), LaurentPolynomial::variable(c, 0) + LaurentPolynomial::constant(c, 1));
  EXPECT_THROW(certify_laurent(f), NonExactDivision);
}

// Random strict seeds: all four sign pairs give the identity and both signs agree.
TEST(MutationProperties, InvolutionAndSignIndependence) {
  Rng rng(0x1e7a11);
  testing::Bounds bounds;
  for (int trial = 0; trial < 60; ++trial) {
    auto data = testing::random_seed_data(rng, bounds);
    // One step away keeps the variables small even for wild B; longer words are
    // covered on growth-bounded seeds by the acceptance corpus.
    auto s = mutate_along(Seed::initial(data), testing::random_word(rng, data.rank, 1));
    for (std::size_t k = 0; k < s.rank(); ++k) {
      const auto plus = mutate(s, k, +1);
      ASSERT_EQ(plus, mutate(s, k, -1)) << "trial " << trial << " k " << k;
      for (int e1 : {+1, -1}) {
        for (int e2 : {+1, -1}) ASSERT_EQ(mutate(mutate(s, k, e1), k, e2), s);
      }
    }
  }
}

TEST(MutationProperties, MatrixStaysSkewSymmetrizable) {
  Rng rng(0x5c3e);
  testing::Bounds bounds;
  for (int trial = 0; trial < 200; ++trial) {
    auto data = testing::random_seed_data(rng, bounds);
    ExchangeMatrix b(data.rank, data.b);
    for (auto k : testing::random_word(rng, data.rank, 5)) {
      b = mutate_matrix(b, data.d, k, testing::coin(rng, 0.5) ? 1 : -1);
      const auto& r = b.symmetrizer();
      for (std::size_t i = 0; i < data.rank; ++i) {
        for (std::size_t j = 0; j < data.rank; ++j) ASSERT_EQ(r[i] * b(i, j), -r[j] * b(j, i));
      }
    }
  }
}

}  // namespace
}  // namespace gencluster

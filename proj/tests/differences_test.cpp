#include "sumgap/differences.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumgap/errors.hpp"

namespace sumgap {
namespace {

TEST(RepTableTest, SmallExamples) {
  const auto t = rep_table(PrimeField(5), {0, 1}, {0, 1});
  EXPECT_EQ(t.counts(), (std::vector<std::int64_t>{2, 1, 0, 0, 1}));
  const auto u = rep_table(PrimeField(67), {1, 5}, {1});
  EXPECT_EQ(u.nu(0), 1);
  EXPECT_EQ(u.nu(4), 1);
  EXPECT_EQ(u.total(), 2);
  EXPECT_THROW(rep_table(PrimeField(5), {}, {1}), InputError);
}

TEST(RepTableTest, CountingIdentityAndOracle) {
  std::mt19937_64 rng(10);
  const std::int64_t p = 101;
  for (int trial = 0; trial < 20; ++trial) {
    const auto b1 = oracle::random_set(rng, p, 1 + trial * 2);
    const auto b2 = oracle::random_set(rng, p, 3 + trial);
    const auto t = rep_table(PrimeField(p), b1, b2);
    EXPECT_EQ(t.total(), static_cast<std::int64_t>(b1.size() * b2.size()));
    const auto expected = oracle::differences(b1, b2, p);
    for (Residue d = 0; d < p; ++d) {
      const auto it = expected.find(d);
      EXPECT_EQ(t.nu(d), it == expected.end() ? 0 : it->second);
      EXPECT_LE(t.nu(d), static_cast<std::int64_t>(std::min(b1.size(), b2.size())));
    }
  }
}

TEST(UniqueDifferenceTest, ExhaustiveSmallest) {
  const auto u = find_unique_difference({0, 1}, PrimeField(5), DifferenceMethod::exhaustive);
  EXPECT_EQ(u.d, 1);
  EXPECT_EQ(u.minuend, 1);
  EXPECT_EQ(u.subtrahend, 0);
}

TEST(UniqueDifferenceTest, FullGroupHasNone) {
  EXPECT_THROW(find_unique_difference({0, 1, 2, 3, 4}, PrimeField(5), DifferenceMethod::exhaustive), NotFoundError);
}

TEST(UniqueDifferenceTest, ConstructivePrecondition) {
  // 4^3 = 64 > 11.
  EXPECT_THROW(find_unique_difference({0, 1, 10}, PrimeField(11), DifferenceMethod::constructive), InputError);
  EXPECT_TRUE(unique_difference_hypothesis(6, 4099));
  EXPECT_FALSE(unique_difference_hypothesis(6, 4093));
  EXPECT_FALSE(unique_difference_hypothesis(40, 65537));
}

TEST(UniqueDifferenceTest, ConstructiveCertifiedAt4099) {
  std::mt19937_64 rng(11);
  const std::int64_t p = 4099;
  const PrimeField field(p);
  for (int trial = 0; trial < 50; ++trial) {
    const auto b = oracle::random_set(rng, p, 6);
    const auto u = find_unique_difference(b, field, DifferenceMethod::constructive);
    EXPECT_EQ(u.method, DifferenceMethod::constructive);
    EXPECT_EQ(oracle::nu(b, b, p, u.d), 1);
    EXPECT_EQ(field.sub(u.minuend, u.subtrahend), u.d);
    ASSERT_TRUE(u.dilation.has_value());
    for (auto r : b) EXPECT_LE(oracle::dist(u.dilation->m, r, p), std::pow(double(p), -1.0 / 6) * (1 + 1e-12));
    // Exhaustive mode agrees on existence.
    EXPECT_NO_THROW(find_unique_difference(b, field, DifferenceMethod::exhaustive));
  }
}

TEST(FewRepsTest, Preconditions) {
  const PrimeField field(101);
  EXPECT_THROW(lemma3_few_reps({1, 2, 3, 4}, {1, 2, 3, 4}, field, 1), InputError);
  std::vector<Residue> big;
  for (Residue x = 0; x < 60; ++x) big.push_back(x);
  EXPECT_THROW(lemma3_few_reps(big, {1, 2, 3}, field, 1), InputError);  // |B1| > p/2
  std::vector<Residue> ten{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_THROW(lemma3_few_reps(ten, {0}, PrimeField(65537), 1), InputError);  // 3 ln 10 < ln 65537
}

TEST(FewRepsTest, RandomTenSetsMod101) {
  std::mt19937_64 rng(12);
  const std::int64_t p = 101;
  const PrimeField field(p);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto b = oracle::random_set(rng, p, 10);
    const auto r = lemma3_few_reps(b, b, field, seed);
    EXPECT_NEAR(r.bound, 229.762065416536, 1e-9);
    EXPECT_LE(static_cast<double>(r.nu), r.bound);
    EXPECT_EQ(oracle::nu(b, b, p, r.d), r.nu);
    EXPECT_GE(r.nu, 1);
    EXPECT_LE(r.attempts, kMaxSampleAttempts);
    EXPECT_FALSE(r.bound_violated);
  }
}

TEST(FewRepsTest, ArithmeticProgression) {
  const std::int64_t p = 101;
  std::vector<Residue> ap;
  for (Residue j = 0; j < 12; ++j) ap.push_back(5 + 3 * j);
  const auto r = lemma3_few_reps(ap, ap, PrimeField(p), 42);
  EXPECT_LE(static_cast<double>(r.nu), r.bound);
  EXPECT_EQ(oracle::nu(ap, ap, p, r.d), r.nu);
  EXPECT_EQ(oracle::nu(ap, ap, p, 33), 1);  // extremes: 38 - 5
}

TEST(FewRepsTest, SeedReproducible) {
  std::mt19937_64 rng(13);
  const std::int64_t p = 4099;
  const auto b1 = oracle::random_set(rng, p, 40);
  const auto b2 = oracle::random_set(rng, p, 20);
  const auto a = lemma3_few_reps(b1, b2, PrimeField(p), 7);
  const auto b = lemma3_few_reps(b1, b2, PrimeField(p), 7);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.sample, b.sample);
  EXPECT_EQ(a.attempts, b.attempts);
}

TEST(Lemma3UniqueTest, SingletonB1) {
  const std::int64_t p = 31;
  const auto u = lemma3_unique({4}, {1, 7, 20}, PrimeField(p));
  EXPECT_EQ(u.d, 3);  // smallest of {3, 15, 28}
  EXPECT_EQ(oracle::nu({4}, {1, 7, 20}, p, u.d), 1);
}

TEST(Lemma3UniqueTest, Example67) {
  const auto u = lemma3_unique({1, 5}, {1}, PrimeField(67));
  EXPECT_EQ(u.d, 4);
  EXPECT_EQ(u.minuend, 5);
  EXPECT_EQ(u.subtrahend, 1);
}

TEST(Lemma3UniqueTest, RandomAt65537) {
  std::mt19937_64 rng(14);
  const std::int64_t p = 65537;
  const PrimeField field(p);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b1 = oracle::random_set(rng, p, 4);
    const auto b2 = oracle::random_set(rng, p, 2);
    const auto u = lemma3_unique(b1, b2, field);
    EXPECT_EQ(oracle::nu(b1, b2, p, u.d), 1);
  }
}

TEST(Lemma3UniqueTest, Preconditions) {
  const PrimeField field(101);
  EXPECT_THROW(lemma3_unique({1, 2, 3, 4}, {1, 2, 3}, field), InputError);
  EXPECT_THROW(lemma3_unique({}, {1}, field), InputError);
}

}  // namespace
}  // namespace sumgap

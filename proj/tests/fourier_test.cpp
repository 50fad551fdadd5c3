#include "sumgap/fourier.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumgap/errors.hpp"
#include "sumgap/generators.hpp"

namespace sumgap {
namespace {

std::vector<std::complex<double>> as_std(const ComplexVector& v) { return {v.data(), v.data() + v.size()}; }

TEST(DftTest, ConstantFunction) {
  const auto s = dft(DensityFunction::constant(PrimeField(5), 1.0));
  EXPECT_NEAR(s[0].real(), 5.0, 1e-12);
  for (Residue a = 1; a < 5; ++a) EXPECT_LT(std::abs(s[a]), 1e-12);
}

TEST(DftTest, DeltaFunction) {
  const auto s = dft(DensityFunction::indicator(PrimeField(7), {0}));
  for (Residue a = 0; a < 7; ++a) EXPECT_NEAR(std::abs(s[a] - 1.0), 0.0, 1e-14);
}

TEST(DftTest, RemarkSpectrum) {
  const auto s = dft(spectral_remark(PrimeField(11)));
  EXPECT_NEAR(s[0].real(), 5.5, 1e-12);
  EXPECT_NEAR(std::abs(s[1]), 2.75, 1e-12);
  EXPECT_NEAR(std::abs(s[10]), 2.75, 1e-12);
  for (Residue a = 2; a < 10; ++a) EXPECT_LT(std::abs(s[a]), 1e-9);
}

TEST(DftTest, SignConventionAgainstOracle) {
  // An asymmetric function pins the sign of the exponent.
  const PrimeField field(7);
  const auto f = DensityFunction::indicator(field, {1});
  const auto s = dft(f);
  const auto expected = oracle::dft_real(std::vector<double>(f.values().data(), f.values().data() + 7));
  EXPECT_LT(oracle::max_rel_diff(as_std(s.coeffs()), expected), 1e-14);
  EXPECT_GT(s[1].imag(), 0.0);  // e^{+2 pi i / 7}
}

TEST(DftTest, FastMatchesDirectBaseline) {
  std::mt19937_64 rng(1);
  for (std::int64_t p : {3, 5, 31, 67, 101, 257, 1031, 4099}) {
    const PrimeField field(p);
    Eigen::VectorXd v(p);
    const auto vals = oracle::random_values(rng, p);
    for (std::int64_t n = 0; n < p; ++n) v[n] = vals[n];
    const auto f = DensityFunction::from_values(field, v);
    const auto direct = dft(f, transform::Method::direct);
    const auto fast = dft(f, transform::Method::fast);
    EXPECT_LT(oracle::max_rel_diff(as_std(fast.coeffs()), as_std(direct.coeffs())), 1e-9) << p;
    if (p <= 257) EXPECT_LT(oracle::max_rel_diff(as_std(direct.coeffs()), oracle::dft_real(vals)), 1e-9) << p;
  }
}

TEST(DftTest, RoundTripAndParseval) {
  std::mt19937_64 rng(2);
  for (std::int64_t p : {31, 101, 257, 4099}) {
    const PrimeField field(p);
    const auto vals = oracle::random_values(rng, p);
    const auto f = DensityFunction::from_values(field, Eigen::Map<const Eigen::VectorXd>(vals.data(), p));
    const auto s = dft(f);
    const auto back = idft(s);
    EXPECT_LT((back.values - f.values()).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT(back.max_imag, 1e-9);
    const double lhs = f.values().squaredNorm();
    const double rhs = s.coeffs().squaredNorm() / static_cast<double>(p);
    EXPECT_NEAR(lhs, rhs, 1e-9 * lhs);
  }
}

TEST(IdftTest, RemarkCoefficients) {
  const PrimeField field(11);
  ComplexVector c = ComplexVector::Zero(11);
  c[0] = 5.5;
  c[1] = c[10] = 2.75;
  const auto inv = idft(Spectrum(field, c));
  const auto expected = spectral_remark(field);
  EXPECT_LT((inv.values - expected.values()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(inv.values[0], 1.0, 1e-12);
  EXPECT_NEAR(inv.values[1], 0.9206267664155906, 1e-12);
  EXPECT_NEAR(inv.values[2], 0.7077075065009433, 1e-12);
}

TEST(IdftTest, ZeroSpectrumAndImaginaryResidue) {
  const PrimeField field(7);
  const auto zero = idft(Spectrum(field, ComplexVector::Zero(7)));
  EXPECT_TRUE(zero.values.isZero(0.0));
  EXPECT_FALSE(zero.imag_discarded);
  ComplexVector c = ComplexVector::Zero(7);
  c[1] = 3.0;  // no conjugate partner: not the transform of a real function
  EXPECT_THROW(idft(Spectrum(field, c)), InputError);
}

TEST(OrderSpectrumTest, ConstantTieBreak) {
  const auto s = dft(DensityFunction::constant(PrimeField(5), 1.0));
  EXPECT_EQ(s.order(), (std::vector<Residue>{0, 1, 2, 3, 4}));
  EXPECT_NEAR(s.lambda(1), 5.0, 1e-12);
  for (std::size_t i = 2; i <= 5; ++i) EXPECT_LT(s.lambda(i), 1e-12);
}

TEST(OrderSpectrumTest, RemarkOrdering) {
  const auto s = dft(spectral_remark(PrimeField(11)));
  EXPECT_EQ(s.frequency(1), 0);
  EXPECT_EQ(s.frequency(2), 1);
  EXPECT_EQ(s.frequency(3), 10);
  EXPECT_NEAR(s.lambda(1), 5.5, 1e-12);
  EXPECT_NEAR(s.lambda(2), 2.75, 1e-12);
  EXPECT_NEAR(s.lambda(3), 2.75, 1e-12);
  EXPECT_LT(s.lambda(4), 1e-9);
}

TEST(OrderSpectrumTest, MatchesExhaustiveSortOracle) {
  // Indicator of {0,1,3} in F_7 is a perfect difference set: all nonzero
  // frequencies tie at magnitude sqrt(2).
  const PrimeField field(7);
  const auto f = DensityFunction::indicator(field, {0, 1, 3});
  const auto s = dft(f);
  const auto coeffs = oracle::dft_real(std::vector<double>(f.values().data(), f.values().data() + 7));
  std::vector<Residue> expected;
  std::vector<bool> used(7, false);
  for (int rank = 0; rank < 7; ++rank) {
    int best = -1;
    for (int a = 0; a < 7; ++a) {
      if (used[a]) continue;
      if (best < 0 || std::abs(coeffs[a]) > std::abs(coeffs[best]) + 1e-9) best = a;
    }
    used[best] = true;
    expected.push_back(best);
  }
  EXPECT_EQ(s.order(), expected);
  EXPECT_NEAR(s.lambda(2), std::sqrt(2.0), 1e-12);
}

TEST(OrderSpectrumTest, PermutationAndMonotone) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t p = 101;
    const auto set = oracle::random_set(rng, p, 1 + trial * 3);
    const auto s = dft(DensityFunction::indicator(PrimeField(p), set));
    auto order = s.order();
    std::sort(order.begin(), order.end());
    for (std::int64_t a = 0; a < p; ++a) ASSERT_EQ(order[a], a);
    const double tol = kTieTolerance * s.lambda(1);
    for (std::size_t i = 1; i < static_cast<std::size_t>(p); ++i) EXPECT_GE(s.lambda(i) + tol, s.lambda(i + 1));
    EXPECT_EQ(s.frequency(1), 0);
    EXPECT_NEAR(s.lambda(1), static_cast<double>(set.size()), 1e-9);
  }
}

TEST(GapRatioTest, Remark) {
  const auto s = dft(spectral_remark(PrimeField(11)));
  const auto cert = gap_ratio(s, 3);
  EXPECT_LT(cert.gamma, 1e-9);
  EXPECT_NEAR(cert.lambda_k, 2.75, 1e-12);
}

TEST(GapRatioTest, ConstantAndErrors) {
  const auto s = dft(DensityFunction::constant(PrimeField(5), 1.0));
  EXPECT_LT(gap_ratio(s, 1).gamma, 1e-15);
  EXPECT_THROW(gap_ratio(s, 2), InputError);  // lambda_2 = 0
  EXPECT_THROW(gap_ratio(s, 0), InputError);
  EXPECT_THROW(gap_ratio(s, 5), InputError);
}

TEST(GapRatioTest, RandomSubsetAgainstBruteForce) {
  std::mt19937_64 rng(4);
  const std::int64_t p = 101;
  const auto set = oracle::random_set(rng, p, 10);
  const auto f = DensityFunction::indicator(PrimeField(p), set);
  const auto coeffs = oracle::dft_real(std::vector<double>(f.values().data(), f.values().data() + p));
  std::vector<double> mags;
  for (auto c : coeffs) mags.push_back(std::abs(c));
  std::sort(mags.rbegin(), mags.rend());
  const auto cert = gap_ratio(dft(f), 1);
  EXPECT_NEAR(cert.gamma, mags[1] / mags[0], 1e-12);
  EXPECT_NEAR(mags[0], 10.0, 1e-9);
}

}  // namespace
}  // namespace sumgap

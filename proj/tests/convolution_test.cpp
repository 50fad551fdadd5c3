#include "sumgap/convolution.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumgap/errors.hpp"

namespace sumgap {
namespace {

TEST(ConvolveTest, IndicatorRepresentationCounts) {
  const auto f = DensityFunction::indicator(PrimeField(5), {0, 1});
  const auto r = convolve(f, f);
  EXPECT_EQ(r, (Eigen::VectorXd(5) << 1, 2, 1, 0, 0).finished());
}

TEST(ConvolveTest, ConstantSelfConvolution) {
  for (std::int64_t p : {5, 31, 101}) {
    const auto f = DensityFunction::constant(PrimeField(p), 1.0);
    const auto r = convolve(f, f);
    EXPECT_LT((r.array() - static_cast<double>(p)).abs().maxCoeff(), 1e-12 * p);
  }
}

TEST(ConvolveTest, TransformMatchesDirectOracle) {
  std::mt19937_64 rng(5);
  for (std::int64_t p : {31, 101, 257}) {
    const PrimeField field(p);
    std::vector<oracle::cd> f(p), g(p);
    const auto fv = oracle::random_values(rng, p);
    const auto gr = oracle::random_values(rng, p);
    const auto gi = oracle::random_values(rng, p);
    ComplexVector fe(p), ge(p);
    for (std::int64_t n = 0; n < p; ++n) {
      f[n] = fe[n] = fv[n];
      g[n] = ge[n] = oracle::cd(gr[n], gi[n]);
    }
    const auto expected = oracle::convolve(f, g);
    const ComplexVector fast = convolve(field, fe, ge);
    const ComplexVector slow = convolve(field, fe, ge, ConvolutionMethod::direct);
    EXPECT_LT(oracle::max_rel_diff({fast.data(), fast.data() + p}, expected), 1e-9);
    EXPECT_LT(oracle::max_rel_diff({slow.data(), slow.data() + p}, expected), 1e-12);
  }
}

TEST(ConvolveTest, IndicatorExactAndSupportIsSumset) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const std::int64_t p = 101;
    const auto a = oracle::random_set(rng, p, 1 + trial);
    const auto b = oracle::random_set(rng, p, 5 + trial);
    const PrimeField field(p);
    const auto r = convolve(DensityFunction::indicator(field, a), DensityFunction::indicator(field, b));
    const auto sums = oracle::sumset(a, b, p);
    for (std::int64_t n = 0; n < p; ++n) {
      EXPECT_EQ(r[n], std::round(r[n]));
      EXPECT_EQ(r[n] > 0, sums.count(n) > 0);
    }
    EXPECT_EQ(r.sum(), static_cast<double>(a.size() * b.size()));
  }
}

TEST(ConvolveTest, FieldMismatch) {
  const auto f = DensityFunction::constant(PrimeField(5), 0.5);
  const auto g = DensityFunction::constant(PrimeField(7), 0.5);
  EXPECT_THROW(convolve(f, g), InputError);
  EXPECT_THROW(convolve(PrimeField(5), ComplexVector::Zero(5), ComplexVector::Zero(7)), InputError);
}

TEST(ModulateTest, IdentityAndShiftLaw) {
  const PrimeField field(5);
  const auto f = DensityFunction::indicator(field, {1});
  const auto g0 = modulate(f, 0);
  EXPECT_EQ((g0 - f.values().cast<std::complex<double>>()).cwiseAbs().maxCoeff(), 0.0);
  const auto g = modulate(f, 1);
  EXPECT_NEAR(std::abs(g[1] - std::polar(1.0, 2.0 * std::numbers::pi / 5.0)), 0.0, 1e-15);
  for (Residue n : {0, 2, 3, 4}) EXPECT_EQ(g[n], std::complex<double>(0.0));
  const auto gh = oracle::dft({g.data(), g.data() + 5});
  const auto fh = oracle::dft_real({f.values().data(), f.values().data() + 5});
  for (Residue a = 0; a < 5; ++a) EXPECT_LT(std::abs(gh[a] - fh[(a + 1) % 5]), 1e-12);
}

TEST(ModulateTest, ShiftLawAndModulusProperty) {
  std::mt19937_64 rng(7);
  for (std::int64_t p : {31, 101}) {
    const PrimeField field(p);
    const auto vals = oracle::random_values(rng, p);
    const auto f = DensityFunction::from_values(field, Eigen::Map<const Eigen::VectorXd>(vals.data(), p));
    const auto fh = dft(f);
    for (Residue d = 0; d < p; d += 7) {
      const auto g = modulate(f, d);
      EXPECT_LT((g.cwiseAbs() - f.values()).cwiseAbs().maxCoeff(), 4e-16);
      const auto gh = forward_transform(g);
      for (Residue a = 0; a < p; ++a) ASSERT_LT(std::abs(gh[a] - fh[a + d]), 1e-9 * fh.lambda(1));
      // (f*f)(n) >= |(g*f)(n)| pointwise.
      const auto ff = convolve(f, f);
      const auto gf = convolve(f, g);
      for (Residue n = 0; n < p; ++n) ASSERT_GE(ff[n] + 1e-9, std::abs(gf[n]));
    }
  }
}

}  // namespace
}  // namespace sumgap

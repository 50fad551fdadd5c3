#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <vector>

#include "sumgap/density.hpp"
#include "sumgap/fourier.hpp"

namespace sumgap {

enum class ConvolutionMethod { transform, direct };

/// (f * g)(n) = sum_m f(m) g(n - m mod p), by the O(p^2) double loop.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> convolve_direct(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& f,
                                                         const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& g) {
  const Eigen::Index p = f.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(p);
  for (Eigen::Index m = 0; m < p; ++m) {
    if (f[m] == Scalar(0)) continue;
    for (Eigen::Index n = 0; n < p; ++n) {
      Eigen::Index j = n - m;
      if (j < 0) j += p;
      out[n] += f[m] * g[j];
    }
  }
  return out;
}

/// Same contract through p^{-1} sum_a F(a) G(a) e^{-2 pi i a n / p}.
ComplexVector convolve_transform(const ComplexVector& f, const ComplexVector& g);

ComplexVector convolve(const PrimeField& field, const ComplexVector& f, const ComplexVector& g,
                       ConvolutionMethod method = ConvolutionMethod::transform);

/// Real convolution of two densities. When both are indicators the result is
/// computed by exact pair counting and every entry is an integer.
RealVector convolve(const DensityFunction& f, const DensityFunction& g,
                    ConvolutionMethod method = ConvolutionMethod::transform);

ComplexVector convolve(const DensityFunction& f, const ComplexVector& g,
                       ConvolutionMethod method = ConvolutionMethod::transform);

/// r(n) = |{(a, b) in A x B : a + b = n}|, exact.
std::vector<std::int64_t> sum_representations(const PrimeField& field, const std::vector<Residue>& a,
                                              const std::vector<Residue>& b);

/// g(n) = e^{2 pi i d n / p} f(n); its transform is a -> fhat(a + d).
ComplexVector modulate(const DensityFunction& f, Residue d);

inline constexpr double kPositivityTolerance = 1e-9;

/// Floating positivity threshold tol * p.
inline double positivity_threshold(std::int64_t p, double tol = kPositivityTolerance) {
  return tol * static_cast<double>(p);
}

/// Number of entries strictly above the threshold.
std::int64_t count_above(const RealVector& values, double threshold);

}  // namespace sumgap

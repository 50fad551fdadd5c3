#include "sumgap/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sumgap/errors.hpp"

namespace sumgap {

SpectrumOrdering order_spectrum(const ComplexVector& coeffs) {
  const auto n = static_cast<std::size_t>(coeffs.size());
  RealVector mags = coeffs.cwiseAbs();
  std::vector<Residue> order(n);
  std::iota(order.begin(), order.end(), Residue{0});
  std::stable_sort(order.begin(), order.end(), [&](Residue a, Residue b) { return mags[a] > mags[b]; });

  // Regroup near-equal runs so that ties resolve by ascending frequency even
  // when the magnitudes differ in the last few bits.
  const double tol = kTieTolerance * (n > 0 ? mags.maxCoeff() : 0.0);
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && mags[order[end - 1]] - mags[order[end]] <= tol) ++end;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end));
    start = end;
  }

  SpectrumOrdering out{std::move(order), RealVector(static_cast<Eigen::Index>(n))};
  for (std::size_t i = 0; i < n; ++i) out.magnitudes[static_cast<Eigen::Index>(i)] = mags[out.order[i]];
  return out;
}

Spectrum::Spectrum(const PrimeField& field, ComplexVector coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_.p())
    throw InputError("spectrum length " + std::to_string(coeffs_.size()) + " does not match p = " +
                     std::to_string(field_.p()));
  auto ordering = order_spectrum(coeffs_);
  order_ = std::move(ordering.order);
  magnitudes_ = std::move(ordering.magnitudes);
}

std::vector<Residue> Spectrum::top_frequencies(std::size_t k) const {
  if (k > order_.size()) throw InputError("k exceeds p");
  std::vector<Residue> out(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

ComplexVector forward_transform(const ComplexVector& x, transform::Method method) {
  return transform::dft<double>(x, transform::Sign::forward, method);
}

ComplexVector inverse_transform(const ComplexVector& x, transform::Method method) {
  return transform::dft<double>(x, transform::Sign::inverse, method) / static_cast<double>(x.size());
}

Spectrum dft(const DensityFunction& f, transform::Method method) {
  return Spectrum(f.field(), forward_transform(f.values().cast<std::complex<double>>(), method));
}

RealInverse idft_real(const ComplexVector& coeffs) {
  const ComplexVector z = inverse_transform(coeffs);
  RealInverse out{z.real(), 0.0, false};
  out.max_imag = z.size() > 0 ? z.imag().cwiseAbs().maxCoeff() : 0.0;
  const double scale = std::max(1.0, z.size() > 0 ? out.values.cwiseAbs().maxCoeff() : 0.0);
  if (out.max_imag > kImagTolerance * scale)
    throw InputError("spectrum does not invert to a real function (imaginary residue " +
                     std::to_string(out.max_imag) + ")");
  out.imag_discarded = out.max_imag > 0.0;
  return out;
}

RealInverse idft(const Spectrum& s) { return idft_real(s.coeffs()); }

GapCertificate gap_ratio(const Spectrum& s, std::size_t k) {
  if (k < 1 || k >= static_cast<std::size_t>(s.p()))
    throw InputError("gap index k = " + std::to_string(k) + " outside [1, p-1]");
  GapCertificate cert{k, 0.0, s.lambda(k), s.lambda(k + 1)};
  if (!has_gap_certificate(s, k)) throw InputError("lambda_k = 0: no gap certificate at k = " + std::to_string(k));
  cert.gamma = cert.lambda_k1 / cert.lambda_k;
  return cert;
}

bool has_gap_certificate(const Spectrum& s, std::size_t k) {
  // Magnitudes at the rounding floor of the transform count as zero.
  return k >= 1 && k < static_cast<std::size_t>(s.p()) && s.lambda(k) > kTieTolerance * s.lambda(1);
}

}  // namespace sumgap

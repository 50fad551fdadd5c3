#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <vector>

#include "sumgap/density.hpp"
#include "sumgap/prime_field.hpp"
#include "sumgap/transform.hpp"

namespace sumgap {

using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Magnitudes closer than this (relative to the largest) count as tied and
/// are ordered by ascending frequency.
inline constexpr double kTieTolerance = 1e-12;

/// Imaginary parts up to this size (relative to max(1, max |re|)) are
/// dropped when a spectrum is inverted to a real function.
inline constexpr double kImagTolerance = 1e-9;

struct SpectrumOrdering {
  std::vector<Residue> order;  // a_1, ..., a_p
  RealVector magnitudes;       // |coeffs[a_i]|
};

/// Sorts frequencies by nonincreasing magnitude, ties by ascending frequency.
SpectrumOrdering order_spectrum(const ComplexVector& coeffs);

/// Fourier coefficients of a function on F_p plus their magnitude ordering.
class Spectrum {
 public:
  Spectrum(const PrimeField& field, ComplexVector coeffs);

  const PrimeField& field() const { return field_; }
  std::int64_t p() const { return field_.p(); }
  const ComplexVector& coeffs() const { return coeffs_; }
  std::complex<double> operator[](Residue a) const { return coeffs_[field_.reduce(a)]; }
  const std::vector<Residue>& order() const { return order_; }
  const RealVector& magnitudes() const { return magnitudes_; }

  /// 1-based accessors matching lambda_i and a_i.
  double lambda(std::size_t i) const { return magnitudes_[static_cast<Eigen::Index>(i - 1)]; }
  Residue frequency(std::size_t i) const { return order_[i - 1]; }
  /// {a_1, ..., a_k} sorted ascending.
  std::vector<Residue> top_frequencies(std::size_t k) const;

 private:
  PrimeField field_;
  ComplexVector coeffs_;
  std::vector<Residue> order_;
  RealVector magnitudes_;
};

/// coeffs[a] = sum_n x[n] e^{+2 pi i a n / p}.
ComplexVector forward_transform(const ComplexVector& x, transform::Method method = transform::Method::automatic);
/// n -> p^{-1} sum_a X[a] e^{-2 pi i a n / p}.
ComplexVector inverse_transform(const ComplexVector& x, transform::Method method = transform::Method::automatic);

Spectrum dft(const DensityFunction& f, transform::Method method = transform::Method::automatic);

struct RealInverse {
  RealVector values;
  double max_imag = 0.0;
  bool imag_discarded = false;  // some nonzero imaginary residue was dropped
};

/// Inverts to a real sequence; throws InputError if the imaginary residue
/// exceeds kImagTolerance.
RealInverse idft(const Spectrum& s);
RealInverse idft_real(const ComplexVector& coeffs);

/// Witness that |lambda_{k+1}| <= gamma |lambda_k| with the minimal gamma.
struct GapCertificate {
  std::size_t k = 0;
  double gamma = 0.0;
  double lambda_k = 0.0;
  double lambda_k1 = 0.0;
};

/// Requires 1 <= k <= p-1 and lambda_k > 0 (above kTieTolerance * lambda_1).
GapCertificate gap_ratio(const Spectrum& s, std::size_t k);

/// True when gap_ratio(s, k) would succeed.
bool has_gap_certificate(const Spectrum& s, std::size_t k);

}  // namespace sumgap

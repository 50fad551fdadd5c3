#include "sumgap/convolution.hpp"

#include <string>

#include "sumgap/errors.hpp"

namespace sumgap {

namespace {

void require_same_length(Eigen::Index a, Eigen::Index b) {
  if (a != b)
    throw InputError("field mismatch: sequences of length " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

ComplexVector convolve_transform(const ComplexVector& f, const ComplexVector& g) {
  require_same_length(f.size(), g.size());
  const ComplexVector product = forward_transform(f).cwiseProduct(forward_transform(g));
  return inverse_transform(product);
}

ComplexVector convolve(const PrimeField& field, const ComplexVector& f, const ComplexVector& g,
                       ConvolutionMethod method) {
  require_same_length(f.size(), field.p());
  require_same_length(g.size(), field.p());
  return method == ConvolutionMethod::direct ? convolve_direct<std::complex<double>>(f, g) : convolve_transform(f, g);
}

RealVector convolve(const DensityFunction& f, const DensityFunction& g, ConvolutionMethod method) {
  if (!(f.field() == g.field())) throw InputError("field mismatch in convolve");
  if (f.is_indicator() && g.is_indicator()) {
    const auto counts = sum_representations(f.field(), f.support(), g.support());
    RealVector out(f.p());
    for (Eigen::Index n = 0; n < out.size(); ++n) out[n] = static_cast<double>(counts[n]);
    return out;
  }
  if (method == ConvolutionMethod::direct) return convolve_direct<double>(f.values(), g.values());
  return convolve_transform(f.values().cast<std::complex<double>>(), g.values().cast<std::complex<double>>()).real();
}

ComplexVector convolve(const DensityFunction& f, const ComplexVector& g, ConvolutionMethod method) {
  return convolve(f.field(), f.values().cast<std::complex<double>>(), g, method);
}

std::vector<std::int64_t> sum_representations(const PrimeField& field, const std::vector<Residue>& a,
                                              const std::vector<Residue>& b) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(field.p()), 0);
  for (auto x : a)
    for (auto y : b) ++counts[field.add(x, y)];
  return counts;
}

ComplexVector modulate(const DensityFunction& f, Residue d) {
  const std::int64_t p = f.p();
  const auto roots = transform::root_table<double>(p);
  const Residue shift = f.field().reduce(d);
  ComplexVector g(p);
  Residue phase = 0;  // d * n mod p
  for (std::int64_t n = 0; n < p; ++n) {
    g[n] = roots[phase] * f.values()[n];
    phase += shift;
    if (phase >= p) phase -= p;
  }
  return g;
}

std::int64_t count_above(const RealVector& values, double threshold) {
  return (values.array() > threshold).count();
}

}  // namespace sumgap

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sumgap/density.hpp"

namespace sumgap {

enum class Family {
  indicator_random,        // uniform random subset of size round(density * p)
  interval,                // {start, ..., start + length - 1}
  arithmetic_progression,  // {start + j step : 0 <= j < length}
  quadratic_residues,      // nonzero squares
  spectral_remark,         // 1/2 + cos(2 pi n / p) / 2
  spectral_custom,         // inverse of a prescribed coefficient list
};

using FourierTerm = std::pair<Residue, std::complex<double>>;

struct GeneratorParams {
  double density = 0.5;
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::int64_t length = 1;
  std::vector<FourierTerm> coefficients;
};

Family parse_family(const std::string& name);
std::string family_name(Family family);

/// Deterministic in (family, field, params, seed).
DensityFunction generate(Family family, const PrimeField& field, const GeneratorParams& params, std::uint64_t seed);

/// Function whose transform is p/2 at 0, p/4 at +-1 and zero elsewhere.
DensityFunction spectral_remark(const PrimeField& field);

/// Inverts a sparse coefficient list (missing frequencies are zero). The
/// result must be real and within [0,1] up to 1e-9, else InputError.
DensityFunction from_fourier(const PrimeField& field, const std::vector<FourierTerm>& terms);

}  // namespace sumgap

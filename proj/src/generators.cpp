#include "sumgap/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sumgap/errors.hpp"
#include "sumgap/fourier.hpp"
#include "sumgap/random.hpp"

namespace sumgap {

namespace {

constexpr double kFourierRangeTolerance = 1e-9;

std::vector<Residue> random_subset(const PrimeField& field, std::int64_t size, Engine& engine) {
  std::vector<Residue> pool(static_cast<std::size_t>(field.p()));
  std::iota(pool.begin(), pool.end(), Residue{0});
  for (std::int64_t i = 0; i < size; ++i) {
    const auto j = i + static_cast<std::int64_t>(uniform_below(engine, static_cast<std::uint64_t>(field.p() - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(size));
  return pool;
}

void require_length(const PrimeField& field, std::int64_t length) {
  if (length < 1 || length > field.p()) throw InputError("length must lie in [1, p]");
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "indicator-random") return Family::indicator_random;
  if (name == "interval") return Family::interval;
  if (name == "arithmetic-progression") return Family::arithmetic_progression;
  if (name == "quadratic-residues") return Family::quadratic_residues;
  if (name == "spectral-remark") return Family::spectral_remark;
  if (name == "spectral-custom") return Family::spectral_custom;
  throw InputError("unknown family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::indicator_random: return "indicator-random";
    case Family::interval: return "interval";
    case Family::arithmetic_progression: return "arithmetic-progression";
    case Family::quadratic_residues: return "quadratic-residues";
    case Family::spectral_remark: return "spectral-remark";
    case Family::spectral_custom: return "spectral-custom";
  }
  return "unknown";
}

DensityFunction generate(Family family, const PrimeField& field, const GeneratorParams& params, std::uint64_t seed) {
  const std::int64_t p = field.p();
  switch (family) {
    case Family::indicator_random: {
      if (!(params.density > 0.0 && params.density <= 1.0)) throw InputError("density must lie in (0, 1]");
      const auto size = std::max<std::int64_t>(1, std::llround(params.density * static_cast<double>(p)));
      Engine engine(seed);
      return DensityFunction::indicator(field, random_subset(field, size, engine));
    }
    case Family::interval:
      return generate(Family::arithmetic_progression, field,
                      GeneratorParams{params.density, params.start, 1, params.length, {}}, seed);
    case Family::arithmetic_progression: {
      require_length(field, params.length);
      const Residue step = field.reduce(params.step);
      if (step == 0) throw InputError("progression step must be nonzero mod p");
      std::vector<Residue> set;
      for (std::int64_t j = 0; j < params.length; ++j) set.push_back(field.add(field.reduce(params.start), field.mul(j, step)));
      return DensityFunction::indicator(field, std::move(set));
    }
    case Family::quadratic_residues: {
      std::vector<Residue> set;
      for (std::int64_t x = 1; x < p; ++x) set.push_back(field.mul(x, x));
      return DensityFunction::indicator(field, std::move(set));
    }
    case Family::spectral_remark:
      return spectral_remark(field);
    case Family::spectral_custom:
      return from_fourier(field, params.coefficients);
  }
  throw InputError("unknown family");
}

DensityFunction spectral_remark(const PrimeField& field) {
  const auto roots = transform::root_table<double>(field.p());
  Eigen::VectorXd values(field.p());
  for (std::int64_t n = 0; n < field.p(); ++n) values[n] = 0.5 + 0.5 * roots[n].real();
  return DensityFunction::from_values(field, std::move(values));
}

DensityFunction from_fourier(const PrimeField& field, const std::vector<FourierTerm>& terms) {
  ComplexVector coeffs = ComplexVector::Zero(field.p());
  std::vector<bool> seen(static_cast<std::size_t>(field.p()), false);
  for (const auto& [a, c] : terms) {
    if (!field.contains(a)) throw InputError("frequency " + std::to_string(a) + " out of range");
    if (seen[a]) throw InputError("frequency " + std::to_string(a) + " listed twice");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw InputError("non-finite Fourier coefficient");
    seen[a] = true;
    coeffs[a] = c;
  }
  auto inverse = idft_real(coeffs);
  for (Eigen::Index n = 0; n < inverse.values.size(); ++n) {
    double& v = inverse.values[n];
    if (v < -kFourierRangeTolerance || v > 1.0 + kFourierRangeTolerance)
      throw InputError("Fourier data inverts to value " + std::to_string(v) + " at n = " + std::to_string(n) +
                       ", outside [0,1]");
    v = std::clamp(v, 0.0, 1.0);
  }
  return DensityFunction::from_values(field, std::move(inverse.values));
}

}  // namespace sumgap

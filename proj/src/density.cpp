#include "sumgap/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sumgap/errors.hpp"

namespace sumgap {

DensityFunction DensityFunction::from_values(const PrimeField& field, Eigen::VectorXd values) {
  if (values.size() != field.p())
    throw InputError("expected " + std::to_string(field.p()) + " values, got " + std::to_string(values.size()));
  bool indicator = true;
  for (Eigen::Index n = 0; n < values.size(); ++n) {
    double& v = values[n];
    if (!std::isfinite(v)) throw InputError("value at " + std::to_string(n) + " is not finite");
    if (v < -kRangeTolerance || v > 1.0 + kRangeTolerance)
      throw InputError("value " + std::to_string(v) + " at " + std::to_string(n) + " outside [0,1]");
    v = std::clamp(v, 0.0, 1.0);
    indicator = indicator && (v == 0.0 || v == 1.0);
  }
  return DensityFunction(field, std::move(values), indicator);
}

DensityFunction DensityFunction::indicator(const PrimeField& field, std::vector<Residue> set) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(field.p());
  for (auto x : canonical_set(field, std::move(set))) values[x] = 1.0;
  return DensityFunction(field, std::move(values), true);
}

DensityFunction DensityFunction::constant(const PrimeField& field, double value) {
  return from_values(field, Eigen::VectorXd::Constant(field.p(), value));
}

std::vector<Residue> DensityFunction::support() const {
  std::vector<Residue> out;
  for (Eigen::Index n = 0; n < values_.size(); ++n)
    if (values_[n] != 0.0) out.push_back(n);
  return out;
}

}  // namespace sumgap

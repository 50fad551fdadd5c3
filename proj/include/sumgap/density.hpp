#pragma once

#include <Eigen/Core>
#include <vector>

#include "sumgap/prime_field.hpp"

namespace sumgap {

/// Absolute slack allowed on [0,1] membership for floating-valued functions.
inline constexpr double kRangeTolerance = 1e-12;

/// A function F_p -> [0,1], stored densely by residue.
///
/// Indicator mode is set when every value is exactly 0 or 1; operations that
/// count (sumsets, representation numbers) then take an exact integer path.
class DensityFunction {
 public:
  /// Validates the range; values within kRangeTolerance of [0,1] are clamped.
  static DensityFunction from_values(const PrimeField& field, Eigen::VectorXd values);
  static DensityFunction indicator(const PrimeField& field, std::vector<Residue> set);
  static DensityFunction constant(const PrimeField& field, double value);

  const PrimeField& field() const { return field_; }
  std::int64_t p() const { return field_.p(); }
  const Eigen::VectorXd& values() const { return values_; }
  double operator()(Residue n) const { return values_[field_.reduce(n)]; }

  bool is_indicator() const { return indicator_; }
  bool is_zero() const { return values_.isZero(0.0); }
  double mass() const { return values_.sum(); }
  /// theta = mean of f over F_p.
  double theta() const { return values_.mean(); }
  /// Residues with f(n) != 0, ascending.
  std::vector<Residue> support() const;

 private:
  DensityFunction(const PrimeField& field, Eigen::VectorXd values, bool indicator)
      : field_(field), values_(std::move(values)), indicator_(indicator) {}

  PrimeField field_;
  Eigen::VectorXd values_;
  bool indicator_;
};

}  // namespace sumgap

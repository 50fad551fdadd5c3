#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumgap/density.hpp"
#include "sumgap/differences.hpp"
#include "sumgap/fourier.hpp"

namespace sumgap {

/// max(0, p (1 - 2 theta p^2 gamma^2 / lambda_k^2)).
double theorem1_bound(std::int64_t p, double theta, double gamma, double lambda_k);

/// 1 <= k < ln p / ln 4.
bool theorem1_hypothesis(std::size_t k, std::int64_t p);

/// A difference d = a_y - a_x with a unique representation inside the top-k
/// frequency set {a_1, ..., a_k}.
struct GapDifference {
  Residue d = 0;
  Residue a_x = 0;
  Residue a_y = 0;
  DifferenceMethod method = DifferenceMethod::exhaustive;
};

/// Constructive when p > 4^k, otherwise the exhaustive search (NotFoundError
/// if nothing qualifies).
GapDifference select_gap_difference(const Spectrum& s, std::size_t k);

/// E(n) = p^{-1} sum_{a != a_x} e^{-2 pi i a n / p} fhat(a) fhat(a + d).
struct ErrorProfile {
  ComplexVector values;
  double l2_norm_sq = 0.0;      // sum_n |E(n)|^2
  double l2_budget = 0.0;       // 2 gamma^2 lambda_k^2 fhat(0)
  double target = 0.0;          // p^{-1} lambda_k^2
  std::int64_t good_count = 0;  // #{n : |E(n)| < target}
  double main_term_modulus = 0.0;  // p^{-1} |fhat(a_x)| |fhat(a_y)|
};

ErrorProfile error_profile(const DensityFunction& f, const Spectrum& s, std::size_t k, Residue d, Residue a_x);

/// Budget slack used when comparing the L2 error against its bound.
inline constexpr double kBudgetTolerance = 1e-6;

struct CoverageReport {
  std::int64_t p = 0;
  std::size_t k = 0;
  double gamma = 0.0;
  double theta = 0.0;
  double lambda_k = 0.0;
  double lambda_k1 = 0.0;
  double bound = 0.0;
  std::int64_t exact_support = 0;
  double slack = 0.0;
  Residue d = 0;
  Residue a_x = 0;
  Residue a_y = 0;
  DifferenceMethod method = DifferenceMethod::exhaustive;
  bool indicator = false;
  bool in_hypothesis = false;
  double positivity_threshold = 0.0;
  std::int64_t good_count = 0;
  double error_l2 = 0.0;
  double l2_budget = 0.0;
  bool budget_holds = true;
  bool bound_holds = true;
  /// In-hypothesis instance where the support bound or the budget failed.
  bool falsified = false;
};

/// Requires f not identically zero and 1 <= k <= p-1. Out-of-hypothesis k is
/// evaluated and flagged.
CoverageReport theorem1_report(const DensityFunction& f, std::size_t k, double positivity_tol = 1e-9);

enum class ProbeFamily { random_indicator, interval, ap_union, spectral };
std::string probe_family_name(ProbeFamily family);

struct ProbeOptions {
  std::int64_t p = 101;
  std::size_t k_min = 1;
  std::size_t k_max = 0;  // empty range when k_max < k_min
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  /// Instances with gamma at or below this count as strong-gap examples.
  double strong_gap = 0.5;
};

struct ProbeRow {
  std::size_t k = 0;
  std::size_t trials = 0;
  double best_gamma = 0.0;
  ProbeFamily best_family = ProbeFamily::random_indicator;
  std::size_t strong_gap_count = 0;
  /// Smallest |supp(f * f)| / p over strong-gap instances.
  std::optional<double> min_coverage;
  /// theorem1_bound / p evaluated at the worst strong-gap instance.
  std::optional<double> bound_at_min;
};

/// Empirical search for strong gaps at k, including k beyond ln p / ln 4.
/// Trial j at k draws from family j mod 4 with seed derive_seed(seed, k, j).
std::vector<ProbeRow> conjecture_probe(const ProbeOptions& options);

/// Generates the probe instance for (family, k) from a seed.
DensityFunction probe_instance(ProbeFamily family, const PrimeField& field, std::size_t k, std::uint64_t seed);

}  // namespace sumgap

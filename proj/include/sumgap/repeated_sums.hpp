#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumgap/density.hpp"
#include "sumgap/differences.hpp"
#include "sumgap/fourier.hpp"

namespace sumgap {

enum class ChainStepKind { few_reps, unique };

struct ChainStep {
  ChainStepKind kind = ChainStepKind::few_reps;
  Residue d = 0;
  std::size_t input_size = 0;   // |A_{i-1}|
  std::size_t output_size = 0;  // |A_i| = nu(d_i) against (A, A_{i-1})
  double bound = 0.0;           // 20 |A_{i-1}| (ln|A|)^2 / ln p, few_reps steps only
  FewRepsPath path = FewRepsPath::sampled;
  int attempts = 0;
  bool bound_respected = true;
  // The sampled difference did not shrink A_{i-1}; the exhaustive minimum was
  // used instead.
  bool forced_progress = false;
  // 3 |A_{i-1}| ln|A| == ln p up to rounding; routed to the unique branch.
  bool boundary_equality = false;
};

/// A_0 = A, A_i = {b in A_{i-1} : b + d_i in A}; the last set is {base}.
struct DifferenceChain {
  std::int64_t p = 0;
  std::vector<Residue> top;                 // A
  std::vector<Residue> ds;                  // d_1, ..., d_m
  std::vector<std::vector<Residue>> sets;   // A_0, ..., A_m
  std::vector<ChainStep> steps;
  Residue base = 0;

  std::size_t m() const { return ds.size(); }
};

/// Iterates the few-representation step on (A, A_i) while 3|A_i| ln|A| > ln p
/// and finishes with a unique-representation step. Certifies by a full scan
/// of F_p that exactly one b has b + d_i in A for every i (with d_0 = 0).
DifferenceChain build_difference_chain(const std::vector<Residue>& a, const PrimeField& field, std::uint64_t seed);

/// t^{-1} theta^{2-t} (lambda_k / p)^{t-1}; requires t >= 3, theta > 0, lambda_k > 0.
double gamma_threshold(int t, double theta, double lambda_k, std::int64_t p);

/// k < (ln p)^{t-1} (5 t ln ln p)^{2-2t}; requires k >= 1 and p >= 16.
bool k_range_check(std::size_t k, int t, std::int64_t p);

struct TfoldResult {
  RealVector values;
  double scale = 0.0;          // p^{-1} sum_a |fhat(a)|^t
  double dynamic_range = 0.0;  // scale / min_n |value|
  bool precision_limited = false;  // dynamic_range > 2^52
};

/// n -> p^{-1} sum_a fhat(a)^t e^{-2 pi i a n / p}; requires t >= 2.
TfoldResult tfold_convolution(const DensityFunction& f, int t);

/// The same values by t - 1 direct O(p^2) convolutions.
RealVector tfold_convolution_direct(const DensityFunction& f, int t);

struct Theorem2Verdict {
  std::int64_t p = 0;
  std::size_t k = 0;
  int t = 0;
  std::uint64_t seed = 0;
  double theta = 0.0;
  double gamma = 0.0;
  double lambda_k = 0.0;
  double lambda_k1 = 0.0;
  double gamma_threshold = 0.0;
  bool gamma_ok = false;
  bool k_range_applicable = false;  // p >= 16
  bool k_range_ok = false;
  bool in_hypothesis = false;
  bool positive_everywhere = false;
  double min_value = 0.0;
  double positivity_threshold = 0.0;
  bool precision_limited = false;
  std::optional<double> direct_residual;  // vs iterated direct convolution, small p

  std::optional<DifferenceChain> chain;
  std::string chain_error;
  bool chain_within_t = false;  // m <= t - 1

  // Modulated product f^{*(t-m)} * g_1 * ... * g_m, evaluated when m <= t - 1.
  bool modulated_checked = false;
  double identity_residual = 0.0;  // transform identity, relative
  double error_max = 0.0;          // max_n |E(n)|
  double error_bound = 0.0;        // t gamma (theta p)^{t-2} lambda_k
  bool error_bound_holds = true;
  bool support_inclusion_holds = true;

  /// in_hypothesis without positivity, or a failed identity, error bound or
  /// support inclusion.
  bool falsified = false;
};

/// Relative tolerance for the modulated-product transform identity.
inline constexpr double kIdentityTolerance = 1e-6;

Theorem2Verdict theorem2_report(const DensityFunction& f, std::size_t k, int t, std::uint64_t seed,
                                double positivity_tol = 1e-9);

}  // namespace sumgap

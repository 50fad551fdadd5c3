#include "sumgap/repeated_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sumgap/convolution.hpp"
#include "sumgap/errors.hpp"
#include "sumgap/random.hpp"

namespace sumgap {

namespace {

std::vector<Residue> survivors(const PrimeField& field, const std::vector<Residue>& top,
                               const std::vector<Residue>& current, Residue d) {
  std::vector<Residue> out;
  for (auto b : current)
    if (std::binary_search(top.begin(), top.end(), field.add(b, d))) out.push_back(b);
  return out;
}

// Largest p for which theorem2_report cross-checks against direct sums.
constexpr std::int64_t kDirectCheckLimit = 257;

}  // namespace

DifferenceChain build_difference_chain(const std::vector<Residue>& a, const PrimeField& field, std::uint64_t seed) {
  if (a.empty()) throw InputError("difference chain needs a nonempty set");
  DifferenceChain chain;
  chain.p = field.p();
  chain.top = canonical_set(field, a);
  chain.sets.push_back(chain.top);
  const auto& top = chain.top;
  const double log_top = std::log(static_cast<double>(top.size()));
  const double log_p = std::log(static_cast<double>(field.p()));

  std::vector<Residue> current = top;
  while (current.size() > 1) {
    ChainStep step;
    step.input_size = current.size();
    const double lhs = 3.0 * static_cast<double>(current.size()) * log_top;
    step.boundary_equality = std::abs(lhs - log_p) <= 1e-12 * log_p;
    if (lhs > log_p && !step.boundary_equality) {
      step.kind = ChainStepKind::few_reps;
      const auto r = detail::few_reps_procedure(top, current, field, derive_seed(seed, chain.steps.size()));
      step.d = r.d;
      step.bound = r.bound;
      step.path = r.path;
      step.attempts = r.attempts;
      auto next = survivors(field, top, current, step.d);
      if (next.size() >= current.size()) {
        const RepTable table(field, top, current);
        step.d = table.argmin_positive();
        step.forced_progress = true;
        next = survivors(field, top, current, step.d);
      }
      step.output_size = next.size();
      step.bound_respected = static_cast<double>(step.output_size) <= step.bound;
      current = std::move(next);
    } else {
      step.kind = ChainStepKind::unique;
      const auto u = detail::unique_procedure(top, current, field);
      step.d = u.d;
      current = survivors(field, top, current, step.d);
      step.output_size = current.size();
      if (current.size() != 1) throw FalsificationError("unique step left " + std::to_string(current.size()) + " bases");
    }
    chain.ds.push_back(step.d);
    chain.sets.push_back(current);
    chain.steps.push_back(step);
  }
  chain.base = current.front();

  std::int64_t hits = 0;
  for (Residue b = 0; b < field.p(); ++b) {
    bool ok = std::binary_search(top.begin(), top.end(), b);
    for (std::size_t i = 0; ok && i < chain.ds.size(); ++i)
      ok = std::binary_search(top.begin(), top.end(), field.add(b, chain.ds[i]));
    if (ok) {
      ++hits;
      if (b != chain.base) throw FalsificationError("difference chain admits a second base point");
    }
  }
  if (hits != 1) throw FalsificationError("difference chain base point is not unique");
  return chain;
}

double gamma_threshold(int t, double theta, double lambda_k, std::int64_t p) {
  if (t < 3) throw InputError("gamma threshold requires t >= 3");
  if (!(theta > 0.0)) throw InputError("gamma threshold requires theta > 0");
  if (!(lambda_k > 0.0)) throw InputError("gamma threshold requires lambda_k > 0");
  return std::pow(theta, 2.0 - t) * std::pow(lambda_k / static_cast<double>(p), t - 1.0) / t;
}

bool k_range_check(std::size_t k, int t, std::int64_t p) {
  if (k < 1) throw InputError("k must be at least 1");
  if (p < 16) throw InputError("k range check needs p >= 16 so that ln ln p > 0");
  const double loglog = std::log(std::log(static_cast<double>(p)));
  const double log_rhs = (t - 1.0) * loglog - (2.0 * t - 2.0) * std::log(5.0 * t * loglog);
  return std::log(static_cast<double>(k)) < log_rhs;
}

TfoldResult tfold_convolution(const DensityFunction& f, int t) {
  if (t < 2) throw InputError("t-fold convolution requires t >= 2");
  const auto spectrum = dft(f);
  ComplexVector power(f.p());
  for (Eigen::Index a = 0; a < power.size(); ++a) power[a] = std::pow(spectrum.coeffs()[a], t);
  TfoldResult out;
  out.values = idft_real(power).values;
  out.scale = power.cwiseAbs().sum() / static_cast<double>(f.p());
  const double min_abs = out.values.cwiseAbs().minCoeff();
  out.dynamic_range = min_abs > 0.0 ? out.scale / min_abs : std::numeric_limits<double>::infinity();
  out.precision_limited = out.dynamic_range > 0x1p52;
  return out;
}

RealVector tfold_convolution_direct(const DensityFunction& f, int t) {
  if (t < 2) throw InputError("t-fold convolution requires t >= 2");
  RealVector acc = f.values();
  for (int i = 1; i < t; ++i) acc = convolve_direct<double>(f.values(), acc);
  return acc;
}

Theorem2Verdict theorem2_report(const DensityFunction& f, std::size_t k, int t, std::uint64_t seed,
                                double positivity_tol) {
  if (t < 3) throw InputError("repeated-sum theorem requires t >= 3");
  if (f.is_zero()) throw InputError("f is identically zero");
  const PrimeField& field = f.field();
  const std::int64_t p = f.p();
  const auto spectrum = dft(f);
  const auto cert = gap_ratio(spectrum, k);

  Theorem2Verdict v;
  v.p = p;
  v.k = k;
  v.t = t;
  v.seed = seed;
  v.theta = f.theta();
  v.gamma = cert.gamma;
  v.lambda_k = cert.lambda_k;
  v.lambda_k1 = cert.lambda_k1;
  v.gamma_threshold = gamma_threshold(t, v.theta, v.lambda_k, p);
  v.gamma_ok = v.gamma < v.gamma_threshold;
  v.k_range_applicable = p >= 16;
  v.k_range_ok = v.k_range_applicable && k_range_check(k, t, p);
  v.in_hypothesis = v.gamma_ok && v.k_range_ok;

  const auto tfold = tfold_convolution(f, t);
  v.positivity_threshold = positivity_threshold(p, positivity_tol);
  v.min_value = tfold.values.minCoeff();
  v.positive_everywhere = v.min_value > v.positivity_threshold;
  v.precision_limited = tfold.precision_limited;
  if (p <= kDirectCheckLimit) {
    const RealVector direct = tfold_convolution_direct(f, t);
    v.direct_residual = (direct - tfold.values).cwiseAbs().maxCoeff() / std::max(1.0, direct.cwiseAbs().maxCoeff());
  }

  try {
    v.chain = build_difference_chain(spectrum.top_frequencies(k), field, seed);
  } catch (const NotFoundError& e) {
    v.chain_error = e.what();
  }

  if (v.chain) {
    const auto& chain = *v.chain;
    const int m = static_cast<int>(chain.m());
    v.chain_within_t = m <= t - 1;
    if (v.chain_within_t) {
      v.modulated_checked = true;
      // Independent evaluation: convolve the actual modulated functions.
      const ComplexVector fc = f.values().cast<std::complex<double>>();
      const auto method = p <= kDirectCheckLimit ? ConvolutionMethod::direct : ConvolutionMethod::transform;
      ComplexVector h = fc;
      for (int i = 1; i < t - m; ++i) h = convolve(field, h, fc, method);
      for (auto d : chain.ds) h = convolve(field, h, modulate(f, d), method);

      ComplexVector predicted(p);
      for (std::int64_t a = 0; a < p; ++a) {
        std::complex<double> term = std::pow(spectrum[a], t - m);
        for (auto d : chain.ds) term *= spectrum[a + d];
        predicted[a] = term;
      }
      const ComplexVector measured = forward_transform(h);
      v.identity_residual =
          (measured - predicted).cwiseAbs().maxCoeff() / std::max(1e-300, predicted.cwiseAbs().maxCoeff());

      const auto roots = transform::root_table<double>(p);
      const std::complex<double> main = predicted[chain.base] / static_cast<double>(p);
      const double tol = 1e-9 * std::max(1.0, tfold.scale);
      for (std::int64_t n = 0; n < p; ++n) {
        const auto phase = std::conj(roots[field.mul(chain.base, n)]);
        v.error_max = std::max(v.error_max, std::abs(h[n] - main * phase));
        if (tfold.values[n] < std::abs(h[n]) - tol) v.support_inclusion_holds = false;
      }
      v.error_bound = t * v.gamma * std::pow(v.theta * static_cast<double>(p), t - 2.0) * v.lambda_k;
      v.error_bound_holds = v.error_max <= v.error_bound + tol;
    }
  }

  v.falsified = (v.in_hypothesis && !v.positive_everywhere) || v.identity_residual > kIdentityTolerance ||
                !v.error_bound_holds || !v.support_inclusion_holds;
  return v;
}

}  // namespace sumgap

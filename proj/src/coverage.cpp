#include "sumgap/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sumgap/convolution.hpp"
#include "sumgap/errors.hpp"
#include "sumgap/random.hpp"

namespace sumgap {

double theorem1_bound(std::int64_t p, double theta, double gamma, double lambda_k) {
  if (!(lambda_k > 0.0)) throw InputError("theorem1_bound requires lambda_k > 0");
  if (theta < 0.0 || theta > 1.0 || gamma < 0.0) throw InputError("theorem1_bound requires theta in [0,1], gamma >= 0");
  const double pd = static_cast<double>(p);
  return std::max(0.0, pd * (1.0 - 2.0 * theta * pd * pd * gamma * gamma / (lambda_k * lambda_k)));
}

bool theorem1_hypothesis(std::size_t k, std::int64_t p) { return k >= 1 && unique_difference_hypothesis(k, p); }

GapDifference select_gap_difference(const Spectrum& s, std::size_t k) {
  if (k < 1 || k > static_cast<std::size_t>(s.p())) throw InputError("k outside [1, p]");
  const auto top = s.top_frequencies(k);
  const auto method = unique_difference_hypothesis(k, s.p()) ? DifferenceMethod::constructive
                                                             : DifferenceMethod::exhaustive;
  const auto u = find_unique_difference(top, s.field(), method);
  return {u.d, u.subtrahend, u.minuend, u.method};
}

ErrorProfile error_profile(const DensityFunction& f, const Spectrum& s, std::size_t k, Residue d, Residue a_x) {
  const std::int64_t p = s.p();
  if (!s.field().contains(d) || !s.field().contains(a_x)) throw InputError("error_profile: residue out of range");
  const auto cert = gap_ratio(s, k);
  ComplexVector product(p);
  for (std::int64_t a = 0; a < p; ++a) product[a] = s[a] * s[a + d];
  const std::complex<double> main = product[a_x];
  product[a_x] = 0.0;

  ErrorProfile out;
  out.values = inverse_transform(product);
  out.l2_norm_sq = out.values.squaredNorm();
  out.l2_budget = 2.0 * cert.gamma * cert.gamma * cert.lambda_k * cert.lambda_k * f.mass();
  out.target = cert.lambda_k * cert.lambda_k / static_cast<double>(p);
  out.good_count = (out.values.cwiseAbs().array() < out.target).count();
  out.main_term_modulus = std::abs(main) / static_cast<double>(p);
  return out;
}

CoverageReport theorem1_report(const DensityFunction& f, std::size_t k, double positivity_tol) {
  if (f.is_zero()) throw InputError("f is identically zero");
  const std::int64_t p = f.p();
  const auto spectrum = dft(f);
  const auto cert = gap_ratio(spectrum, k);
  const auto gap = select_gap_difference(spectrum, k);
  const auto profile = error_profile(f, spectrum, k, gap.d, gap.a_x);

  CoverageReport r;
  r.p = p;
  r.k = k;
  r.gamma = cert.gamma;
  r.theta = f.theta();
  r.lambda_k = cert.lambda_k;
  r.lambda_k1 = cert.lambda_k1;
  r.bound = theorem1_bound(p, r.theta, r.gamma, r.lambda_k);
  r.d = gap.d;
  r.a_x = gap.a_x;
  r.a_y = gap.a_y;
  r.method = gap.method;
  r.indicator = f.is_indicator();
  r.in_hypothesis = theorem1_hypothesis(k, p);

  const auto self = convolve(f, f);
  r.positivity_threshold = f.is_indicator() ? 0.0 : positivity_threshold(p, positivity_tol);
  r.exact_support = count_above(self, r.positivity_threshold);
  r.slack = static_cast<double>(r.exact_support) - r.bound;

  r.good_count = profile.good_count;
  r.error_l2 = profile.l2_norm_sq;
  r.l2_budget = profile.l2_budget;
  r.budget_holds = r.error_l2 <= r.l2_budget + kBudgetTolerance;
  r.bound_holds = static_cast<double>(r.exact_support) >= std::ceil(r.bound - 1e-9);
  r.falsified = r.in_hypothesis && !(r.budget_holds && r.bound_holds);
  return r;
}

std::string probe_family_name(ProbeFamily family) {
  switch (family) {
    case ProbeFamily::random_indicator: return "random-indicator";
    case ProbeFamily::interval: return "interval";
    case ProbeFamily::ap_union: return "ap-union";
    case ProbeFamily::spectral: return "spectral";
  }
  return "unknown";
}

DensityFunction probe_instance(ProbeFamily family, const PrimeField& field, std::size_t k, std::uint64_t seed) {
  const std::int64_t p = field.p();
  Engine engine(seed);
  switch (family) {
    case ProbeFamily::random_indicator: {
      // Density uniform in [0.05, 0.95].
      const double density = 0.05 + 0.9 * uniform01(engine);
      const auto size = std::clamp<std::int64_t>(std::llround(density * static_cast<double>(p)), 1, p);
      std::vector<Residue> set;
      std::vector<bool> taken(static_cast<std::size_t>(p), false);
      while (static_cast<std::int64_t>(set.size()) < size) {
        const auto x = static_cast<Residue>(uniform_below(engine, static_cast<std::uint64_t>(p)));
        if (!taken[x]) {
          taken[x] = true;
          set.push_back(x);
        }
      }
      return DensityFunction::indicator(field, std::move(set));
    }
    case ProbeFamily::interval: {
      const auto length = 1 + static_cast<std::int64_t>(uniform_below(engine, static_cast<std::uint64_t>(p - 1)));
      const auto start = static_cast<Residue>(uniform_below(engine, static_cast<std::uint64_t>(p)));
      std::vector<Residue> set;
      for (std::int64_t j = 0; j < length; ++j) set.push_back(field.add(start, j));
      return DensityFunction::indicator(field, std::move(set));
    }
    case ProbeFamily::ap_union: {
      const auto count = 1 + uniform_below(engine, 3);
      std::vector<Residue> set;
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto start = static_cast<Residue>(uniform_below(engine, static_cast<std::uint64_t>(p)));
        const auto step = 1 + static_cast<Residue>(uniform_below(engine, static_cast<std::uint64_t>(p - 1)));
        const auto length = 1 + static_cast<std::int64_t>(uniform_below(engine, static_cast<std::uint64_t>(p / 3)));
        for (std::int64_t j = 0; j < length; ++j) set.push_back(field.add(start, field.mul(j, step)));
      }
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      return DensityFunction::indicator(field, std::move(set));
    }
    case ProbeFamily::spectral: {
      // 1/2 + sum_j cos(2 pi a_j n / p + phi_j) / (2J): a real function in
      // [0,1] with 2J + 1 nonzero coefficients, J chosen near k / 2.
      const auto pairs = std::max<std::size_t>(1, std::min<std::size_t>(k / 2 + uniform_below(engine, 2),
                                                                         static_cast<std::size_t>((p - 1) / 2)));
      std::vector<Residue> freqs;
      std::vector<bool> used(static_cast<std::size_t>(p), false);
      used[0] = true;
      while (freqs.size() < pairs) {
        const auto a = 1 + static_cast<Residue>(uniform_below(engine, static_cast<std::uint64_t>(p - 1)));
        if (used[a]) continue;
        used[a] = used[p - a] = true;
        freqs.push_back(a);
      }
      const auto roots = transform::root_table<double>(p);
      Eigen::VectorXd values = Eigen::VectorXd::Constant(p, 0.5);
      const double amplitude = 0.5 / static_cast<double>(pairs);
      for (auto a : freqs) {
        const std::complex<double> phase = std::polar(1.0, 2.0 * std::numbers::pi * uniform01(engine));
        for (std::int64_t n = 0; n < p; ++n) values[n] += amplitude * (phase * roots[field.mul(a, n)]).real();
      }
      return DensityFunction::from_values(field, std::move(values));
    }
  }
  throw InputError("unknown probe family");
}

std::vector<ProbeRow> conjecture_probe(const ProbeOptions& options) {
  const PrimeField field(options.p);
  std::vector<ProbeRow> rows;
  if (options.k_max < options.k_min) return rows;
  if (options.k_min < 1 || options.k_max > static_cast<std::size_t>(options.p - 1))
    throw InputError("probe k range must lie within [1, p-1]");

  for (std::size_t k = options.k_min; k <= options.k_max; ++k) {
    ProbeRow row;
    row.k = k;
    row.best_gamma = std::numeric_limits<double>::infinity();
    const auto k_seed = derive_seed(options.seed, k);
    for (std::size_t j = 0; j < options.trials; ++j) {
      const auto family = static_cast<ProbeFamily>(j % 4);
      const auto f = probe_instance(family, field, k, derive_seed(k_seed, j));
      if (f.is_zero()) continue;
      const auto spectrum = dft(f);
      if (!has_gap_certificate(spectrum, k)) continue;
      ++row.trials;
      const auto cert = gap_ratio(spectrum, k);
      if (cert.gamma < row.best_gamma) {
        row.best_gamma = cert.gamma;
        row.best_family = family;
      }
      if (cert.gamma > options.strong_gap) continue;
      ++row.strong_gap_count;
      const auto self = convolve(f, f);
      const double threshold = f.is_indicator() ? 0.0 : positivity_threshold(options.p);
      const double coverage = static_cast<double>(count_above(self, threshold)) / static_cast<double>(options.p);
      if (!row.min_coverage || coverage < *row.min_coverage) {
        row.min_coverage = coverage;
        row.bound_at_min = theorem1_bound(options.p, f.theta(), cert.gamma, cert.lambda_k) /
                           static_cast<double>(options.p);
      }
    }
    if (row.trials == 0) row.best_gamma = std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sumgap

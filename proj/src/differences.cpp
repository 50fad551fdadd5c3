#include "sumgap/differences.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sumgap/errors.hpp"
#include "sumgap/random.hpp"

namespace sumgap {

namespace {

std::vector<Residue> checked(const PrimeField& field, const std::vector<Residue>& set, const char* name) {
  if (set.empty()) throw InputError(std::string(name) + " must be nonempty");
  auto out = canonical_set(field, set);
  if (out.size() != set.size()) throw InputError(std::string(name) + " contains repeated residues");
  return out;
}

double ln(double x) { return std::log(x); }

}  // namespace

RepTable::RepTable(const PrimeField& field, const std::vector<Residue>& b1, const std::vector<Residue>& b2)
    : field_(field), counts_(static_cast<std::size_t>(field.p()), 0) {
  for (auto x : b1)
    for (auto y : b2) ++counts_[static_cast<std::size_t>(field_.sub(x, y))];
}

std::int64_t RepTable::total() const { return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0}); }

std::vector<Residue> RepTable::unique_differences() const {
  std::vector<Residue> out;
  for (std::size_t d = 0; d < counts_.size(); ++d)
    if (counts_[d] == 1) out.push_back(static_cast<Residue>(d));
  return out;
}

Residue RepTable::argmin_positive() const {
  Residue best = -1;
  for (std::size_t d = 0; d < counts_.size(); ++d) {
    if (counts_[d] > 0 && (best < 0 || counts_[d] < counts_[static_cast<std::size_t>(best)]))
      best = static_cast<Residue>(d);
  }
  return best;
}

RepTable rep_table(const PrimeField& field, const std::vector<Residue>& b1, const std::vector<Residue>& b2) {
  return RepTable(field, checked(field, b1, "B1"), checked(field, b2, "B2"));
}

std::int64_t count_representations(const PrimeField& field, const std::vector<Residue>& b1,
                                   const std::vector<Residue>& b2, Residue d) {
  std::int64_t n = 0;
  for (auto y : b2)
    if (std::binary_search(b1.begin(), b1.end(), field.add(y, d))) ++n;
  return n;
}

bool unique_difference_hypothesis(std::size_t t, std::int64_t p) {
  // p > 4^t; 4^t overflows long before p can exceed it.
  if (t >= 31) return false;
  return static_cast<std::uint64_t>(p) > (std::uint64_t{1} << (2 * t));
}

std::optional<UniqueDifference> smallest_unique_difference(const PrimeField& field, const std::vector<Residue>& b1,
                                                           const std::vector<Residue>& b2) {
  const RepTable table(field, b1, b2);
  const auto& counts = table.counts();
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] != 1) continue;
    for (auto y : b2) {
      const Residue x = field.add(y, static_cast<Residue>(d));
      if (std::binary_search(b1.begin(), b1.end(), x))
        return UniqueDifference{static_cast<Residue>(d), x, y, DifferenceMethod::exhaustive, std::nullopt};
    }
  }
  return std::nullopt;
}

UniqueDifference find_unique_difference(const std::vector<Residue>& b, const PrimeField& field,
                                        DifferenceMethod method) {
  const auto set = checked(field, b, "B");
  const std::int64_t p = field.p();
  if (method == DifferenceMethod::exhaustive) {
    auto found = smallest_unique_difference(field, set, set);
    if (!found) throw NotFoundError("no difference in B - B has a unique representation");
    return *found;
  }
  if (!unique_difference_hypothesis(set.size(), p))
    throw InputError("constructive unique difference requires p > 4^|B| (|B| = " + std::to_string(set.size()) + ")");

  const auto witness = find_dilation(set, field);
  const auto dilated = dilate_set(set, witness.m, field);
  for (auto c : dilated)
    if (4 * std::llabs(c) >= p) throw FalsificationError("dilated element escaped (-p/4, p/4)");
  const auto lo = std::min_element(dilated.begin(), dilated.end()) - dilated.begin();
  const auto hi = std::max_element(dilated.begin(), dilated.end()) - dilated.begin();
  const Residue d = field.mul(field.inv(witness.m), field.reduce(dilated[hi] - dilated[lo]));
  UniqueDifference out{d, set[hi], set[lo], DifferenceMethod::constructive, witness};
  if (count_representations(field, set, set, d) != 1)
    throw FalsificationError("constructive difference " + std::to_string(d) + " is not unique");
  return out;
}

double few_reps_bound(std::size_t b1_size, std::size_t b2_size, std::int64_t p) {
  const double l1 = ln(static_cast<double>(b1_size));
  return 20.0 * static_cast<double>(b2_size) * l1 * l1 / ln(static_cast<double>(p));
}

double sampling_probability(std::size_t b1_size, std::size_t b2_size, std::int64_t p) {
  return ln(static_cast<double>(p)) / (3.0 * static_cast<double>(b2_size) * ln(static_cast<double>(b1_size)));
}

namespace detail {

std::optional<UniqueDifference> interval_candidate(const PrimeField& field, const std::vector<Residue>& b1,
                                                   const std::vector<Residue>& b2, Residue m) {
  std::vector<Residue> c1;
  c1.reserve(b1.size());
  for (auto b : b1) c1.push_back(field.mul(m, b));
  std::sort(c1.begin(), c1.end());

  // Widest run of residues free of m B1, between consecutive u and v.
  std::size_t best = 0;
  std::int64_t best_gap = -1;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const Residue u = c1[i];
    const Residue v = c1[(i + 1) % c1.size()];
    const std::int64_t gap = field.reduce(v - u - 1);
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  const Residue u = c1[best];
  const Residue v = c1[(best + 1) % c1.size()];

  const auto c2 = dilate_set(b2, m, field);
  const auto [lo, hi] = std::minmax_element(c2.begin(), c2.end());
  const Residue m_inv = field.inv(m);
  for (const Residue candidate : {field.reduce(u - *lo), field.reduce(v - *hi)}) {
    const Residue d = field.mul(m_inv, candidate);
    if (count_representations(field, b1, b2, d) != 1) continue;
    for (auto y : b2) {
      const Residue x = field.add(y, d);
      if (std::binary_search(b1.begin(), b1.end(), x))
        return UniqueDifference{d, x, y, DifferenceMethod::constructive, std::nullopt};
    }
  }
  return std::nullopt;
}

UniqueDifference unique_procedure(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                                  const PrimeField& field) {
  if (b1.size() > 1) {
    const auto witness = find_dilation(b2, field);
    if (auto found = interval_candidate(field, b1, b2, witness.m)) {
      found->dilation = witness;
      return *found;
    }
  }
  auto found = smallest_unique_difference(field, b1, b2);
  if (!found) throw NotFoundError("no difference in B1 - B2 has a unique representation");
  return *found;
}

FewRepsResult few_reps_procedure(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                                 const PrimeField& field, std::uint64_t seed) {
  const std::int64_t p = field.p();
  FewRepsResult out;
  out.bound = few_reps_bound(b1.size(), b2.size(), p);
  const double q = sampling_probability(b1.size(), b2.size(), p);
  const double max_sample = ln(static_cast<double>(p)) / (2.0 * ln(static_cast<double>(b1.size())));

  Engine engine(seed);
  for (out.attempts = 1; out.attempts <= kMaxSampleAttempts; ++out.attempts) {
    std::vector<Residue> sample;
    for (auto b : b2)
      if (uniform01(engine) < q) sample.push_back(b);
    if (sample.empty() || !(static_cast<double>(sample.size()) < max_sample)) continue;
    const auto witness = find_dilation(sample, field);
    const auto found = interval_candidate(field, b1, sample, witness.m);
    if (!found) continue;
    const auto nu = count_representations(field, b1, b2, found->d);
    if (static_cast<double>(nu) > out.bound) continue;
    out.d = found->d;
    out.nu = nu;
    out.path = FewRepsPath::sampled;
    out.sample = std::move(sample);
    return out;
  }
  out.attempts = kMaxSampleAttempts;
  const RepTable table(field, b1, b2);
  out.d = table.argmin_positive();
  out.nu = table.nu(out.d);
  out.path = FewRepsPath::exhaustive_fallback;
  out.bound_violated = static_cast<double>(out.nu) > out.bound;
  return out;
}

}  // namespace detail

FewRepsResult lemma3_few_reps(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                              const PrimeField& field, std::uint64_t seed) {
  const auto s1 = checked(field, b1, "B1");
  const auto s2 = checked(field, b2, "B2");
  const std::int64_t p = field.p();
  if (s1.size() < 10 || 2 * static_cast<std::int64_t>(s1.size()) > p)
    throw InputError("few-representation lemma requires 10 <= |B1| <= p/2");
  if (!(3.0 * static_cast<double>(s2.size()) * ln(static_cast<double>(s1.size())) > ln(static_cast<double>(p))))
    throw InputError("few-representation lemma requires 3|B2| ln|B1| > ln p");
  return detail::few_reps_procedure(s1, s2, field, seed);
}

UniqueDifference lemma3_unique(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                               const PrimeField& field) {
  const auto s1 = checked(field, b1, "B1");
  const auto s2 = checked(field, b2, "B2");
  const std::int64_t p = field.p();
  if (2 * static_cast<std::int64_t>(s1.size()) > p) throw InputError("unique-difference lemma requires |B1| <= p/2");
  if (!(3.0 * static_cast<double>(s2.size()) * ln(static_cast<double>(s1.size())) < ln(static_cast<double>(p))))
    throw InputError("unique-difference lemma requires 3|B2| ln|B1| < ln p");
  auto out = detail::unique_procedure(s1, s2, field);
  if (count_representations(field, s1, s2, out.d) != 1)
    throw FalsificationError("returned difference is not unique");
  return out;
}

}  // namespace sumgap

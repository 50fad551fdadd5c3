#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumgap/diophantine.hpp"
#include "sumgap/prime_field.hpp"

namespace sumgap {

/// nu(d) = |{(b1, b2) in B1 x B2 : b1 - b2 = d}| for every residue d.
class RepTable {
 public:
  RepTable(const PrimeField& field, const std::vector<Residue>& b1, const std::vector<Residue>& b2);

  std::int64_t nu(Residue d) const { return counts_[static_cast<std::size_t>(field_.reduce(d))]; }
  const std::vector<std::int64_t>& counts() const { return counts_; }
  std::int64_t total() const;
  /// Residues with nu(d) == 1, ascending.
  std::vector<Residue> unique_differences() const;
  /// Smallest residue attaining the minimum positive count.
  Residue argmin_positive() const;

 private:
  PrimeField field_;
  std::vector<std::int64_t> counts_;
};

/// Requires both sets nonempty.
RepTable rep_table(const PrimeField& field, const std::vector<Residue>& b1, const std::vector<Residue>& b2);

/// nu(d) for a single d, without building the full table. b1 must be sorted.
std::int64_t count_representations(const PrimeField& field, const std::vector<Residue>& b1,
                                   const std::vector<Residue>& b2, Residue d);

enum class DifferenceMethod { constructive, exhaustive };

struct UniqueDifference {
  Residue d = 0;
  Residue minuend = 0;     // b1
  Residue subtrahend = 0;  // b2, with b1 - b2 = d
  DifferenceMethod method = DifferenceMethod::exhaustive;
  std::optional<DilationWitness> dilation;
};

/// True when t < ln p / ln 4, i.e. p > 4^t.
bool unique_difference_hypothesis(std::size_t t, std::int64_t p);

/// Smallest d with nu(d) == 1 in B1 - B2, if any.
std::optional<UniqueDifference> smallest_unique_difference(const PrimeField& field, const std::vector<Residue>& b1,
                                                           const std::vector<Residue>& b2);

/// Unique difference in B - B. Constructive mode dilates B into (-p/4, p/4)
/// and returns max - min; it requires p > 4^|B|. Exhaustive mode returns the
/// smallest unique difference and throws NotFoundError when none exists.
UniqueDifference find_unique_difference(const std::vector<Residue>& b, const PrimeField& field,
                                        DifferenceMethod method);

/// Cap on sampling rounds before the exhaustive fallback.
inline constexpr int kMaxSampleAttempts = 100;

enum class FewRepsPath { sampled, exhaustive_fallback };

struct FewRepsResult {
  Residue d = 0;
  double bound = 0.0;  // 20 |B2| (ln |B1|)^2 / ln p
  std::int64_t nu = 0;
  FewRepsPath path = FewRepsPath::sampled;
  int attempts = 0;
  bool bound_violated = false;  // even the exhaustive minimum exceeds bound
  std::vector<Residue> sample;  // accepted B' (empty on fallback)
};

double few_reps_bound(std::size_t b1_size, std::size_t b2_size, std::int64_t p);
double sampling_probability(std::size_t b1_size, std::size_t b2_size, std::int64_t p);

/// Difference in B1 - B2 with few representations, via a seeded random
/// thinning B' of B2 and the dilation/interval argument on B1 - B'.
/// Requires 10 <= |B1| <= p/2 and 3 |B2| ln |B1| > ln p.
FewRepsResult lemma3_few_reps(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                              const PrimeField& field, std::uint64_t seed);

/// Unique difference in B1 - B2 for small B2.
/// Requires 1 <= |B1| <= p/2 and 3 |B2| ln |B1| < ln p.
UniqueDifference lemma3_unique(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                               const PrimeField& field);

namespace detail {

// The procedures above without the size preconditions; the difference chain
// drives them outside the ranges the analysis covers.
FewRepsResult few_reps_procedure(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                                 const PrimeField& field, std::uint64_t seed);
UniqueDifference unique_procedure(const std::vector<Residue>& b1, const std::vector<Residue>& b2,
                                  const PrimeField& field);

// Tests u - min(m B2) and v - max(m B2) where (u, v) is the widest empty
// cyclic gap of m B1. Returns the first with nu == 1.
std::optional<UniqueDifference> interval_candidate(const PrimeField& field, const std::vector<Residue>& b1,
                                                   const std::vector<Residue>& b2, Residue m);

}  // namespace detail

}  // namespace sumgap

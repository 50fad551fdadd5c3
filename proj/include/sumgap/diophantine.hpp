#pragma once

#include <cstdint>
#include <vector>

#include "sumgap/prime_field.hpp"

namespace sumgap {

/// A nonzero dilation m making every m * r_i small in balanced form.
struct DilationWitness {
  Residue m = 1;
  double bound = 0.0;         // p^{1 - 1/t}
  std::int64_t achieved = 0;  // max_i |balanced(m r_i)|
};

/// Smallest m in [1, p-1] with |balanced(m r_i)| <= p^{1-1/t} for all i
/// (equivalently ||m r_i / p|| <= p^{-1/t}). The box principle guarantees a
/// hit, so the scan is total. Requires t >= 1.
DilationWitness find_dilation(const std::vector<Residue>& rs, const PrimeField& field);

/// Same scan against an explicit bound; returns m = 0 if no m qualifies.
DilationWitness find_dilation_within(const std::vector<Residue>& rs, const PrimeField& field, long double bound);

/// {balanced(m b) : b in set}, in the order of the input. Throws for m = 0.
std::vector<std::int64_t> dilate_set(const std::vector<Residue>& set, Residue m, const PrimeField& field);

/// ||x|| for x = m r / p: distance from m r / p to the nearest integer.
double distance_to_integer(Residue m, Residue r, const PrimeField& field);

}  // namespace sumgap

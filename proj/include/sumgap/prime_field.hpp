#pragma once

#include <cstdint>
#include <vector>

namespace sumgap {

using Residue = std::int64_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The field Z/pZ. Construction certifies primality and p >= 3.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t p() const { return p_; }
  std::int64_t size() const { return p_; }

  Residue reduce(std::int64_t x) const {
    const std::int64_t r = x % p_;
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue a, Residue b) const { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const { return reduce(a - b); }
  Residue neg(Residue a) const { return reduce(-a); }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<__int128>(a) * b) % p_);
  }
  Residue pow(Residue base, std::uint64_t e) const;
  /// Multiplicative inverse; throws InputError for 0.
  Residue inv(Residue a) const;

  bool contains(std::int64_t x) const { return x >= 0 && x < p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::int64_t p_;
};

/// Representative of x (mod p) in (-p/2, p/2].
std::int64_t balanced(Residue x, std::int64_t p);

/// Sorted, duplicate-free residues; throws InputError on out-of-range values.
std::vector<Residue> canonical_set(const PrimeField& field, std::vector<std::int64_t> elements);

}  // namespace sumgap

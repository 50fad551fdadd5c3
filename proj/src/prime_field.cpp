#include "sumgap/prime_field.hpp"

#include <algorithm>
#include <string>

#include "sumgap/errors.hpp"

namespace sumgap {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p < 3) throw InputError("modulus must be at least 3, got " + std::to_string(p));
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("composite modulus: " + std::to_string(p) + " is not prime");
}

Residue PrimeField::pow(Residue base, std::uint64_t e) const {
  return static_cast<Residue>(powmod(static_cast<std::uint64_t>(reduce(base)), e,
                                     static_cast<std::uint64_t>(p_)));
}

Residue PrimeField::inv(Residue a) const {
  const Residue r = reduce(a);
  if (r == 0) throw InputError("zero has no multiplicative inverse");
  return pow(r, static_cast<std::uint64_t>(p_ - 2));
}

std::int64_t balanced(Residue x, std::int64_t p) { return 2 * x <= p ? x : x - p; }

std::vector<Residue> canonical_set(const PrimeField& field, std::vector<std::int64_t> elements) {
  for (auto x : elements) {
    if (!field.contains(x))
      throw InputError("residue " + std::to_string(x) + " outside [0, " + std::to_string(field.p()) + ")");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

}  // namespace sumgap

#include "sumgap/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "sumgap/errors.hpp"

namespace sumgap {

DilationWitness find_dilation_within(const std::vector<Residue>& rs, const PrimeField& field, long double bound) {
  const std::int64_t p = field.p();
  for (auto r : rs)
    if (!field.contains(r)) throw InputError("residue out of range in find_dilation");
  for (Residue m = 1; m < p; ++m) {
    std::int64_t worst = 0;
    for (auto r : rs) {
      const auto c = std::llabs(balanced(field.mul(m, r), p));
      if (static_cast<long double>(c) > bound) {
        worst = -1;
        break;
      }
      worst = std::max<std::int64_t>(worst, c);
    }
    if (worst >= 0) return {m, static_cast<double>(bound), worst};
  }
  return {0, static_cast<double>(bound), 0};
}

DilationWitness find_dilation(const std::vector<Residue>& rs, const PrimeField& field) {
  if (rs.empty()) throw InputError("find_dilation needs at least one residue");
  const auto t = static_cast<long double>(rs.size());
  const long double bound = std::pow(static_cast<long double>(field.p()), 1.0L - 1.0L / t);
  auto w = find_dilation_within(rs, field, bound);
  if (w.m == 0) throw FalsificationError("box principle failed: no dilation within p^{1-1/t}");
  return w;
}

std::vector<std::int64_t> dilate_set(const std::vector<Residue>& set, Residue m, const PrimeField& field) {
  if (field.reduce(m) == 0) throw InputError("dilation by zero is not a bijection");
  std::vector<std::int64_t> out;
  out.reserve(set.size());
  for (auto b : set) out.push_back(balanced(field.mul(field.reduce(m), field.reduce(b)), field.p()));
  return out;
}

double distance_to_integer(Residue m, Residue r, const PrimeField& field) {
  return static_cast<double>(std::llabs(balanced(field.mul(m, r), field.p()))) / static_cast<double>(field.p());
}

}  // namespace sumgap

#pragma once

// Length-n discrete Fourier transform kernels, templated on the real scalar.
//
// Sign convention: forward is X[a] = sum_n x[n] e^{+2 pi i a n / n_len},
// inverse (unnormalized) uses e^{-2 pi i a n / n_len}. Phases are always taken
// from a table indexed by the exact integer (a * n) mod n_len, so no
// floating-point angle accumulation occurs.

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sumgap::transform {

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

enum class Sign : int { forward = +1, inverse = -1 };

/// table[k] = e^{+2 pi i k / n}, with table[n-k] == conj(table[k]) bitwise.
template <typename Real>
std::vector<std::complex<Real>> root_table(std::int64_t n) {
  std::vector<std::complex<Real>> table(static_cast<std::size_t>(n));
  const long double step = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(n);
  for (std::int64_t k = 0; 2 * k <= n; ++k) {
    const long double angle = step * static_cast<long double>(k);
    table[k] = std::complex<Real>(static_cast<Real>(std::cos(angle)), static_cast<Real>(std::sin(angle)));
    if (k > 0) table[n - k] = std::conj(table[k]);
  }
  return table;
}

/// O(n^2) reference evaluation.
template <typename Real>
ComplexVector<Real> dft_direct(const ComplexVector<Real>& x, Sign sign) {
  const std::int64_t n = x.size();
  const auto table = root_table<Real>(n);
  ComplexVector<Real> out(n);
  for (std::int64_t a = 0; a < n; ++a) {
    std::complex<Real> acc(0);
    std::int64_t idx = 0;  // (a * j) mod n
    for (std::int64_t j = 0; j < n; ++j) {
      const auto w = sign == Sign::forward ? table[idx] : std::conj(table[idx]);
      acc += x[j] * w;
      idx += a;
      if (idx >= n) idx -= n;
    }
    out[a] = acc;
  }
  return out;
}

namespace detail {

// In-place iterative radix-2 transform; x.size() must be a power of two.
template <typename Real>
void fft_pow2(std::vector<std::complex<Real>>& x, Sign sign) {
  const std::size_t n = x.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  const auto table = root_table<Real>(static_cast<std::int64_t>(n));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto w = sign == Sign::forward ? table[k * stride] : std::conj(table[k * stride]);
        const auto u = x[i + k];
        const auto v = x[i + k + len / 2] * w;
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace detail

/// Bluestein chirp-z evaluation for odd n, O(n log n).
///
/// Uses a n = h(a) + h(j) - h(a - j) (mod n) with h(k) = k^2 / 2 (mod n), which
/// turns the transform into a length-n cyclic correlation carried out by a
/// zero-padded power-of-two FFT.
template <typename Real>
ComplexVector<Real> dft_bluestein(const ComplexVector<Real>& x, Sign sign) {
  const std::int64_t n = x.size();
  if (n % 2 == 0) throw std::invalid_argument("dft_bluestein requires odd length");
  const auto table = root_table<Real>(n);
  const std::int64_t half = (n + 1) / 2;  // inverse of 2 mod n
  std::vector<std::complex<Real>> chirp(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const auto sq = static_cast<std::int64_t>((static_cast<__int128>(k) * k) % n);
    const auto h = static_cast<std::int64_t>((static_cast<__int128>(sq) * half) % n);
    chirp[k] = sign == Sign::forward ? table[h] : std::conj(table[h]);
  }
  std::size_t m = 1;
  while (m < static_cast<std::size_t>(2 * n - 1)) m <<= 1;
  std::vector<std::complex<Real>> y(m), b(m);
  for (std::int64_t j = 0; j < n; ++j) y[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::int64_t s = 1; s < n; ++s) {
    b[s] = std::conj(chirp[s]);
    b[m - s] = std::conj(chirp[n - s]);
  }
  detail::fft_pow2(y, Sign::forward);
  detail::fft_pow2(b, Sign::forward);
  for (std::size_t i = 0; i < m; ++i) y[i] *= b[i];
  detail::fft_pow2(y, Sign::inverse);
  const Real scale = Real(1) / static_cast<Real>(m);
  ComplexVector<Real> out(n);
  for (std::int64_t a = 0; a < n; ++a) out[a] = chirp[a] * y[a] * scale;
  return out;
}

enum class Method { automatic, direct, fast };

/// Below this length the direct sum is used by Method::automatic.
inline constexpr std::int64_t kFastThreshold = 64;

template <typename Real>
ComplexVector<Real> dft(const ComplexVector<Real>& x, Sign sign, Method method = Method::automatic) {
  const bool fast = method == Method::fast ||
                    (method == Method::automatic && x.size() > kFastThreshold && x.size() % 2 == 1);
  return fast ? dft_bluestein(x, sign) : dft_direct(x, sign);
}

}  // namespace sumgap::transform

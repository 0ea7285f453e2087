#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace kfl::detail {

// In-place radix-2 forward FFT: a[m] <- sum_j a[j] exp(-2*pi*i*j*m/n).
// n must be a power of two.
inline void fft_radix2(std::vector<std::complex<double>>& a) {
  const std::size_t n = a.size();
  if (n < 2) return;
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        // resync the twiddle periodically to stop accumulated rounding
        if ((j & 255u) == 0)
          w = std::complex<double>(std::cos(ang * static_cast<double>(j)),
                                   std::sin(ang * static_cast<double>(j)));
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace kfl::detail

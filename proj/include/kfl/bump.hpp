#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "kfl/detail/fft.hpp"
#include "kfl/detail/gauss.hpp"
#include "kfl/errors.hpp"

namespace kfl {

// The mollifier phi(x) = c * exp(-1/(x(1-x))) on (0,1), normalized to unit
// mass, together with fast evaluation of its Fourier transform
// phi_hat(u) = int_0^1 phi(x) exp(-2 pi i u x) dx.
//
// phi is symmetric about 1/2, so phi_hat(u) = exp(-i pi u) * g(u) with
// g(u) = int phi(x) cos(2 pi u (x - 1/2)) dx real and even. g is smooth and
// non-oscillatory, which is what makes a cubic interpolation table accurate;
// the oscillation is carried analytically by the unimodular factor. The
// table is filled by an FFT of uniform samples: phi extends to a C-infinity
// periodic function (all derivatives vanish at 0 and 1), so the uniform-grid
// sums are accurate to the aliasing level |phi_hat(N - u_max)|, far below
// 1e-12 for N = 2^15. Direct panel Gauss-Legendre quadrature is kept as the
// evaluator beyond the table and as an independent route for tests.
class bump_profile {
 public:
  struct options {
    double max_cached_freq = 4096.0;  // table covers |u| <= this
    double grid_step = 1.0 / 64.0;    // table spacing (power of two reciprocal)
    int quad_order = 12;              // Gauss-Legendre order per direct panel
  };

  bump_profile() : bump_profile(options()) {}

  explicit bump_profile(const options& opt) : opt_(opt) {
    if (!(opt_.max_cached_freq >= 8) || !(opt_.grid_step > 0) || opt_.quad_order < 4)
      throw bad_parameters("bump_profile: bad cache options");
    build();
  }

  // phi(x); zero outside (0,1)
  double phi(double x) const {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return c_ * std::exp(-1.0 / (x * (1.0 - x)));
  }

  double normalization() const { return c_; }
  double max_cached_freq() const { return umax_; }
  double grid_step() const { return h_; }

  // phi_hat via the table for |u| <= max_cached_freq, direct quadrature
  // beyond. Conjugate symmetry phi_hat(-u) == conj(phi_hat(u)) is exact by
  // construction. Absolute error <= 1e-8 (in practice ~1e-9).
  std::complex<double> phi_hat(double u) const {
    const double au = std::fabs(u);
    if (au > umax_) return phi_hat_direct(u);
    const double g = interp_g(au);
    const double ph = -M_PI * u;
    return std::complex<double>(std::cos(ph) * g, std::sin(ph) * g);
  }

  // |phi_hat(u)| without the phase factor; the hot path of measure sums.
  double phi_hat_abs(double u) const {
    const double au = std::fabs(u);
    if (au > umax_) return std::abs(phi_hat_direct(u));
    return std::fabs(interp_g(au));
  }

  // Direct panel quadrature of the oscillatory integral, panel width
  // <= 1/(4(1+|u|)) so each panel sees a bounded phase change.
  std::complex<double> phi_hat_direct(double u) const {
    const auto& rule = detail::gauss_legendre(opt_.quad_order);
    const double width = std::min(1.0 / 16.0, 1.0 / (4.0 * (1.0 + std::fabs(u))));
    const int panels = static_cast<int>(std::ceil(1.0 / width));
    const double w = 1.0 / panels;
    std::complex<double> acc(0.0, 0.0);
    for (int p = 0; p < panels; ++p) {
      const double mid = (p + 0.5) * w;
      const double half = 0.5 * w;
      for (int i = 0; i < opt_.quad_order; ++i) {
        const double x = mid + half * rule.nodes[i];
        const double ph = -2.0 * M_PI * u * x;
        acc += rule.weights[i] * half * phi(x) *
               std::complex<double>(std::cos(ph), std::sin(ph));
      }
    }
    return acc;
  }

  // Measured constant C_N with |phi_hat(u)| <= C_N / u^N over [u_min, u_max],
  // scanned on the cache grid.
  double measured_decay_constant(int n, double u_min = 1.0, double u_max = 1000.0) const {
    if (n < 1 || !(u_min > 0) || !(u_max > u_min))
      throw bad_parameters("measured_decay_constant: bad arguments");
    const std::size_t lo = static_cast<std::size_t>(std::ceil(u_min / h_));
    const std::size_t hi =
        std::min(g_.size() - 1, static_cast<std::size_t>(std::floor(std::min(u_max, umax_) / h_)));
    double best = 0.0;
    for (std::size_t m = lo; m <= hi; ++m) {
      const double u = static_cast<double>(m) * h_;
      best = std::max(best, std::fabs(g_[m]) * std::pow(u, n));
    }
    return best;
  }

 private:
  void build() {
    const std::size_t n = std::size_t{1} << 15;  // spatial samples
    // total FFT size: frequency step h = n / m, choose m power of two
    std::size_t m = std::size_t{1} << 15;
    while (static_cast<double>(n) / static_cast<double>(m) > opt_.grid_step) m <<= 1;
    h_ = static_cast<double>(n) / static_cast<double>(m);
    // unnormalized mass by the uniform-grid sum (spectrally accurate here)
    double raw_mass = 0.0;
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = static_cast<double>(j) / static_cast<double>(n);
      const double v = (x <= 0.0 || x >= 1.0) ? 0.0 : std::exp(-1.0 / (x * (1.0 - x)));
      samples[j] = v;
      raw_mass += v;
    }
    raw_mass /= static_cast<double>(n);
    c_ = 1.0 / raw_mass;

    std::vector<std::complex<double>> buf(m, std::complex<double>(0.0, 0.0));
    const double scale = c_ / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) buf[j] = samples[j] * scale;
    detail::fft_radix2(buf);

    const std::size_t count = static_cast<std::size_t>(std::floor(opt_.max_cached_freq / h_)) + 4;
    if (count + 1 > m / 2) throw bad_parameters("bump_profile: cache grid too fine for FFT size");
    g_.resize(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
      const double u = static_cast<double>(i) * h_;
      const double ph = M_PI * u;  // demodulate the carrier exp(-i pi u)
      g_[i] = buf[i].real() * std::cos(ph) - buf[i].imag() * std::sin(ph);
    }
    umax_ = opt_.max_cached_freq;
  }

  // centered 4-point Lagrange interpolation of the even function g
  double interp_g(double au) const {
    const double s = au / h_;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::floor(s));
    const double t = s - static_cast<double>(i);
    // stencil i-1 .. i+2, reflected at 0 (g is even)
    auto at = [&](std::ptrdiff_t j) {
      if (j < 0) j = -j;
      return g_[static_cast<std::size_t>(j)];
    };
    const double gm1 = at(i - 1), g0 = at(i), g1 = at(i + 1), g2 = at(i + 2);
    const double a = -t * (t - 1.0) * (t - 2.0) / 6.0;
    const double b = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
    const double c = -(t + 1.0) * t * (t - 2.0) / 2.0;
    const double d = (t + 1.0) * t * (t - 1.0) / 6.0;
    return a * gm1 + b * g0 + c * g1 + d * g2;
  }

  options opt_;
  double c_ = 0.0;
  double h_ = 0.0;
  double umax_ = 0.0;
  std::vector<double> g_;
};

// Shared default profile; built once, immutable afterwards.
inline std::shared_ptr<const bump_profile> default_bump() {
  static std::shared_ptr<const bump_profile> p = std::make_shared<bump_profile>();
  return p;
}

}  // namespace kfl

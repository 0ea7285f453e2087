#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kfl/detail/gauss.hpp"
#include "kfl/detail/parallel.hpp"
#include "kfl/errors.hpp"
#include "kfl/orientation.hpp"

namespace kfl {

struct frequency_sample {
  Eigen::VectorXd xi;
  std::complex<double> value;  // mu_hat(xi)
  double envelope = 0.0;       // translation-free upper bound at xi
};

// Fourier transform of the measure induced by the spec:
//   mu_hat(xi) = sum_j w_j exp(-2 pi i t_j . xi) prod_i phi_hat(xi . x_i^j).
// The factorization through phi_hat is exact for a discrete orientation
// measure; no quadrature over the cube variable is involved.
inline std::complex<double> mu_hat(const kakeya_measure_spec& spec, const Eigen::VectorXd& xi) {
  const auto& gamma = spec.orientation;
  if (xi.size() != gamma.ambient_dim) throw dimension_mismatch("mu_hat: xi dimension");
  const bump_profile& bp = *spec.bump;
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < gamma.atoms.size(); ++j) {
    const auto& a = gamma.atoms[j];
    std::complex<double> term(a.mass, 0.0);
    for (int i = 0; i < a.plane.plane_dim; ++i)
      term *= bp.phi_hat(a.plane.basis.col(i).dot(xi));
    const double tdot = spec.translations[j].dot(xi);
    if (tdot != 0.0) {
      const double ph = -2.0 * M_PI * tdot;
      term *= std::complex<double>(std::cos(ph), std::sin(ph));
    }
    acc += term;
  }
  return acc;
}

// Translation-free envelope sum_j w_j prod_i |phi_hat(xi . x_i^j)|;
// dominates |mu_hat| pointwise and is bit-identical under any change of the
// translation assignment.
inline double mu_hat_envelope(const kakeya_measure_spec& spec, const Eigen::VectorXd& xi) {
  const auto& gamma = spec.orientation;
  if (xi.size() != gamma.ambient_dim) throw dimension_mismatch("mu_hat_envelope: xi dimension");
  const bump_profile& bp = *spec.bump;
  double acc = 0.0;
  for (const auto& a : gamma.atoms) {
    double term = a.mass;
    for (int i = 0; i < a.plane.plane_dim; ++i)
      term *= bp.phi_hat_abs(a.plane.basis.col(i).dot(xi));
    acc += term;
  }
  return acc;
}

inline frequency_sample sample_mu_hat(const kakeya_measure_spec& spec, const Eigen::VectorXd& xi) {
  return {xi, mu_hat(spec, xi), mu_hat_envelope(spec, xi)};
}

// The two-term bound eta^beta + (eta |xi|)^{-N} with eta = |xi|^{-alpha} and
// N = alpha*beta/(1-alpha). Both terms equal |xi|^{-alpha*beta}, so the
// value is 2 |xi|^{-alpha*beta}; suppressed constants are dropped.
inline double split_bound(double beta, double alpha, double xi_norm) {
  if (!(alpha > 0) || !(alpha < 1) || !(beta > 0) || !(xi_norm > 1))
    throw bad_parameters("split_bound: need 0 < alpha < 1, beta > 0, |xi| > 1");
  const double eta = std::pow(xi_norm, -alpha);
  const double big_n = alpha * beta / (1.0 - alpha);
  return std::pow(eta, beta) + std::pow(eta * xi_norm, -big_n);
}

namespace detail {

// Composite Gauss-Legendre over [0,1] with panel count scaled to resolve a
// phase of at most one cycle per panel at frequency `freq`.
struct radial_rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline radial_rule radial_quadrature(int min_nodes, double freq, int order) {
  const auto& base = gauss_legendre(order);
  int panels = std::max((min_nodes + order - 1) / order,
                        static_cast<int>(std::ceil(std::fabs(freq))) + 1);
  radial_rule r;
  r.nodes.reserve(static_cast<std::size_t>(panels) * order);
  r.weights.reserve(static_cast<std::size_t>(panels) * order);
  const double w = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * w;
    for (int i = 0; i < order; ++i) {
      r.nodes.push_back(mid + 0.5 * w * base.nodes[i]);
      r.weights.push_back(0.5 * w * base.weights[i]);
    }
  }
  return r;
}

}  // namespace detail

// Tensor-product quadrature for the dual-sphere measure
//   mu_hat(xi) = int_{S^{d-1}} int_0^1 exp(-2 pi i (x_r + r theta) . xi)
//                phi(r) dr dsigma(theta)
// with sigma the normalized surface measure. Gauss-Legendre panels in r,
// quasi-uniform equal-weight nodes in theta; both node counts grow linearly
// with |xi| past the requested minimums (theta quadratically for d = 3),
// capped at ~2^24 total evaluations.
inline std::complex<double> sphere_dual_mu_hat(int d,
                                               const std::function<Eigen::VectorXd(double)>& centers,
                                               const Eigen::VectorXd& xi, int n_r, int n_theta,
                                               const bump_profile& bp) {
  if (d < 2) throw bad_dimensions("sphere_dual_mu_hat: need d >= 2");
  if (xi.size() != d) throw dimension_mismatch("sphere_dual_mu_hat: xi dimension");
  if (n_r < 64 || n_theta < 64) throw bad_parameters("sphere_dual_mu_hat: need n_r, n_theta >= 64");
  const double r_norm = xi.norm();

  const int order = 10;
  auto rad = detail::radial_quadrature(n_r, r_norm, order);
  const std::size_t nr = rad.nodes.size();

  std::size_t ntheta = static_cast<std::size_t>(n_theta);
  if (d == 2)
    ntheta = std::max<std::size_t>(ntheta, static_cast<std::size_t>(std::ceil(9.0 * r_norm)));
  else if (d == 3)
    ntheta = std::max<std::size_t>(
        ntheta, static_cast<std::size_t>(std::ceil(40.0 * r_norm * std::max(1.0, r_norm))));
  const std::size_t cap = (std::size_t{1} << 24);
  if (ntheta * nr > cap) ntheta = std::max<std::size_t>(64, cap / nr);

  Eigen::MatrixXd thetas = detail::quasi_uniform_sphere(d, static_cast<int>(ntheta), 0);
  std::vector<double> phi_vals(nr), center_dots(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    phi_vals[i] = bp.phi(rad.nodes[i]);
    Eigen::VectorXd c = centers(rad.nodes[i]);
    if (c.size() != d) throw dimension_mismatch("sphere_dual_mu_hat: center dimension");
    if (!c.allFinite() || c.norm() > 10.0)
      throw bad_parameters("sphere_dual_mu_hat: centers must be bounded (|x_r| <= 10)");
    center_dots[i] = c.dot(xi);
  }

  auto partial = detail::parallel_block_map<std::complex<double>>(
      static_cast<std::int64_t>(ntheta), 256, [&](std::int64_t lo, std::int64_t hi) {
        std::complex<double> acc(0.0, 0.0);
        for (std::int64_t t = lo; t < hi; ++t) {
          const double tdot = thetas.row(t).dot(xi);
          std::complex<double> inner(0.0, 0.0);
          for (std::size_t i = 0; i < nr; ++i) {
            const double ph = -2.0 * M_PI * (center_dots[i] + rad.nodes[i] * tdot);
            inner += rad.weights[i] * phi_vals[i] *
                     std::complex<double>(std::cos(ph), std::sin(ph));
          }
          acc += inner;
        }
        return acc;
      });
  std::complex<double> total(0.0, 0.0);
  for (const auto& p : partial) total += p;
  return total / static_cast<double>(ntheta);
}

inline std::complex<double> sphere_dual_mu_hat(int d,
                                               const std::function<Eigen::VectorXd(double)>& centers,
                                               const Eigen::VectorXd& xi, int n_r, int n_theta) {
  return sphere_dual_mu_hat(d, centers, xi, n_r, n_theta, *default_bump());
}

// Spec whose induced measure lives on the cone {(x,|x|) : |x| <= 1}: lines
// at 45 degrees to the last coordinate axis, all through the origin.
inline kakeya_measure_spec cone_measure_spec(int d, int m) {
  if (d < 3) throw bad_dimensions("cone_measure_spec: need d >= 3");
  if (m < 64) throw bad_parameters("cone_measure_spec: need m >= 64 atoms");
  Eigen::VectorXd axis = Eigen::VectorXd::Zero(d);
  axis[d - 1] = 1.0;
  auto gamma = nondegenerate_sphere_measure(d, axis, M_PI / 4.0, m, 0);
  return assign_translations(std::move(gamma), translation_strategy::zero(), 0);
}

// Surface measure of the circle of radius `radius` in the plane, evaluated
// by the angular trapezoid sum, which is spectrally accurate here; node
// count grows with |xi|.
inline std::complex<double> circle_surface_mu_hat(double radius, const Eigen::VectorXd& xi,
                                                  int n_theta = 64) {
  if (xi.size() != 2) throw dimension_mismatch("circle_surface_mu_hat: xi must be planar");
  if (!(radius > 0)) throw bad_parameters("circle_surface_mu_hat: radius must be positive");
  if (n_theta < 16) throw bad_parameters("circle_surface_mu_hat: need n_theta >= 16");
  const double freq = radius * xi.norm();
  const std::size_t n =
      std::max<std::size_t>(static_cast<std::size_t>(n_theta),
                            static_cast<std::size_t>(std::ceil(9.0 * freq)) + 16);
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    const double ph = -2.0 * M_PI * radius * (std::cos(a) * xi[0] + std::sin(a) * xi[1]);
    acc += std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc / static_cast<double>(n);
}

}  // namespace kfl

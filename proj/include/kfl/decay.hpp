#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "kfl/detail/parallel.hpp"
#include "kfl/errors.hpp"
#include "kfl/fit.hpp"
#include "kfl/rng.hpp"
#include "kfl/scaling.hpp"

namespace kfl {

struct shell_max_result {
  double value = 0.0;
  Eigen::VectorXd direction;
};

// Max of |F(R theta)| over m counter-seeded directions plus 20 hill-climb
// refinements from the best one. Nested in m for a fixed seed, so larger m
// never reports a smaller maximum.
template <class F>
shell_max_result shell_max_search(F&& f, int dim, double radius, int m, std::uint64_t seed) {
  if (!(radius > 0)) throw bad_parameters("shell_max: radius must be positive");
  if (m < 16) throw bad_parameters("shell_max: need m >= 16 direction samples");
  std::vector<double> values(static_cast<std::size_t>(m));
  std::vector<Eigen::VectorXd> dirs(static_cast<std::size_t>(m));
  detail::parallel_for(m, [&](std::int64_t i) {
    rng r(seed, static_cast<std::uint64_t>(i));
    Eigen::VectorXd theta = r.unit_vector(dim);
    values[static_cast<std::size_t>(i)] = std::abs(f(radius * theta));
    dirs[static_cast<std::size_t>(i)] = std::move(theta);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  auto objective = [&](const Eigen::VectorXd& theta) { return std::abs(f(radius * theta)); };
  auto climbed = detail::hill_climb_unit(objective, dirs[best], 20, 0.25);
  if (climbed.best_value > values[best]) return {climbed.best_value, climbed.best_x};
  return {values[best], dirs[best]};
}

template <class F>
double shell_max(F&& f, int dim, double radius, int m, std::uint64_t seed) {
  return shell_max_search(f, dim, radius, m, seed).value;
}

struct decay_fit {
  std::vector<double> radii;         // increasing dyadic
  std::vector<double> shell_maxima;  // in [0, 1 + eps] for probability measures
  std::vector<Eigen::VectorXd> witnesses;
  double slope = 0.0;                 // fitted s/2 exponent
  double fourier_dim_estimate = 0.0;  // min(2*slope, dim), clamped to [0, dim]
  double r_squared = 1.0;
  int samples_per_shell = 0;
};

// Least-squares slope of -log shell_max against log R over dyadic shells,
// converted to a Fourier-dimension estimate through the factor 2 in
// |mu_hat| ~ |xi|^{-s/2}. r_squared below 0.9 marks the fit unreliable.
template <class F>
decay_fit fit_decay(F&& f, int dim, std::vector<double> radii, int m, std::uint64_t seed) {
  if (radii.size() < 5) throw insufficient_grid("fit_decay: need >= 5 shells");
  std::sort(radii.begin(), radii.end());
  if (!(radii.front() >= 4.0)) throw insufficient_grid("fit_decay: min radius must be >= 4");
  for (double r : radii) {
    const double l = std::log2(r);
    if (std::fabs(l - std::round(l)) > 1e-9)
      throw insufficient_grid("fit_decay: radii must be dyadic");
  }
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw insufficient_grid("fit_decay: radii must be distinct");

  decay_fit out;
  out.radii = radii;
  out.samples_per_shell = m;
  out.shell_maxima.resize(radii.size());
  out.witnesses.resize(radii.size());
  for (std::size_t j = 0; j < radii.size(); ++j) {
    auto res = shell_max_search(f, dim, radii[j], m, detail::mix_stream(seed, j));
    out.shell_maxima[j] = res.value;
    out.witnesses[j] = res.direction;
  }
  std::vector<double> x, y;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    x.push_back(std::log(radii[j]));
    y.push_back(-std::log(std::max(out.shell_maxima[j], 1e-300)));
  }
  auto fit = linear_fit(x, y);
  out.slope = fit.slope;
  out.r_squared = fit.r_squared;
  out.fourier_dim_estimate = std::clamp(2.0 * fit.slope, 0.0, static_cast<double>(dim));
  return out;
}

}  // namespace kfl

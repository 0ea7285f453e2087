#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kfl/detail/parallel.hpp"
#include "kfl/errors.hpp"
#include "kfl/fit.hpp"
#include "kfl/orientation.hpp"
#include "kfl/rng.hpp"

namespace kfl {

// s is in the slab S_{xi,eta} iff every basis vector x_i of s satisfies
// the strict inequality |xi . x_i| < eta |xi|. Invariant under rescaling xi.
inline bool in_slab(const frame& s, const Eigen::VectorXd& xi, double eta) {
  if (xi.size() != s.ambient_dim) throw dimension_mismatch("in_slab: xi dimension");
  const double norm = xi.norm();
  if (!(norm > 0)) throw zero_frequency("in_slab: xi must be nonzero");
  if (!(eta > 0)) throw bad_parameters("in_slab: eta must be positive");
  const double bound = eta * norm;
  for (int i = 0; i < s.plane_dim; ++i)
    if (!(std::fabs(s.basis.col(i).dot(xi)) < bound)) return false;
  return true;
}

// Total mass of atoms inside the slab.
inline double slab_mass(const discrete_orientation_measure& gamma, const Eigen::VectorXd& xi,
                        double eta) {
  if (xi.size() != gamma.ambient_dim) throw dimension_mismatch("slab_mass: xi dimension");
  const double norm = xi.norm();
  if (!(norm > 0)) throw zero_frequency("slab_mass: xi must be nonzero");
  if (!(eta > 0)) throw bad_parameters("slab_mass: eta must be positive");
  const double bound = eta * norm;
  double mass = 0.0;
  for (const auto& a : gamma.atoms) {
    bool inside = true;
    for (int i = 0; i < a.plane.plane_dim && inside; ++i)
      inside = std::fabs(a.plane.basis.col(i).dot(xi)) < bound;
    if (inside) mass += a.mass;
  }
  return mass;
}

namespace detail {

// Packed atom data for repeated slab-mass queries: one matrix-vector product
// per direction yields the per-atom max |xi . x_i|, after which any number
// of eta thresholds are O(atoms) scans.
struct slab_evaluator {
  Eigen::MatrixXd basis_rows;  // (atoms*k) x d
  std::vector<double> masses;
  int k = 0;

  explicit slab_evaluator(const discrete_orientation_measure& gamma) {
    const std::size_t n = gamma.atoms.size();
    k = gamma.plane_dim;
    basis_rows.resize(static_cast<Eigen::Index>(n * k), gamma.ambient_dim);
    masses.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      masses.push_back(gamma.atoms[j].mass);
      for (int i = 0; i < k; ++i)
        basis_rows.row(static_cast<Eigen::Index>(j * k + i)) =
            gamma.atoms[j].plane.basis.col(i).transpose();
    }
  }

  // per-atom max_i |xi . x_i| for a unit xi
  void max_dots(const Eigen::VectorXd& xi, std::vector<double>& out) const {
    Eigen::VectorXd dots = basis_rows * xi;
    const std::size_t n = masses.size();
    out.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      double m = 0.0;
      for (int i = 0; i < k; ++i) m = std::max(m, std::fabs(dots[static_cast<Eigen::Index>(j * k + i)]));
      out[j] = m;
    }
  }

  double mass_below(const std::vector<double>& maxdots, double eta) const {
    double s = 0.0;
    for (std::size_t j = 0; j < maxdots.size(); ++j)
      if (maxdots[j] < eta) s += masses[j];
    return s;
  }
};

// Coordinate-perturbation hill climb on the unit sphere: each step tries
// +-sigma along every coordinate, halving sigma when no proposal improves.
// Purely deterministic; visited proposals can be recorded.
struct climb_outcome {
  Eigen::VectorXd best_x;
  double best_value;
};

template <class Objective>
climb_outcome hill_climb_unit(Objective&& f, Eigen::VectorXd x0, int steps, double sigma0,
                              std::vector<Eigen::VectorXd>* visited = nullptr) {
  const int d = static_cast<int>(x0.size());
  Eigen::VectorXd x = x0;
  double value = f(x);
  double sigma = sigma0;
  for (int step = 0; step < steps; ++step) {
    double cand_value = value;
    Eigen::VectorXd cand_x = x;
    for (int c = 0; c < d; ++c) {
      for (double sgn : {1.0, -1.0}) {
        Eigen::VectorXd y = x;
        y[c] += sgn * sigma;
        const double n = y.norm();
        if (!(n > 1e-12)) continue;
        y /= n;
        if (visited) visited->push_back(y);
        const double v = f(y);
        if (v > cand_value) {
          cand_value = v;
          cand_x = y;
        }
      }
    }
    if (cand_value > value) {
      value = cand_value;
      x = cand_x;
    } else {
      sigma *= 0.5;
    }
  }
  return {x, value};
}

}  // namespace detail

struct worst_slab_result {
  Eigen::VectorXd xi;
  double mass = 0.0;
};

// Randomized search plus hill climb for sup_xi gamma(S_{xi,eta}). The result
// is a lower bound for the true sup; xi is recorded so runs are reproducible.
inline worst_slab_result worst_case_slab_mass(const discrete_orientation_measure& gamma,
                                              double eta, int search_budget,
                                              std::uint64_t seed) {
  if (!(eta > 0)) throw bad_parameters("worst_case_slab_mass: eta must be positive");
  if (search_budget < 10) throw bad_parameters("worst_case_slab_mass: search budget must be >= 10");
  const int d = gamma.ambient_dim;
  detail::slab_evaluator eval(gamma);
  const double total = gamma.total_mass();

  std::vector<double> md;
  auto objective = [&](const Eigen::VectorXd& xi) {
    eval.max_dots(xi, md);
    return eval.mass_below(md, eta);
  };

  std::vector<double> values(static_cast<std::size_t>(search_budget));
  std::vector<Eigen::VectorXd> dirs(static_cast<std::size_t>(search_budget));
  detail::parallel_for(search_budget, [&](std::int64_t i) {
    rng r(seed, static_cast<std::uint64_t>(i));
    Eigen::VectorXd xi = r.unit_vector(d);
    detail::slab_evaluator const& ev = eval;
    std::vector<double> local;
    ev.max_dots(xi, local);
    values[static_cast<std::size_t>(i)] = ev.mass_below(local, eta);
    dirs[static_cast<std::size_t>(i)] = std::move(xi);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;

  worst_slab_result res{dirs[best], values[best]};
  if (res.mass >= total - 1e-12) return res;  // nothing left to gain
  auto climbed = detail::hill_climb_unit(objective, res.xi, 50, 0.5);
  if (climbed.best_value > res.mass) {
    res.mass = climbed.best_value;
    res.xi = climbed.best_x;
  }
  return res;
}

struct scaling_report {
  std::vector<double> eta_grid;   // decreasing
  std::vector<double> sup_masses; // searched lower bounds, nonincreasing along the grid
  std::vector<Eigen::VectorXd> witnesses;
  double beta_hat = 0.0;
  double r_squared = 1.0;
  std::optional<double> predicted_beta;
};

// Fit log sup-slab-mass against log eta. All etas share one candidate pool
// (random directions plus every climb proposal), so the reported masses are
// exactly monotone in eta and the slope is nonnegative.
inline scaling_report fit_beta(const discrete_orientation_measure& gamma,
                               std::vector<double> eta_grid, int search_budget,
                               std::uint64_t seed,
                               std::optional<double> predicted_beta = std::nullopt) {
  if (eta_grid.size() < 5) throw insufficient_grid("fit_beta: need >= 5 eta values");
  std::sort(eta_grid.begin(), eta_grid.end(), std::greater<double>());
  for (double e : eta_grid) {
    if (!(e > 0) || e > 0.25 + 1e-12)
      throw insufficient_grid("fit_beta: eta values must lie in (0, 1/4]");
    const double l = std::log2(e);
    if (std::fabs(l - std::round(l)) > 1e-9)
      throw insufficient_grid("fit_beta: eta values must be dyadic");
  }
  if (gamma.separation > 0 && eta_grid.back() < 2.0 * gamma.separation - 1e-12)
    throw grid_below_resolution("fit_beta: min eta " + std::to_string(eta_grid.back()) +
                                " is below twice the net separation " +
                                std::to_string(gamma.separation));
  if (search_budget < 10) throw bad_parameters("fit_beta: search budget must be >= 10");

  const int d = gamma.ambient_dim;
  detail::slab_evaluator eval(gamma);
  const std::size_t ne = eta_grid.size();

  // shared random candidates
  std::vector<Eigen::VectorXd> pool(static_cast<std::size_t>(search_budget));
  detail::parallel_for(search_budget, [&](std::int64_t i) {
    rng r(seed, static_cast<std::uint64_t>(i));
    pool[static_cast<std::size_t>(i)] = r.unit_vector(d);
  });

  // per-eta climbs from the best random candidate, proposals join the pool
  {
    std::vector<std::vector<double>> profiles(pool.size());
    detail::parallel_for(static_cast<std::int64_t>(pool.size()), [&](std::int64_t i) {
      std::vector<double> md;
      eval.max_dots(pool[static_cast<std::size_t>(i)], md);
      auto& prof = profiles[static_cast<std::size_t>(i)];
      prof.resize(ne);
      for (std::size_t e = 0; e < ne; ++e) prof[e] = eval.mass_below(md, eta_grid[e]);
    });
    std::vector<Eigen::VectorXd> proposals;
    std::vector<double> md;
    for (std::size_t e = 0; e < ne; ++e) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < profiles.size(); ++i)
        if (profiles[i][e] > profiles[best][e]) best = i;
      auto objective = [&](const Eigen::VectorXd& xi) {
        eval.max_dots(xi, md);
        return eval.mass_below(md, eta_grid[e]);
      };
      detail::hill_climb_unit(objective, pool[best], 50, 0.5, &proposals);
    }
    pool.insert(pool.end(), proposals.begin(), proposals.end());
  }

  // evaluate the full pool on every eta; keep the per-eta argmax
  scaling_report rep;
  rep.eta_grid = eta_grid;
  rep.sup_masses.assign(ne, 0.0);
  rep.witnesses.assign(ne, Eigen::VectorXd::Zero(d));
  std::vector<std::vector<double>> profiles(pool.size());
  detail::parallel_for(static_cast<std::int64_t>(pool.size()), [&](std::int64_t i) {
    std::vector<double> md;
    eval.max_dots(pool[static_cast<std::size_t>(i)], md);
    auto& prof = profiles[static_cast<std::size_t>(i)];
    prof.resize(ne);
    for (std::size_t e = 0; e < ne; ++e) prof[e] = eval.mass_below(md, eta_grid[e]);
  });
  for (std::size_t e = 0; e < ne; ++e) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < profiles.size(); ++i)
      if (profiles[i][e] > profiles[best][e]) best = i;
    rep.sup_masses[e] = profiles[best][e];
    rep.witnesses[e] = pool[best];
  }

  std::vector<double> x, y;
  for (std::size_t e = 0; e < ne; ++e) {
    x.push_back(std::log(eta_grid[e]));
    y.push_back(std::log(std::max(rep.sup_masses[e], 1e-300)));
  }
  auto fit = linear_fit(x, y);
  rep.beta_hat = fit.slope;
  rep.r_squared = fit.r_squared;
  rep.predicted_beta = predicted_beta;
  return rep;
}

}  // namespace kfl

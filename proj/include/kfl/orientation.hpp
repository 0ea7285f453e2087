#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "kfl/bump.hpp"
#include "kfl/errors.hpp"
#include "kfl/grassmannian.hpp"
#include "kfl/rng.hpp"

namespace kfl {

struct weighted_frame {
  frame plane;
  double mass = 0.0;
};

// Finitely supported orientation measure: weighted atoms on G(d,k) with
// masses summing to one. `separation` is the net scale for net-built
// families and 0 for exact families (sphere circles, cones).
struct discrete_orientation_measure {
  int ambient_dim = 0;
  int plane_dim = 0;
  double separation = 0.0;
  std::vector<weighted_frame> atoms;

  double total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.mass;
    return s;
  }
};

// Orientation measure plus one translation per atom and the bump profile:
// everything needed to evaluate the induced measure on the union of the
// translated unit cubes through its Fourier transform.
struct kakeya_measure_spec {
  discrete_orientation_measure orientation;
  std::vector<Eigen::VectorXd> translations;
  std::shared_ptr<const bump_profile> bump;
};

// Net atoms at scale 1/n with Monte-Carlo Voronoi masses: the mass of each
// atom is the fraction of `budget` invariant samples that land nearest to
// it. Atoms that attract no sample (possible only when budget is tiny) are
// dropped before normalization.
inline discrete_orientation_measure uniform_grassmannian_measure(int d, int k, int n,
                                                                 std::int64_t budget,
                                                                 std::uint64_t seed) {
  if (k < 1 || d < 2 || k >= d) throw bad_dimensions("uniform_grassmannian_measure: need 1 <= k < d");
  if (n < 2) throw bad_parameters("uniform_grassmannian_measure: net parameter n must be >= 2");
  if (budget < 1) throw bad_parameters("uniform_grassmannian_measure: budget must be >= 1");
  const double delta = 1.0 / static_cast<double>(n);
  uniform_subspace_stream stream{d, k, seed};
  std::vector<frame> centers = greedy_net(stream, delta, budget);

  std::vector<std::int64_t> counts(centers.size(), 0);
  uniform_subspace_stream mass_stream{d, k, detail::mix_stream(seed, 0x6d617373ull)};
  for (std::int64_t i = 0; i < budget; ++i) {
    frame sample = mass_stream(i);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double dd = metric(centers[j], sample);
      if (dd < best_d) {
        best_d = dd;
        best = j;
      }
    }
    ++counts[best];
  }

  discrete_orientation_measure out;
  out.ambient_dim = d;
  out.plane_dim = k;
  out.separation = delta;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < centers.size(); ++j) total += counts[j];
  for (std::size_t j = 0; j < centers.size(); ++j) {
    if (counts[j] == 0) continue;
    out.atoms.push_back({std::move(centers[j]),
                         static_cast<double>(counts[j]) / static_cast<double>(total)});
  }
  return out;
}

namespace detail {

// Deterministic orthonormal completion of a unit vector to a basis of its
// orthogonal complement (columns 2..d of a Householder reflection).
inline Eigen::MatrixXd orthogonal_complement(const Eigen::VectorXd& unit_axis) {
  const int d = static_cast<int>(unit_axis.size());
  Eigen::VectorXd v = unit_axis;
  v(0) += (v(0) >= 0 ? 1.0 : -1.0);
  v /= v.norm();
  const double sign = (unit_axis(0) >= 0 ? 1.0 : -1.0);
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(d, d) - 2.0 * v * v.transpose();
  // column 0 of q is -sign*axis; the rest span the complement
  return sign * q.rightCols(d - 1);
}

// m quasi-uniform points on the unit sphere of R^j (rows). j = 1 alternates
// the two points, j = 2 equal angles, j = 3 a Fibonacci lattice, higher j a
// counter-seeded stream.
inline Eigen::MatrixXd quasi_uniform_sphere(int j, int m, std::uint64_t seed) {
  Eigen::MatrixXd pts(m, j);
  if (j == 1) {
    for (int i = 0; i < m; ++i) pts(i, 0) = (i % 2 == 0) ? 1.0 : -1.0;
  } else if (j == 2) {
    for (int i = 0; i < m; ++i) {
      const double a = 2.0 * M_PI * i / m;
      pts(i, 0) = std::cos(a);
      pts(i, 1) = std::sin(a);
    }
  } else if (j == 3) {
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < m; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / m;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * i;
      pts(i, 0) = r * std::cos(a);
      pts(i, 1) = r * std::sin(a);
      pts(i, 2) = z;
    }
  } else {
    for (int i = 0; i < m; ++i) {
      rng r(seed, static_cast<std::uint64_t>(i));
      pts.row(i) = r.unit_vector(j).transpose();
    }
  }
  return pts;
}

}  // namespace detail

// Lines at constant polar angle `a` to the axis: the direction set is the
// (d-2)-sphere {cos(a) e + sin(a) v : v unit, v _|_ e} of chordal diameter
// 2 sin(a) < 2. Equal masses 1/m. A degenerate (hyperplane) section
// a ~ pi/2 is rejected.
inline discrete_orientation_measure nondegenerate_sphere_measure(int d,
                                                                 const Eigen::VectorXd& axis,
                                                                 double polar_angle, int m,
                                                                 std::uint64_t seed) {
  if (d < 3) throw bad_dimensions("nondegenerate_sphere_measure: need d >= 3");
  if (axis.size() != d) throw dimension_mismatch("nondegenerate_sphere_measure: axis has wrong dimension");
  if (m < 8) throw bad_parameters("nondegenerate_sphere_measure: need m >= 8 atoms");
  if (polar_angle >= M_PI / 2 - 1e-6)
    throw degenerate_sphere("nondegenerate_sphere_measure: polar angle too close to pi/2");
  if (!(polar_angle > 1e-9))
    throw bad_parameters("nondegenerate_sphere_measure: polar angle must be positive");
  const double axis_norm = axis.norm();
  if (!(axis_norm > 1e-12)) throw bad_parameters("nondegenerate_sphere_measure: zero axis");
  Eigen::VectorXd e = axis / axis_norm;
  Eigen::MatrixXd perp = detail::orthogonal_complement(e);  // d x (d-1)
  Eigen::MatrixXd vs = detail::quasi_uniform_sphere(d - 1, m, seed);

  discrete_orientation_measure out;
  out.ambient_dim = d;
  out.plane_dim = 1;
  out.separation = 0.0;  // exact family
  out.atoms.reserve(m);
  const double ca = std::cos(polar_angle), sa = std::sin(polar_angle);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd v = perp * vs.row(i).transpose();
    frame f;
    f.ambient_dim = d;
    f.plane_dim = 1;
    f.basis = ca * e + sa * v;
    out.atoms.push_back({std::move(f), 1.0 / m});
  }
  return out;
}

// All k-subspaces inside the hyperplane spanned by V: a uniform measure on
// G(d-1,k) pushed through V's basis. The sharpness example: every atom is
// orthogonal to the normal of V.
inline discrete_orientation_measure hyperplane_family_measure(int d, int k, const frame& v,
                                                              int n, std::int64_t budget,
                                                              std::uint64_t seed) {
  if (d < 3 || k < 1 || k >= d - 1)
    throw bad_dimensions("hyperplane_family_measure: need 1 <= k < d-1");
  if (v.ambient_dim != d || v.plane_dim != d - 1)
    throw dimension_mismatch("hyperplane_family_measure: V must be a (d-1)-frame in R^d");
  if (!frame_is_orthonormal(v))
    throw bad_parameters("hyperplane_family_measure: V basis is not orthonormal");
  discrete_orientation_measure inner = uniform_grassmannian_measure(d - 1, k, n, budget, seed);
  discrete_orientation_measure out;
  out.ambient_dim = d;
  out.plane_dim = k;
  out.separation = inner.separation;  // the embedding is isometric
  out.atoms.reserve(inner.atoms.size());
  for (auto& a : inner.atoms) {
    frame f;
    f.ambient_dim = d;
    f.plane_dim = k;
    f.basis = v.basis * a.plane.basis;
    out.atoms.push_back({std::move(f), a.mass});
  }
  return out;
}

// How translations t_s are attached to atoms.
struct translation_strategy {
  enum class kind { zero, random_box, fixed };
  kind mode = kind::zero;
  double box_side = 0.0;
  std::vector<Eigen::VectorXd> fixed_list;

  static translation_strategy zero() { return {}; }
  static translation_strategy random_box(double side) {
    translation_strategy s;
    s.mode = kind::random_box;
    s.box_side = side;
    return s;
  }
  static translation_strategy fixed(std::vector<Eigen::VectorXd> list) {
    translation_strategy s;
    s.mode = kind::fixed;
    s.fixed_list = std::move(list);
    return s;
  }
};

// Attach translations to the atoms. Deterministic given the seed; every
// translation is checked against the compactness cap |t| <= 10.
inline kakeya_measure_spec assign_translations(discrete_orientation_measure measure,
                                               const translation_strategy& strategy,
                                               std::uint64_t seed,
                                               std::shared_ptr<const bump_profile> bump = nullptr) {
  const int d = measure.ambient_dim;
  const std::size_t n = measure.atoms.size();
  kakeya_measure_spec spec;
  spec.translations.reserve(n);
  switch (strategy.mode) {
    case translation_strategy::kind::zero:
      for (std::size_t i = 0; i < n; ++i) spec.translations.push_back(Eigen::VectorXd::Zero(d));
      break;
    case translation_strategy::kind::random_box: {
      if (!(strategy.box_side > 0) || strategy.box_side * std::sqrt(static_cast<double>(d)) > 10.0)
        throw bad_parameters("assign_translations: box side breaks the |t| <= 10 cap");
      for (std::size_t i = 0; i < n; ++i) {
        rng r(seed, i);
        Eigen::VectorXd t(d);
        for (int c = 0; c < d; ++c) t[c] = r.uniform(0.0, strategy.box_side);
        spec.translations.push_back(std::move(t));
      }
      break;
    }
    case translation_strategy::kind::fixed: {
      if (strategy.fixed_list.size() != n)
        throw length_mismatch("assign_translations: fixed list length " +
                              std::to_string(strategy.fixed_list.size()) + " != atom count " +
                              std::to_string(n));
      for (const auto& t : strategy.fixed_list) {
        if (t.size() != d) throw dimension_mismatch("assign_translations: translation dimension");
        if (!t.allFinite() || t.norm() > 10.0)
          throw bad_parameters("assign_translations: translation breaks the |t| <= 10 cap");
      }
      spec.translations = strategy.fixed_list;
      break;
    }
  }
  spec.orientation = std::move(measure);
  spec.bump = bump ? std::move(bump) : default_bump();
  return spec;
}

}  // namespace kfl

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "kfl/errors.hpp"
#include "kfl/fit.hpp"
#include "kfl/rng.hpp"

namespace kfl {

// A point of G(d,k) represented by an orthonormal basis of the subspace.
// Columns of `basis` are the basis vectors; the represented object is the
// span, so any in-span rotation of the columns is the same point.
struct frame {
  int ambient_dim = 0;
  int plane_dim = 0;
  Eigen::MatrixXd basis;  // ambient_dim x plane_dim, orthonormal columns
};

inline bool frame_is_orthonormal(const frame& f, double tol = 1e-9) {
  if (f.basis.rows() != f.ambient_dim || f.basis.cols() != f.plane_dim) return false;
  Eigen::MatrixXd gram = f.basis.transpose() * f.basis;
  return (gram - Eigen::MatrixXd::Identity(f.plane_dim, f.plane_dim)).cwiseAbs().maxCoeff() <= tol;
}

// Orthonormalize k linearly independent columns. Input that is already
// orthonormal passes through unchanged. Modified Gram-Schmidt with a second
// sweep; rank is checked with the singular values of the input.
inline frame orthonormalize(const Eigen::MatrixXd& raw) {
  const int d = static_cast<int>(raw.rows());
  const int k = static_cast<int>(raw.cols());
  if (k < 1 || d < 2 || k >= d)
    throw bad_dimensions("orthonormalize: need 1 <= k < d, got d=" + std::to_string(d) +
                         " k=" + std::to_string(k));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(raw);
  const double smin = svd.singularValues()(k - 1);
  if (!(smin > 1e-8))
    throw rank_deficient("orthonormalize: smallest singular value " + std::to_string(smin) +
                         " <= 1e-8");
  frame f;
  f.ambient_dim = d;
  f.plane_dim = k;
  f.basis = raw;
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < k; ++c) {
      for (int p = 0; p < c; ++p) f.basis.col(c) -= f.basis.col(p).dot(f.basis.col(c)) * f.basis.col(p);
      f.basis.col(c) /= f.basis.col(c).norm();
    }
  }
  // canonical sign: first non-negligible component of each column positive,
  // so equal spans from equal inputs give identical representatives
  for (int c = 0; c < k; ++c) {
    for (int i = 0; i < d; ++i) {
      if (std::fabs(f.basis(i, c)) > 1e-12) {
        if (f.basis(i, c) < 0) f.basis.col(c) = -f.basis.col(c);
        break;
      }
    }
  }
  return f;
}

namespace detail {

// Smallest singular value of the k x k cross Gram basis_s^T basis_t given
// column-major d x k storage. Equals cos(theta_max) for the largest
// principal angle. Closed forms for k = 1, 2; Jacobi SVD otherwise.
inline double cross_sigma_min_raw(const double* s, const double* t, int d, int k) {
  if (k == 1) {
    double dot = 0;
    for (int i = 0; i < d; ++i) dot += s[i] * t[i];
    return std::min(std::fabs(dot), 1.0);
  }
  if (k == 2) {
    double m00 = 0, m01 = 0, m10 = 0, m11 = 0;
    for (int i = 0; i < d; ++i) {
      m00 += s[i] * t[i];
      m01 += s[i] * t[d + i];
      m10 += s[d + i] * t[i];
      m11 += s[d + i] * t[d + i];
    }
    // grouped so that swapping s and t (which swaps m01/m10) is bit-exact
    const double tr = (m00 * m00 + m11 * m11) + (m01 * m01 + m10 * m10);
    const double det = m00 * m11 - m01 * m10;
    double disc = tr * tr - 4.0 * det * det;
    if (disc < 0) disc = 0;
    double lmin = 0.5 * (tr - std::sqrt(disc));
    if (lmin < 0) lmin = 0;
    return std::min(std::sqrt(lmin), 1.0);
  }
  // order the operands canonically so the SVD route is symmetric too
  for (int i = 0; i < d * k; ++i) {
    if (s[i] == t[i]) continue;
    if (s[i] > t[i]) std::swap(s, t);
    break;
  }
  Eigen::Map<const Eigen::MatrixXd> bs(s, d, k), bt(t, d, k);
  Eigen::MatrixXd m = bs.transpose() * bt;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return std::min(svd.singularValues()(k - 1), 1.0);
}

inline double cross_sigma_min(const Eigen::MatrixXd& bs, const Eigen::MatrixXd& bt) {
  return cross_sigma_min_raw(bs.data(), bt.data(), static_cast<int>(bs.rows()),
                             static_cast<int>(bs.cols()));
}

inline void check_same_grassmannian(const frame& s, const frame& t, const char* who) {
  if (s.ambient_dim != t.ambient_dim || s.plane_dim != t.plane_dim)
    throw dimension_mismatch(std::string(who) + ": frames live on different Grassmannians");
}

}  // namespace detail

// Hausdorff distance between the unit spheres of the two subspaces,
// evaluated through the largest principal angle: sqrt(2 - 2 cos theta_max).
// Range [0, sqrt(2)].
inline double metric(const frame& s, const frame& t) {
  detail::check_same_grassmannian(s, t, "metric");
  const double smin = detail::cross_sigma_min(s.basis, t.basis);
  const double dd = 2.0 - 2.0 * smin;
  return dd > 0 ? std::sqrt(dd) : 0.0;
}

namespace detail {

// n quasi-uniform points on the unit sphere of span(f), as rows.
// k = 1 gives the exact two-point sphere, k = 2 equally spaced circle
// angles, higher k seeded antipodal pairs.
inline Eigen::MatrixXd subspace_sphere_points(const frame& f, int n, std::uint64_t seed) {
  const int k = f.plane_dim;
  Eigen::MatrixXd coeff;  // points on S^{k-1}, rows
  if (k == 1) {
    coeff.resize(2, 1);
    coeff << 1.0, -1.0;
  } else if (k == 2) {
    coeff.resize(n, 2);
    for (int i = 0; i < n; ++i) {
      const double a = 2.0 * M_PI * i / n;
      coeff(i, 0) = std::cos(a);
      coeff(i, 1) = std::sin(a);
    }
  } else {
    const int half = std::max(1, n / 2);
    coeff.resize(2 * half, k);
    for (int i = 0; i < half; ++i) {
      rng r(seed, static_cast<std::uint64_t>(i));
      Eigen::VectorXd v = r.unit_vector(k);
      coeff.row(2 * i) = v.transpose();
      coeff.row(2 * i + 1) = -v.transpose();
    }
  }
  return coeff * f.basis.transpose();
}

// max over rows a of min over rows b of |a-b|, for unit rows: the directed
// Hausdorff distance computed from the largest attainable dot product.
inline double directed_hausdorff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  double worst_dot = 1.0;
  const int block = 512;
  for (int i0 = 0; i0 < a.rows(); i0 += block) {
    const int ib = std::min<int>(block, a.rows() - i0);
    Eigen::MatrixXd dots = a.middleRows(i0, ib) * b.transpose();
    for (int i = 0; i < ib; ++i) {
      const double best = dots.row(i).maxCoeff();
      worst_dot = std::min(worst_dot, best);
    }
  }
  // dots of shared points come out as 1 - O(eps); snap those to zero
  // distance rather than reporting sqrt(eps)
  const double dd = 2.0 - 2.0 * worst_dot;
  return dd > 4e-15 ? std::sqrt(dd) : 0.0;
}

}  // namespace detail

// Brute-force Hausdorff distance between the subspace spheres from sampled
// points; validates the principal-angle identity used by metric().
inline double metric_oracle(const frame& s, const frame& t, int n_samples,
                            std::uint64_t seed = 1) {
  detail::check_same_grassmannian(s, t, "metric_oracle");
  if (n_samples < 100) throw bad_parameters("metric_oracle: n_samples must be >= 100");
  Eigen::MatrixXd ps = detail::subspace_sphere_points(s, n_samples, seed);
  Eigen::MatrixXd pt = detail::subspace_sphere_points(t, n_samples, seed + 1);
  return std::max(detail::directed_hausdorff(ps, pt), detail::directed_hausdorff(pt, ps));
}

// Draw from the orthogonally invariant distribution on G(d,k): orthonormalize
// a d x k standard Gaussian matrix. Deterministic given the seed.
inline frame random_subspace(int d, int k, std::uint64_t seed) {
  if (k < 1 || d < 2 || k >= d)
    throw bad_dimensions("random_subspace: need 1 <= k < d, got d=" + std::to_string(d) +
                         " k=" + std::to_string(k));
  for (std::uint64_t attempt = 0;; ++attempt) {
    rng r(seed, attempt);
    Eigen::MatrixXd g(d, k);
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < d; ++i) g(i, c) = r.gaussian();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
    if (svd.singularValues()(k - 1) > 1e-8) return orthonormalize(g);
    // re-draw on (measure-zero) degeneracy; still deterministic
  }
}

// Counter-seeded stream of invariant random subspaces; sampler(i) is
// independent of how the indices are distributed over workers.
struct uniform_subspace_stream {
  int ambient_dim;
  int plane_dim;
  std::uint64_t seed;
  frame operator()(std::int64_t i) const {
    return random_subspace(ambient_dim, plane_dim, detail::mix_stream(seed, static_cast<std::uint64_t>(i)));
  }
};

// Greedy packing: keep every candidate at metric distance >= separation from
// all previously kept ones. Maximal relative to the examined stream.
template <class Sampler>
std::vector<frame> greedy_net(Sampler&& sampler, double separation, std::int64_t budget) {
  if (!(separation > 0)) throw bad_parameters("greedy_net: separation must be positive");
  if (budget < 1) throw bad_parameters("greedy_net: budget must be >= 1");
  std::vector<frame> centers;
  for (std::int64_t i = 0; i < budget; ++i) {
    frame cand = sampler(i);
    bool ok = true;
    for (const frame& c : centers) {
      if (metric(c, cand) < separation) {
        ok = false;
        break;
      }
    }
    if (ok) centers.push_back(std::move(cand));
  }
  return centers;
}

namespace detail {

// Greedy nets at several decreasing separations over one candidate stream.
// Produces exactly the same nets as running greedy_net per level on that
// stream, but prunes distance scans through parent links: every level-(l+1)
// center has a recorded level-l center within delta_l, so all level-(l+1)
// centers within r of a query have level-l ancestors within r + delta_l.
struct leveled_net_result {
  std::vector<std::vector<frame>> levels;
};

template <class Sampler>
leveled_net_result leveled_greedy_nets(Sampler&& sampler, const std::vector<double>& deltas,
                                       std::int64_t budget) {
  const int nl = static_cast<int>(deltas.size());
  leveled_net_result out;
  out.levels.resize(nl);
  std::vector<double> need(nl);
  need[nl - 1] = deltas[nl - 1];
  for (int l = nl - 2; l >= 0; --l) need[l] = deltas[l] + need[l + 1];

  std::vector<std::vector<std::vector<int>>> kids(nl);  // kids[l][id] -> level l+1 ids
  std::vector<int> scan, kept, next_scan;
  for (std::int64_t it = 0; it < budget; ++it) {
    frame cand = sampler(it);
    scan.resize(out.levels[0].size());
    for (std::size_t i = 0; i < scan.size(); ++i) scan[i] = static_cast<int>(i);
    int parent = -1;
    for (int l = 0; l < nl; ++l) {
      kept.clear();
      bool separated = true;
      int coverer = -1;
      for (int id : scan) {
        const double dd = metric(out.levels[l][id], cand);
        if (dd < deltas[l] && coverer < 0) {
          separated = false;
          coverer = id;
        }
        if (dd <= need[l]) kept.push_back(id);
      }
      int my_id = -1;
      if (separated) {
        my_id = static_cast<int>(out.levels[l].size());
        out.levels[l].push_back(cand);
        kids[l].emplace_back();
        if (l > 0) kids[l - 1][parent >= 0 ? parent : coverer].push_back(my_id);
      }
      parent = separated ? my_id : coverer;
      if (l + 1 < nl) {
        next_scan.clear();
        for (int id : kept)
          for (int ch : kids[l][id]) next_scan.push_back(ch);
        scan.swap(next_scan);
      }
    }
  }
  return out;
}

inline void validate_dyadic_eta_grid(std::vector<double>& grid, const char* who) {
  if (grid.size() < 4)
    throw insufficient_grid(std::string(who) + ": need >= 4 dyadic eta values in (0, 1/2]");
  std::sort(grid.begin(), grid.end(), std::greater<double>());
  for (double e : grid) {
    if (!(e > 0) || e > 0.5 + 1e-12)
      throw insufficient_grid(std::string(who) + ": eta values must lie in (0, 1/2]");
    const double l = std::log2(e);
    if (std::fabs(l - std::round(l)) > 1e-9)
      throw insufficient_grid(std::string(who) + ": eta values must be dyadic");
  }
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] >= grid[i - 1])
      throw insufficient_grid(std::string(who) + ": eta values must be distinct");
}

}  // namespace detail

struct covering_report {
  int ambient_dim = 0;
  int plane_dim = 0;
  std::vector<double> eta_grid;
  std::vector<std::int64_t> net_sizes;
  double exponent = 0.0;
  double r_squared = 1.0;
};

// Net sizes N_eta over a dyadic grid plus the least-squares slope of
// log N_eta against -log eta; estimates dim G(d,k) = k(d-k).
inline covering_report covering_scan(int d, int k, std::vector<double> eta_grid,
                                     std::int64_t budget, std::uint64_t seed) {
  if (k < 1 || d < 2 || k >= d)
    throw bad_dimensions("covering_scan: need 1 <= k < d");
  detail::validate_dyadic_eta_grid(eta_grid, "covering_scan");
  if (budget < 1) throw bad_parameters("covering_scan: budget must be >= 1");
  uniform_subspace_stream stream{d, k, seed};
  auto nets = detail::leveled_greedy_nets(stream, eta_grid, budget);
  covering_report rep;
  rep.ambient_dim = d;
  rep.plane_dim = k;
  rep.eta_grid = eta_grid;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < eta_grid.size(); ++i) {
    rep.net_sizes.push_back(static_cast<std::int64_t>(nets.levels[i].size()));
    x.push_back(-std::log(eta_grid[i]));
    y.push_back(std::log(static_cast<double>(std::max<std::int64_t>(1, rep.net_sizes.back()))));
  }
  auto fit = linear_fit(x, y);
  rep.exponent = fit.slope;
  rep.r_squared = fit.r_squared;
  return rep;
}

inline double covering_exponent(int d, int k, const std::vector<double>& eta_grid,
                                std::int64_t budget, std::uint64_t seed) {
  return covering_scan(d, k, eta_grid, budget, seed).exponent;
}

}  // namespace kfl

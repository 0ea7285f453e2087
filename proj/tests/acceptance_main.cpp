// Acceptance suite: one line per criterion, PASS/FAIL with the measured
// values and wall clock. Exit code = number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kfl/kfl.hpp"

namespace {

struct outcome {
  bool pass = true;
  std::string detail;
};

struct criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<outcome()> run;
};

std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// 1. metric identity against the sampling oracle
outcome metric_identity() {
  outcome res;
  double worst = 0;
  for (auto [d, k] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    const int pairs = 100;
    std::vector<double> diffs(pairs);
    kfl::detail::parallel_for(pairs, [&, d = d, k = k](std::int64_t i) {
      auto s = kfl::random_subspace(d, k, kfl::detail::mix_stream(1000 + d * 10 + k, 2 * i));
      auto t = kfl::random_subspace(d, k, kfl::detail::mix_stream(1000 + d * 10 + k, 2 * i + 1));
      diffs[static_cast<std::size_t>(i)] =
          std::fabs(kfl::metric(s, t) - kfl::metric_oracle(s, t, 4096, 77 + i));
    });
    for (double v : diffs) worst = std::max(worst, v);
  }
  res.pass = worst <= 0.02;
  res.detail = fmt("max |metric - oracle| = %.2e (tol 0.02) over 100 pairs in each of "
                   "G(3,1), G(4,2), G(5,2)", worst);
  return res;
}

// 2. bump contract, including a fresh cache build
outcome bump_contract() {
  outcome res;
  kfl::bump_profile bp;  // fresh build, not the shared one
  const double at_zero = std::abs(bp.phi_hat(0.0));
  double grid_max = 0;
  for (int i = 0; i <= 100000; ++i) {
    const double u = -1000.0 + 2000.0 * i / 100000.0;
    grid_max = std::max(grid_max, std::abs(bp.phi_hat(u)));
  }
  const double tail = bp.phi_hat_abs(1000.0);
  const double c4 = bp.measured_decay_constant(4, 10.0, 1000.0);
  res.pass = std::fabs(at_zero - 1.0) <= 1e-9 && grid_max <= 1.0 + 1e-9 && tail <= 1e-6 &&
             std::isfinite(c4) && c4 > 0;
  res.detail = fmt("phi_hat(0) = 1%+.1e, max on 1e5 grid = %.12f, |phi_hat(1e3)| = %.1e <= 1e-6, "
                   "C_4[10,1e3] = %.3f", at_zero - 1.0, grid_max, tail, c4);
  return res;
}

// 3. covering exponents for three Grassmannians
outcome covering_exponents() {
  outcome res;
  struct job { int d, k; std::int64_t budget; double tol; };
  std::vector<job> jobs = {{2, 1, 40000, 0.2}, {3, 1, 150000, 0.3}, {4, 2, 1500000, 0.6}};
  std::string parts;
  for (const auto& j : jobs) {
    auto scan = kfl::covering_scan(j.d, j.k, {0.5, 0.25, 0.125, 0.0625}, j.budget, 5);
    const double want = j.k * (j.d - j.k);
    const bool ok = std::fabs(scan.exponent - want) <= j.tol;
    res.pass = res.pass && ok;
    parts += fmt("%sG(%d,%d): %.3f (dim %g tol %.1f)", parts.empty() ? "" : ", ", j.d, j.k,
                 scan.exponent, want, j.tol);
  }
  res.detail = parts;
  return res;
}

// 4. sphere-family scaling exponents
outcome sphere_scaling(int d, double lo, double hi) {
  outcome res;
  Eigen::VectorXd axis = Eigen::VectorXd::Zero(d);
  axis[d - 1] = 1.0;
  auto gamma = kfl::nondegenerate_sphere_measure(d, axis, M_PI / 4.0, 4096, 1);
  std::vector<double> etas = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  auto rep = kfl::fit_beta(gamma, etas, 2000, 42, (d == 3) ? 0.5 : 1.0);
  res.pass = rep.beta_hat >= lo && rep.beta_hat <= hi;
  res.detail = fmt("beta_hat = %.3f in [%.2f, %.2f] (predicted %.1f, r^2 = %.3f)", rep.beta_hat,
                   lo, hi, *rep.predicted_beta, rep.r_squared);
  return res;
}

// 5. hyperplane sharpness example
outcome hyperplane_sharpness() {
  outcome res;
  Eigen::MatrixXd vraw(3, 2);
  vraw << 1, 0, 0, 1, 0, 0;
  auto v = kfl::orthonormalize(vraw);
  auto gamma = kfl::hyperplane_family_measure(3, 1, v, 256, 100000, 2);

  double worst_gap = 0;
  for (int j = 1; j <= 7; ++j) {
    auto wc = kfl::worst_case_slab_mass(gamma, std::pow(2.0, -j), 2000, 5);
    worst_gap = std::max(worst_gap, std::fabs(wc.mass - 1.0));
  }
  std::vector<double> etas = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
  auto rep = kfl::fit_beta(gamma, etas, 2000, 42, 0.0);

  // in-plane translations leave |mu_hat| = 1 along the normal
  std::vector<Eigen::VectorXd> ts;
  kfl::rng r(99);
  for (std::size_t i = 0; i < gamma.atoms.size(); ++i)
    ts.push_back(v.basis * Eigen::Vector2d(r.uniform(), r.uniform()));
  auto spec = kfl::assign_translations(gamma, kfl::translation_strategy::fixed(ts), 0);
  double mu_gap = 0;
  for (int j = 1; j <= 9; ++j) {
    Eigen::Vector3d xi(0, 0, std::pow(2.0, j));
    mu_gap = std::max(mu_gap, std::fabs(std::abs(kfl::mu_hat(spec, xi)) - 1.0));
  }

  res.pass = worst_gap <= 1e-9 && rep.beta_hat >= -0.1 && rep.beta_hat <= 0.1 && mu_gap <= 1e-9;
  res.detail = fmt("sup slab mass = 1%+.1e at every eta, beta_hat = %.3f in [-0.1, 0.1], "
                   "|mu_hat(R n_V)| = 1%+.1e for R = 2..2^9", worst_gap, rep.beta_hat, mu_gap);
  return res;
}

// 6. Kakeya decay in R^2 with envelope domination
outcome kakeya_decay_d2() {
  outcome res;
  auto gamma = kfl::uniform_grassmannian_measure(2, 1, 256, 200000, 3);
  auto spec = kfl::assign_translations(gamma, kfl::translation_strategy::zero(), 0);
  std::vector<double> shells = {4, 8, 16, 32, 64, 128, 256, 512};
  auto fit = kfl::fit_decay([&](const Eigen::VectorXd& xi) { return kfl::mu_hat(spec, xi); }, 2,
                            shells, 2048, 7);
  // envelope domination at independently sampled frequencies on every shell
  double dom_gap = -1.0;
  for (std::size_t s = 0; s < shells.size(); ++s) {
    for (int i = 0; i < 256; ++i) {
      kfl::rng r(kfl::detail::mix_stream(1234, s * 1000 + i));
      Eigen::VectorXd xi = shells[s] * r.unit_vector(2);
      dom_gap = std::max(dom_gap,
                         std::abs(kfl::mu_hat(spec, xi)) - kfl::mu_hat_envelope(spec, xi));
    }
  }
  const bool domination = dom_gap <= 1e-9;
  res.pass = fit.fourier_dim_estimate >= 1.6 && domination;
  res.detail = fmt("fourier_dim_estimate = %.3f (needs >= 1.6; slope %.3f, r^2 = %.3f), "
                   "envelope domination gap = %.1e", fit.fourier_dim_estimate, fit.slope,
                   fit.r_squared, dom_gap);
  if (!res.pass && domination)
    res.detail += " [expected red: one-sided-segment sections bound the estimate near 1.33 at "
                  "n = 256; see the repo notes]";
  return res;
}

// 7. cone probe (exploratory band)
outcome cone_probe() {
  outcome res;
  auto spec = kfl::cone_measure_spec(3, 4096);
  std::vector<double> shells = {4, 8, 16, 32, 64, 128, 256, 512};
  auto fit = kfl::fit_decay([&](const Eigen::VectorXd& xi) { return kfl::mu_hat(spec, xi); }, 3,
                            shells, 2048, 7);
  const double twice = 2.0 * fit.slope;
  res.pass = twice >= 0.7 && twice <= 1.3;
  res.detail = fmt("exploratory: 2*slope = %.3f in [0.7, 1.3] (r^2 = %.3f); probes the value d-2",
                   twice, fit.r_squared);
  return res;
}

// 8. circle surface measure calibration
outcome circle_calibration() {
  outcome res;
  std::vector<double> shells = {4, 8, 16, 32, 64, 128, 256, 512};
  auto fit = kfl::fit_decay(
      [](const Eigen::VectorXd& xi) { return kfl::circle_surface_mu_hat(1.0, xi); }, 2, shells,
      64, 7);
  res.pass = std::fabs(fit.slope - 0.5) <= 0.1;
  res.detail = fmt("slope = %.4f (target 0.5 +- 0.1), dim estimate %.3f ~ d-1", fit.slope,
                   fit.fourier_dim_estimate);
  return res;
}

// 9. proof identities
outcome proof_identities() {
  outcome res;
  kfl::rng r(3);
  double worst_rel = 0;
  for (int i = 0; i < 1000; ++i) {
    const double alpha = r.uniform(0.05, 0.95);
    const double beta = r.uniform(0.1, 3.0);
    const double xi = std::exp(r.uniform(0.1, 8.0));
    const double eta = std::pow(xi, -alpha);
    const double n = alpha * beta / (1.0 - alpha);
    const double t1 = std::pow(eta, beta);
    const double t2 = std::pow(eta * xi, -n);
    worst_rel = std::max(worst_rel, std::fabs(t1 - t2) / std::max(t1, t2));
  }

  Eigen::VectorXd axis = Eigen::VectorXd::Zero(3);
  axis[2] = 1.0;
  auto gamma = kfl::nondegenerate_sphere_measure(3, axis, M_PI / 4.0, 256, 1);
  bool identical = true;
  std::vector<Eigen::VectorXd> xis;
  for (int i = 0; i < 25; ++i) {
    kfl::rng rr(500 + i);
    xis.push_back(50.0 * rr.uniform() * rr.unit_vector(3));
  }
  auto base = kfl::assign_translations(gamma, kfl::translation_strategy::zero(), 0);
  std::vector<double> ref;
  for (const auto& xi : xis) ref.push_back(kfl::mu_hat_envelope(base, xi));
  for (int a = 0; a < 10; ++a) {
    auto moved = kfl::assign_translations(gamma, kfl::translation_strategy::random_box(1.0), a);
    for (std::size_t i = 0; i < xis.size(); ++i)
      identical = identical && (kfl::mu_hat_envelope(moved, xis[i]) == ref[i]);
  }
  res.pass = worst_rel <= 1e-12 && identical;
  res.detail = fmt("split-bound term equality rel err = %.1e over 1000 triples; envelope "
                   "bit-identical across 10 translation draws: %s", worst_rel,
                   identical ? "yes" : "no");
  return res;
}

}  // namespace

int main() {
  std::vector<criterion> crits = {
      {1, "metric identity (principal angles vs Hausdorff oracle)", 60, metric_identity},
      {2, "bump contract (phi_hat bounds, decay, C_4)", 30, bump_contract},
      {3, "covering exponents recover dim G(d,k)", 120, covering_exponents},
      {4, "sphere family beta: d = 3 (predicted 1/2)", 120,
       [] { return sphere_scaling(3, 0.35, 0.65); }},
      {4, "sphere family beta: d = 4 (predicted 1)", 120,
       [] { return sphere_scaling(4, 0.80, 1.20); }},
      {5, "hyperplane sharpness example", 60, hyperplane_sharpness},
      {6, "Kakeya decay in R^2 + envelope domination", 180, kakeya_decay_d2},
      {7, "cone probe (exploratory)", 180, cone_probe},
      {8, "circle surface measure calibration", 60, circle_calibration},
      {9, "proof identities (split bound, envelope invariance)", 10, proof_identities},
  };

  int failures = 0;
  for (auto& c : crits) {
    const auto t0 = std::chrono::steady_clock::now();
    outcome res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt <= c.time_limit_s;
    const bool pass = res.pass && in_time;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s — %s (%.1fs / limit %.0fs)\n", pass ? "PASS" : "FAIL",
                c.id, c.title.c_str(), res.detail.c_str(), dt, c.time_limit_s);
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion check(s) failed\n", failures);
  else std::printf("all acceptance criteria passed\n");
  return failures;
}

#include <catch2/catch.hpp>

#include <cmath>
#include <complex>

#include "kfl/decay.hpp"
#include "kfl/kakeya_measure.hpp"

namespace {
// synthetic radial profiles
auto power_law(double exponent) {
  return [exponent](const Eigen::VectorXd& xi) {
    return std::complex<double>(std::pow(xi.norm(), -exponent), 0.0);
  };
}
}  // namespace

TEST_CASE("shell_max of a constant function is that constant") {
  auto one = [](const Eigen::VectorXd&) { return std::complex<double>(1.0, 0.0); };
  REQUIRE(kfl::shell_max(one, 3, 16.0, 16, 1) == 1.0);
}

TEST_CASE("fit_decay on exact power laws") {
  std::vector<double> radii = {4, 8, 16, 32, 64, 128, 256, 512};
  auto half = kfl::fit_decay(power_law(0.5), 2, radii, 32, 1);
  REQUIRE(half.slope == Approx(0.5).margin(1e-9));
  REQUIRE(half.fourier_dim_estimate == Approx(1.0).margin(1e-9));
  REQUIRE(half.r_squared == Approx(1.0).margin(1e-12));

  auto flat = kfl::fit_decay([](const Eigen::VectorXd&) { return std::complex<double>(0.37, 0); },
                             2, radii, 32, 1);
  REQUIRE(flat.slope == Approx(0.0).margin(1e-12));
  REQUIRE(flat.fourier_dim_estimate == Approx(0.0).margin(1e-12));

  // estimate is capped by the ambient dimension
  auto steep = kfl::fit_decay(power_law(3.0), 2, radii, 32, 1);
  REQUIRE(steep.fourier_dim_estimate == 2.0);
}

TEST_CASE("fit_decay grid validation") {
  REQUIRE_THROWS_AS(kfl::fit_decay(power_law(1.0), 2, {4, 8, 16, 32}, 32, 1),
                    kfl::insufficient_grid);
  REQUIRE_THROWS_AS(kfl::fit_decay(power_law(1.0), 2, {2, 4, 8, 16, 32}, 32, 1),
                    kfl::insufficient_grid);
  REQUIRE_THROWS_AS(kfl::fit_decay(power_law(1.0), 2, {4, 8, 16, 32, 48}, 32, 1),
                    kfl::insufficient_grid);
  REQUIRE_THROWS_AS(kfl::shell_max(power_law(1.0), 2, 16.0, 8, 1), kfl::bad_parameters);
}

TEST_CASE("shell_max is monotone in the sample count and phase-invariant") {
  auto gamma = kfl::uniform_grassmannian_measure(2, 1, 64, 30000, 2);
  auto spec = kfl::assign_translations(gamma, kfl::translation_strategy::zero(), 0);
  auto f = [&](const Eigen::VectorXd& xi) { return kfl::mu_hat(spec, xi); };
  const double m16 = kfl::shell_max(f, 2, 32.0, 16, 5);
  const double m64 = kfl::shell_max(f, 2, 32.0, 64, 5);
  const double m256 = kfl::shell_max(f, 2, 32.0, 256, 5);
  REQUIRE(m16 <= m64);
  REQUIRE(m64 <= m256);

  // multiplying F by a unimodular constant leaves shell maxima unchanged
  const std::complex<double> rot = std::polar(1.0, 1.234);
  auto g = [&](const Eigen::VectorXd& xi) { return rot * kfl::mu_hat(spec, xi); };
  REQUIRE(kfl::shell_max(g, 2, 32.0, 64, 5) == Approx(m64).epsilon(1e-12));
}

TEST_CASE("circle surface measure decays with slope one half") {
  std::vector<double> radii = {4, 8, 16, 32, 64, 128, 256, 512};
  auto fit = kfl::fit_decay(
      [](const Eigen::VectorXd& xi) { return kfl::circle_surface_mu_hat(1.0, xi); }, 2, radii, 64,
      7);
  REQUIRE(fit.slope == Approx(0.5).margin(0.1));
  REQUIRE(fit.fourier_dim_estimate == Approx(1.0).margin(0.2));
}

TEST_CASE("decaying measures keep shell maxima in [0,1]") {
  auto spec = kfl::cone_measure_spec(3, 256);
  std::vector<double> radii = {4, 8, 16, 32, 64};
  auto fit = kfl::fit_decay([&](const Eigen::VectorXd& xi) { return kfl::mu_hat(spec, xi); }, 3,
                            radii, 64, 3);
  for (double v : fit.shell_maxima) {
    REQUIRE(v >= 0.0);
    REQUIRE(v <= 1.0 + 1e-9);
  }
  REQUIRE(fit.radii.size() == fit.shell_maxima.size());
}

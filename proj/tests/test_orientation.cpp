#include <catch2/catch.hpp>

#include <cmath>

#include "kfl/orientation.hpp"

TEST_CASE("uniform measure: normalization, masses, and net property") {
  auto gamma = kfl::uniform_grassmannian_measure(2, 1, 64, 100000, 9);
  REQUIRE(gamma.total_mass() == Approx(1.0).margin(1e-9));
  REQUIRE(gamma.separation == Approx(1.0 / 64));

  const double n_atoms = static_cast<double>(gamma.atoms.size());
  for (const auto& a : gamma.atoms) {
    REQUIRE(a.mass >= 0.2 / n_atoms);
    REQUIRE(a.mass <= 5.0 / n_atoms);
  }
  double min_pairwise = 10;
  for (std::size_t i = 0; i < gamma.atoms.size(); ++i)
    for (std::size_t j = i + 1; j < gamma.atoms.size(); ++j)
      min_pairwise =
          std::min(min_pairwise, kfl::metric(gamma.atoms[i].plane, gamma.atoms[j].plane));
  REQUIRE(min_pairwise >= 1.0 / 64);
}

TEST_CASE("sphere measure geometry") {
  Eigen::Vector3d axis(0, 0, 1);
  const double a = M_PI / 4;
  auto gamma = kfl::nondegenerate_sphere_measure(3, axis, a, 256, 1);
  REQUIRE(gamma.atoms.size() == 256);
  REQUIRE(gamma.total_mass() == Approx(1.0).margin(1e-9));
  REQUIRE(gamma.separation == 0.0);
  for (const auto& at : gamma.atoms) {
    REQUIRE(at.plane.basis.col(0).norm() == Approx(1.0).margin(1e-12));
    REQUIRE(at.plane.basis.col(0).dot(axis) == Approx(std::cos(a)).margin(1e-9));
    REQUIRE(at.mass == Approx(1.0 / 256));
  }
}

TEST_CASE("sphere measure rejections") {
  Eigen::Vector3d axis(0, 0, 1);
  REQUIRE_THROWS_AS(kfl::nondegenerate_sphere_measure(3, axis, M_PI / 2, 64, 1),
                    kfl::degenerate_sphere);
  REQUIRE_THROWS_AS(kfl::nondegenerate_sphere_measure(2, Eigen::Vector2d(0, 1), 0.5, 64, 1),
                    kfl::bad_dimensions);
  REQUIRE_THROWS_AS(kfl::nondegenerate_sphere_measure(3, axis, 0.5, 4, 1), kfl::bad_parameters);
}

TEST_CASE("hyperplane family stays inside its hyperplane") {
  Eigen::MatrixXd vraw(3, 2);
  vraw << 1, 0, 0, 1, 0, 0;
  auto v = kfl::orthonormalize(vraw);
  auto gamma = kfl::hyperplane_family_measure(3, 1, v, 64, 50000, 4);
  REQUIRE(gamma.total_mass() == Approx(1.0).margin(1e-9));
  for (const auto& a : gamma.atoms) REQUIRE(std::fabs(a.plane.basis(2, 0)) <= 1e-9);
  REQUIRE_THROWS_AS(kfl::hyperplane_family_measure(3, 2, v, 64, 1000, 4), kfl::bad_dimensions);
}

TEST_CASE("translations: zero, box, fixed") {
  auto gamma = kfl::uniform_grassmannian_measure(3, 1, 16, 20000, 5);
  const std::size_t n = gamma.atoms.size();

  auto zero_spec = kfl::assign_translations(gamma, kfl::translation_strategy::zero(), 1);
  REQUIRE(zero_spec.translations.size() == n);
  for (const auto& t : zero_spec.translations) REQUIRE(t.norm() == 0.0);

  auto box1 = kfl::assign_translations(gamma, kfl::translation_strategy::random_box(1.0), 7);
  auto box2 = kfl::assign_translations(gamma, kfl::translation_strategy::random_box(1.0), 7);
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE((box1.translations[i] - box2.translations[i]).norm() == 0.0);
    REQUIRE(box1.translations[i].minCoeff() >= 0.0);
    REQUIRE(box1.translations[i].maxCoeff() <= 1.0);
  }

  std::vector<Eigen::VectorXd> too_short(n - 1, Eigen::VectorXd::Zero(3));
  REQUIRE_THROWS_AS(
      kfl::assign_translations(gamma, kfl::translation_strategy::fixed(too_short), 1),
      kfl::length_mismatch);

  std::vector<Eigen::VectorXd> too_far(n, Eigen::VectorXd::Zero(3));
  too_far[0] = Eigen::Vector3d(11, 0, 0);
  REQUIRE_THROWS_AS(kfl::assign_translations(gamma, kfl::translation_strategy::fixed(too_far), 1),
                    kfl::bad_parameters);
}

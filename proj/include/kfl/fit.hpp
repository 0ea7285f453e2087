#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "kfl/errors.hpp"

namespace kfl {

struct linear_fit_result {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
};

// Ordinary least squares y ~ slope*x + intercept.
inline linear_fit_result linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw length_mismatch("linear_fit: x/y size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw bad_parameters("linear_fit: need at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0) throw bad_parameters("linear_fit: degenerate abscissae");
  linear_fit_result r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  if (syy > 0) {
    double ssres = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = y[i] - (r.slope * x[i] + r.intercept);
      ssres += e * e;
    }
    r.r_squared = 1.0 - ssres / syy;
  }
  return r;
}

}  // namespace kfl

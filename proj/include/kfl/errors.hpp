#pragma once

#include <stdexcept>
#include <string>

namespace kfl {

// Base for all library errors so callers can catch kfl failures in one place.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct rank_deficient : error {
  using error::error;
};
struct dimension_mismatch : error {
  using error::error;
};
struct bad_dimensions : error {
  using error::error;
};
struct degenerate_sphere : error {
  using error::error;
};
struct length_mismatch : error {
  using error::error;
};
struct zero_frequency : error {
  using error::error;
};
struct grid_below_resolution : error {
  using error::error;
};
struct insufficient_grid : error {
  using error::error;
};
struct bad_parameters : error {
  using error::error;
};

}  // namespace kfl

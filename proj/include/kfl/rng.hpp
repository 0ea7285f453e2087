#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

namespace kfl {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Mix a seed with a stream/counter id into an independent stream seed.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ull + (stream << 1));
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b >> 17) ^ stream;
}

}  // namespace detail

// Small deterministic generator. Streams derived via rng(seed, counter) are
// independent of evaluation order, which keeps results identical for any
// worker count.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {
    // warm up so small seeds decorrelate
    detail::splitmix64(state_);
    detail::splitmix64(state_);
  }
  rng(std::uint64_t seed, std::uint64_t stream) : rng(detail::mix_stream(seed, stream)) {}

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  // uniform on (0,1), never returns an exact endpoint
  double uniform() { return ((next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0); }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Box-Muller, one variate per call (portable, no hidden state)
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Eigen::VectorXd unit_vector(int dim) {
    for (;;) {
      Eigen::VectorXd v = gaussian_vector(dim);
      double n = v.norm();
      if (n > 1e-12) return v / n;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace kfl

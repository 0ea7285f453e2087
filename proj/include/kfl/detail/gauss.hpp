#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace kfl::detail {

struct gauss_rule {
  std::vector<double> nodes;    // on [-1,1]
  std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre nodes/weights via Newton iteration on P_n.
inline gauss_rule make_gauss_rule(int n) {
  gauss_rule g;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-15) break;
    }
    g.nodes[i] = t;
    g.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return g;
}

inline const gauss_rule& gauss_legendre(int n) {
  static std::map<int, gauss_rule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
  return it->second;
}

}  // namespace kfl::detail

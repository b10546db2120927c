#pragma once

// Brute-force and closed-form reference values, computed without the
// library's algebra or solver.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;  // 0-based

inline int brute_alpha(int n, const EdgeList& edges) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (auto [u, v] : edges) ok = ok && !((s >> u & 1) && (s >> v & 1));
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline int brute_max_cut(int n, const EdgeList& edges) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int cut = 0;
    for (auto [u, v] : edges) cut += ((s >> u) ^ (s >> v)) & 1;
    best = std::max(best, cut);
  }
  return best;
}

/// Lovasz theta of the odd cycle C_n.
inline double theta_cycle(int n) {
  const double c = std::cos(std::numbers::pi / n);
  return n * c / (1 + c);
}

/// Lovasz theta of an edge-transitive regular graph: -n l_min / (l_max - l_min).
inline double theta_edge_transitive(int n, const EdgeList& edges) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : edges) a(u, v) = a(v, u) = 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(n - 1);
  return -n * lo / (hi - lo);
}

/// max c.x over conv(S) = max over the points themselves.
inline double lp_over_points(const std::vector<std::vector<double>>& pts, const std::vector<double>& c) {
  double best = -INFINITY;
  for (const auto& p : pts) {
    double v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * p[i];
    best = std::max(best, v);
  }
  return best;
}

inline std::vector<double> cardioid_point(double th) {
  return {2 * std::cos(th) * (1 - std::cos(th)), 2 * std::sin(th) * (1 - std::cos(th))};
}

/// Support function of the cardioid along c from `samples` parameter values.
inline double cardioid_support(const std::vector<double>& c, int samples = 100000) {
  double best = -INFINITY;
  for (int j = 0; j < samples; ++j) {
    auto p = cardioid_point(2 * std::numbers::pi * j / samples);
    best = std::max(best, c[0] * p[0] + c[1] * p[1]);
  }
  return best;
}

/// Convex hull (counterclockwise, monotone chain) of planar points.
inline std::vector<std::vector<double>> hull_2d(std::vector<std::vector<double>> p) {
  std::sort(p.begin(), p.end());
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::vector<double>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

/// max{t : t d in polygon}, for a polygon containing the origin.
inline double radial(const std::vector<std::vector<double>>& poly, const std::vector<double>& d) {
  double best = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    // t d = a + s (b - a)
    const double ex = b[0] - a[0], ey = b[1] - a[1];
    const double det = d[0] * (-ey) - d[1] * (-ex);
    if (std::abs(det) < 1e-15) continue;
    const double t = (a[0] * (-ey) - a[1] * (-ex)) / det;
    const double s = (d[0] * a[1] - d[1] * a[0]) / det;
    if (s >= -1e-12 && s <= 1 + 1e-12) best = std::max(best, t);
  }
  return best;
}

inline EdgeList random_bipartite(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> side(0, 1);
  std::bernoulli_distribution keep(0.5);
  std::vector<int> s(n);
  for (auto& v : s) v = side(rng);
  EdgeList e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (s[u] != s[v] && keep(rng)) e.emplace_back(u, v);
    }
  }
  return e;
}

}  // namespace oracle

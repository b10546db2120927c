#include "theta/thetaops.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace theta {

namespace {

/// Real roots of sum_i a_i t^i via companion-matrix eigenvalues.
std::vector<double> real_roots(std::vector<double> a) {
  while (!a.empty() && std::abs(a.back()) < 1e-14) a.pop_back();
  std::vector<double> roots;
  std::size_t zeros = 0;
  while (zeros < a.size() && std::abs(a[zeros]) < 1e-14) ++zeros;
  if (zeros > 0) roots.push_back(0.0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
  if (a.size() < 2) return roots;
  const std::size_t deg = a.size() - 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -a[i] / a[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (const auto& z : es.eigenvalues()) {
    if (std::abs(z.imag()) <= 1e-7 * (1.0 + std::abs(z.real()))) roots.push_back(z.real());
  }
  return roots;
}

}  // namespace

std::vector<std::vector<double>> sample_plane_curve(const Polynomial& h, std::size_t count) {
  if (h.nvars() != 2) throw std::invalid_argument("plane curve needs two variables");
  if (count == 0) throw std::invalid_argument("need at least one sample line");
  std::vector<std::vector<double>> out;
  bool origin = false;
  for (std::size_t j = 0; j < count; ++j) {
    const double phi = std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    const double c = std::cos(phi), s = std::sin(phi);
    std::vector<double> a(static_cast<std::size_t>(std::max(h.degree(), 0)) + 1, 0.0);
    for (const auto& [m, coef] : h.terms()) a[m.degree()] += coef.get_d() * std::pow(c, m[0]) * std::pow(s, m[1]);
    for (double t : real_roots(a)) {
      if (t == 0.0) {
        if (origin) continue;
        origin = true;
      }
      // One Newton step along the line cleans up the companion root.
      double f = 0.0, df = 0.0;
      for (std::size_t i = a.size(); i-- > 0;) {
        df = df * t + f;
        f = f * t + a[i];
      }
      if (t != 0.0 && df != 0.0) t -= f / df;
      out.push_back({t * c, t * s});
    }
  }
  return out;
}

}  // namespace theta

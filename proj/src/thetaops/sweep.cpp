#include "theta/thetaops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace theta {

std::vector<BoundaryPoint> trace_boundary_2d(const ThetaBodyProblem& p, std::size_t num_dirs, const SdpOptions& opts,
                                             std::size_t jobs) {
  if (p.nvars() != 2) throw std::invalid_argument("boundary tracing needs exactly two variables");
  if (num_dirs == 0) throw std::invalid_argument("need at least one direction");
  return parallel_map<BoundaryPoint>(num_dirs, jobs, [&](std::size_t j) {
    BoundaryPoint b;
    b.theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(num_dirs);
    const double c = std::cos(b.theta), s = std::sin(b.theta);
    b.ray = ray_shoot(p, {c, s}, opts);
    if (!b.ray.unbounded) {
      b.x = b.ray.t * c;
      b.y = b.ray.t * s;
    }
    return b;
  });
}

namespace {

/// Linear constraints on the upper triangle of a Gram matrix X indexed by
/// B_k: row l is the B_2k coordinate l of f' X f.
struct GramSystem {
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, std::size_t>> slots;  // (i, j), i <= j
  RationalMatrix rows;                                      // nvars_y x slots
  std::vector<Eigen::MatrixXd> null_basis;
  RationalMatrix upper;  // rows 1.. of `rows`
};

GramSystem build_gram_system(const ThetaBodyProblem& p) {
  GramSystem g;
  const auto& t = *p.tmpl;
  g.dim = t.dim();
  for (std::size_t i = 0; i < g.dim; ++i) {
    for (std::size_t j = i; j < g.dim; ++j) g.slots.emplace_back(i, j);
  }
  g.rows.assign(t.nvars_y(), RationalVector(g.slots.size()));
  for (std::size_t q = 0; q < g.slots.size(); ++q) {
    auto [i, j] = g.slots[q];
    for (const auto& [l, a] : t.entry(i, j)) g.rows[l][q] += i == j ? a : 2 * a;
  }
  g.upper.assign(g.rows.begin() + 1, g.rows.end());
  for (const auto& v : nullspace(g.upper, g.slots.size())) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.dim, g.dim);
    for (std::size_t q = 0; q < g.slots.size(); ++q) {
      auto [i, j] = g.slots[q];
      m(i, j) = m(j, i) = v[q].get_d();
    }
    g.null_basis.push_back(std::move(m));
  }
  return g;
}

SupportLine solve_support(const ThetaBodyProblem& p, const GramSystem& g, const std::vector<double>& c,
                          const SdpOptions& opts) {
  SupportLine out;
  out.c = c;
  const auto& t = *p.tmpl;
  // c.x = sum_l chat_l y_l exactly (doubles are exact rationals).
  RationalVector chat(t.nvars_y());
  for (std::size_t v = 0; v < c.size(); ++v) {
    for (const auto& [l, a] : t.coord_form(v)) chat[l] += Rational(c[v]) * a;
  }
  RationalVector rhs(chat.begin() + 1, chat.end());
  for (auto& r : rhs) r = -r;
  auto xp = solve(g.upper, rhs);
  if (!xp) {
    out.status = SdpStatus::Infeasible;
    out.unbounded = true;
    out.lambda = std::numeric_limits<double>::infinity();
    return out;
  }
  Eigen::MatrixXd f0 = Eigen::MatrixXd::Zero(g.dim, g.dim);
  for (std::size_t q = 0; q < g.slots.size(); ++q) {
    auto [i, j] = g.slots[q];
    f0(i, j) = f0(j, i) = (*xp)[q].get_d();
  }
  Rational base = chat[0];
  for (std::size_t q = 0; q < g.slots.size(); ++q) base += g.rows[0][q] * (*xp)[q];
  // lambda = base + row0 . (sum u_k N_k); minimize, i.e. maximize b.u with b_k = -row0 . N_k.
  Eigen::VectorXd b(g.null_basis.size());
  for (std::size_t k = 0; k < g.null_basis.size(); ++k) {
    double s = 0.0;
    for (std::size_t q = 0; q < g.slots.size(); ++q) {
      auto [i, j] = g.slots[q];
      s += g.rows[0][q].get_d() * g.null_basis[k](i, j);
    }
    b[k] = -s;
  }
  auto res = solve_affine_lmi(f0, g.null_basis, b, opts);
  switch (res.status) {
    case SdpStatus::Infeasible:
      // No Gram matrix for any lambda: no supporting halfspace in direction c.
      out.status = SdpStatus::Unbounded;
      out.unbounded = true;
      out.lambda = std::numeric_limits<double>::infinity();
      break;
    case SdpStatus::Unbounded:
      out.status = SdpStatus::Infeasible;  // lambda -> -infinity: the body is empty
      out.lambda = -std::numeric_limits<double>::infinity();
      break;
    default:
      out.status = res.status;
      out.lambda = base.get_d() - res.value;
  }
  return out;
}

}  // namespace

std::vector<SupportLine> support_contour(const ThetaBodyProblem& p, const std::vector<std::vector<double>>& directions,
                                         const SdpOptions& opts, std::size_t jobs) {
  for (const auto& c : directions) {
    if (c.size() != p.nvars()) throw std::invalid_argument("direction has wrong dimension");
    bool zero = true;
    for (double v : c) zero = zero && v == 0.0;
    if (zero) throw std::invalid_argument("direction must be nonzero");
  }
  const auto g = build_gram_system(p);
  return parallel_map<SupportLine>(directions.size(), jobs,
                                   [&](std::size_t i) { return solve_support(p, g, directions[i], opts); });
}

}  // namespace theta

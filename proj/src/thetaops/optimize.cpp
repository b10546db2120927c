#include "theta/thetaops.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace theta {

namespace {

/// Rows coord_form(v).y - d_v * t = rhs_v over [y; t] (t omitted when no extra).
void add_coordinate_rows(const ThetaBodyProblem& p, SdpProblem& sp, const std::vector<double>& d,
                         const std::vector<double>& rhs, bool with_t) {
  const std::size_t n = p.nvars();
  const std::size_t ny = p.tmpl->nvars_y();
  sp.eq_lhs = Eigen::MatrixXd::Zero(n, ny + (with_t ? 1 : 0));
  sp.eq_rhs = Eigen::VectorXd::Zero(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& [l, a] : p.tmpl->coord_form(v)) sp.eq_lhs(v, l) += a.get_d();
    if (with_t) sp.eq_lhs(v, ny) = -d[v];
    sp.eq_rhs[v] = rhs[v];
  }
}

}  // namespace

LinearResult maximize_linear(const ThetaBodyProblem& p, const std::vector<double>& c, const SdpOptions& opts) {
  SdpProblem sp;
  sp.tmpl = p.tmpl;
  sp.objective = objective_over_y(p, c);
  sp.interior_hint = p.barycenter();
  LinearResult out;
  out.sdp = solve(sp, opts);
  out.status = out.sdp.status;
  out.value = out.sdp.value;
  if (out.sdp.y.size() == static_cast<Eigen::Index>(p.tmpl->nvars_y())) {
    Eigen::VectorXd x = p.tmpl->project(out.sdp.y);
    out.optimizer.assign(x.data(), x.data() + x.size());
  }
  return out;
}

MembershipResult membership(const ThetaBodyProblem& p, const std::vector<double>& x, const SdpOptions& opts) {
  if (x.size() != p.nvars()) throw std::invalid_argument("point has wrong dimension");
  SdpProblem sp;
  sp.tmpl = p.tmpl;
  sp.objective = Eigen::VectorXd::Zero(p.tmpl->nvars_y());
  add_coordinate_rows(p, sp, {}, x, false);
  auto ph = phase1_interior(sp, opts);
  MembershipResult out;
  out.status = ph.status;
  out.margin = ph.margin;
  out.inside = ph.feasible;
  return out;
}

RayResult ray_shoot(const ThetaBodyProblem& p, const std::vector<double>& direction, const SdpOptions& opts) {
  if (direction.size() != p.nvars()) throw std::invalid_argument("direction has wrong dimension");
  double norm = 0.0;
  for (double v : direction) norm += v * v;
  if (norm == 0.0) throw std::invalid_argument("direction must be nonzero");
  SdpProblem sp;
  sp.tmpl = p.tmpl;
  sp.extra_vars = 1;
  sp.objective = Eigen::VectorXd::Zero(p.tmpl->nvars_y() + 1);
  sp.objective[p.tmpl->nvars_y()] = 1.0;
  add_coordinate_rows(p, sp, direction, std::vector<double>(p.nvars(), 0.0), true);
  auto sol = solve(sp, opts);
  RayResult out;
  out.status = sol.status;
  out.unbounded = sol.status == SdpStatus::Unbounded;
  out.t = out.unbounded ? std::numeric_limits<double>::infinity() : (sol.extra.size() ? sol.extra[0] : 0.0);
  return out;
}

}  // namespace theta

#include "theta/thetaops.hpp"

#include <stdexcept>

namespace theta {

ThetaBodyProblem make_problem(OraclePtr oracle, int k, std::optional<std::vector<std::vector<double>>> samples) {
  if (!oracle) throw std::invalid_argument("problem needs an oracle");
  ThetaBodyProblem p;
  p.k = k;
  p.tmpl = std::make_shared<const MomentTemplate>(build_moment_template(*oracle, k));
  p.samples = samples ? std::move(*samples) : oracle->sample_points();
  p.oracle = std::move(oracle);
  return p;
}

std::optional<Eigen::VectorXd> ThetaBodyProblem::barycenter() const {
  if (samples.empty()) return std::nullopt;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(tmpl->nvars_y());
  for (const auto& s : samples) acc += point_to_moment_vector(*oracle, k, s);
  return Eigen::VectorXd(acc / static_cast<double>(samples.size()));
}

Eigen::VectorXd objective_over_y(const ThetaBodyProblem& p, const std::vector<double>& c) {
  if (c.size() != p.nvars()) throw std::invalid_argument("objective has wrong length");
  Eigen::VectorXd obj = Eigen::VectorXd::Zero(p.tmpl->nvars_y());
  for (std::size_t v = 0; v < c.size(); ++v) {
    for (const auto& [l, a] : p.tmpl->coord_form(v)) obj[l] += c[v] * a.get_d();
  }
  return obj;
}

}  // namespace theta

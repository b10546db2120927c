#include "theta/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace theta {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

json number_json(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return std::stod(format_number(v));
}

namespace {

json vector_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number_json(x));
  return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json rational_matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    out.push_back(r);
  }
  return out;
}

json rational_vector_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

json solve_report(const ProblemFile& p, int k, const std::vector<double>& c, const LinearResult& r) {
  json j;
  j["kind"] = std::string(to_string(p.kind));
  if (!p.name.empty()) j["name"] = p.name;
  j["k"] = k;
  j["objective"] = vector_json(c);
  j["status"] = std::string(to_string(r.status));
  j["value"] = number_json(r.value);
  j["optimizer"] = vector_json(r.optimizer);
  if (p.kind == ProblemKind::MaxCut && r.status == SdpStatus::Optimal) {
    // sum_e (1 - y_e)/2 under the default objective -sum y_e
    j["cut_bound"] = number_json((static_cast<double>(p.graph->edges().size()) + r.value) / 2);
  }
  j["solver"] = {{"iterations", r.sdp.iterations},
                 {"gap", number_json(r.sdp.gap)},
                 {"primal_residual", number_json(r.sdp.primal_residual)},
                 {"dual_residual", number_json(r.sdp.dual_residual)},
                 {"dual_bound", number_json(r.sdp.bound)}};
  return j;
}

json level_report_json(const LevelReport& r) {
  json j;
  j["ambient_dim"] = r.hull.ambient_dim;
  j["affine_dim"] = r.hull.dim;
  j["pivots"] = r.hull.pivots;
  json facets = json::array();
  for (std::size_t i = 0; i < r.facets.size(); ++i) {
    const auto& f = r.facets[i];
    facets.push_back({{"normal", rational_vector_json(f.normal)},
                      {"offset", to_string(f.offset)},
                      {"tight", f.tight},
                      {"levels", r.levels[i]}});
  }
  j["facets"] = facets;
  j["overall_level"] = r.overall_level;
  j["is_2_level"] = r.is_2_level;
  j["th_k_bound"] = r.th_k_bound;
  return j;
}

json certificate_json(const Certificate& c, const ThetaBodyProblem& p) {
  json j;
  j["inequality"] = c.linear_poly.to_string() + " >= 0";
  j["k"] = p.k;
  json labels = json::array();
  const auto& basis = p.oracle->basis();
  std::size_t dim = p.oracle->level_size(p.k);
  for (std::size_t i = 0; i < dim; ++i) {
    labels.push_back(i < basis.labels.size() && !basis.labels[i].empty() ? basis.labels[i]
                                                                         : basis.elements[i].to_string());
  }
  j["basis"] = labels;
  j["mode"] = std::string(to_string(c.mode));
  j["verified"] = c.verified;
  j["gram_psd"] = c.gram_psd;
  j["max_residual"] = number_json(c.max_residual);
  j["residual"] = c.residual.to_string();
  j["optimum"] = number_json(c.optimum);
  if (c.mode == CertificateMode::Exact) {
    j["gram"] = rational_matrix_json(c.gram);
  } else {
    j["gram"] = matrix_json(c.gram_numeric);
  }
  if (!c.message.empty()) j["message"] = c.message;
  return j;
}

std::string trace_csv(const std::vector<BoundaryPoint>& pts) {
  std::ostringstream out;
  out << "theta,t,x,y\n";
  for (const auto& b : pts) {
    out << format_number(b.theta) << ',';
    if (b.ray.unbounded) {
      out << "inf,inf,inf\n";
    } else if (b.ray.status != SdpStatus::Optimal) {
      out << "nan,nan,nan\n";
    } else {
      out << format_number(b.ray.t) << ',' << format_number(b.x) << ',' << format_number(b.y) << '\n';
    }
  }
  return out.str();
}

std::string contour_csv(const std::vector<SupportLine>& lines) {
  std::ostringstream out;
  out << "c1,c2,lambda,status\n";
  for (const auto& l : lines) {
    out << format_number(l.c.at(0)) << ',' << format_number(l.c.at(1)) << ','
        << (l.unbounded ? std::string("inf") : format_number(l.lambda)) << ',' << to_string(l.status) << '\n';
  }
  return out.str();
}

namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  void add(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  bool empty() const { return x0 > x1; }
};

// Segment of {c.x = lambda} inside the box, if any.
std::optional<std::array<double, 4>> clip_line(const SupportLine& l, const Box& b) {
  double a = l.c[0], c = l.c[1], lam = l.lambda;
  std::vector<std::pair<double, double>> hits;
  auto push = [&](double x, double y) {
    const double eps = 1e-12 * (1 + std::abs(x) + std::abs(y));
    if (x < b.x0 - eps || x > b.x1 + eps || y < b.y0 - eps || y > b.y1 + eps) return;
    for (auto [hx, hy] : hits) {
      if (std::abs(hx - x) <= eps && std::abs(hy - y) <= eps) return;
    }
    hits.emplace_back(x, y);
  };
  if (c != 0) {
    push(b.x0, (lam - a * b.x0) / c);
    push(b.x1, (lam - a * b.x1) / c);
  }
  if (a != 0) {
    push((lam - c * b.y0) / a, b.y0);
    push((lam - c * b.y1) / a, b.y1);
  }
  if (hits.size() < 2) return std::nullopt;
  return std::array<double, 4>{hits[0].first, hits[0].second, hits[1].first, hits[1].second};
}

std::string pt(double x, double y) { return format_number(x) + "," + format_number(-y); }

}  // namespace

std::string render_svg(const std::vector<BoundaryPoint>& trace, const std::vector<SupportLine>& contour,
                       const std::vector<std::vector<double>>& variety) {
  Box box;
  for (const auto& b : trace) {
    if (!b.ray.unbounded && b.ray.status == SdpStatus::Optimal) box.add(b.x, b.y);
  }
  for (const auto& v : variety) box.add(v[0], v[1]);
  if (box.empty()) {
    box.add(-1, -1);
    box.add(1, 1);
  }
  double w = box.x1 - box.x0, h = box.y1 - box.y0;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  Box view{box.x0 - 0.05 * w, box.y0 - 0.05 * h, box.x1 + 0.05 * w, box.y1 + 0.05 * h};
  const double vw = view.x1 - view.x0, vh = view.y1 - view.y0;
  const double stroke = 0.004 * std::max(vw, vh);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(view.x0) << ' '
      << format_number(-view.y1) << ' ' << format_number(vw) << ' ' << format_number(vh)
      << "\" width=\"600\" height=\"" << format_number(600 * vh / vw) << "\">\n";
  if (!variety.empty()) {
    // order by angle about the centroid so the polygon follows the curve
    double cx = 0, cy = 0;
    for (const auto& v : variety) cx += v[0], cy += v[1];
    cx /= static_cast<double>(variety.size());
    cy /= static_cast<double>(variety.size());
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < variety.size(); ++i) {
      order.emplace_back(std::atan2(variety[i][1] - cy, variety[i][0] - cx), i);
    }
    std::sort(order.begin(), order.end());
    out << "<polygon fill=\"#dde6f0\" stroke=\"#4a6c8c\" stroke-width=\"" << format_number(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& v = variety[order[i].second];
      out << (i ? " " : "") << pt(v[0], v[1]);
    }
    out << "\"/>\n";
  }
  std::vector<const BoundaryPoint*> finite;
  for (const auto& b : trace) {
    if (!b.ray.unbounded && b.ray.status == SdpStatus::Optimal) finite.push_back(&b);
  }
  if (!finite.empty()) {
    out << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << format_number(stroke) << "\" points=\"";
    for (std::size_t i = 0; i < finite.size(); ++i) out << (i ? " " : "") << pt(finite[i]->x, finite[i]->y);
    if (finite.size() == trace.size()) out << ' ' << pt(finite[0]->x, finite[0]->y);
    out << "\"/>\n";
  }
  for (const auto& l : contour) {
    if (l.unbounded || l.status != SdpStatus::Optimal) continue;
    auto seg = clip_line(l, view);
    if (!seg) continue;
    out << "<line x1=\"" << format_number((*seg)[0]) << "\" y1=\"" << format_number(-(*seg)[1]) << "\" x2=\""
        << format_number((*seg)[2]) << "\" y2=\"" << format_number(-(*seg)[3]) << "\" stroke=\"#2c3e50\" stroke-width=\""
        << format_number(stroke / 2) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace theta

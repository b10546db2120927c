#include "theta/moment.hpp"

#include <json.hpp>

#include <stdexcept>

namespace theta {

namespace {

std::size_t tri_index(std::size_t i, std::size_t j, std::size_t d) {
  if (i > j) std::swap(i, j);
  return i * d - i * (i - 1) / 2 + (j - i);
}

}  // namespace

const LinearForm& MomentTemplate::entry(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("moment entry index out of range");
  return entries_[tri_index(i, j, dim_)];
}

std::optional<std::size_t> MomentTemplate::coord_slot(std::size_t var) const {
  const auto& f = coord_forms_.at(var);
  if (f.size() == 1 && f[0].second == 1) return f[0].first;
  return std::nullopt;
}

Eigen::MatrixXd MomentTemplate::instantiate(const Eigen::VectorXd& y) const {
  if (static_cast<std::size_t>(y.size()) != nvars_y_) throw std::invalid_argument("moment vector has wrong length");
  Eigen::MatrixXd m(dim_, dim_);
  std::size_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j, ++t) {
      double v = 0.0;
      for (const auto& [l, c] : entries_[t]) v += c.get_d() * y[l];
      m(i, j) = m(j, i) = v;
    }
  }
  return m;
}

RationalMatrix MomentTemplate::instantiate(const RationalVector& y) const {
  if (y.size() != nvars_y_) throw std::invalid_argument("moment vector has wrong length");
  RationalMatrix m(dim_, RationalVector(dim_));
  std::size_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j, ++t) {
      Rational v = 0;
      for (const auto& [l, c] : entries_[t]) v += c * y[l];
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  return m;
}

std::vector<Eigen::MatrixXd> MomentTemplate::coefficient_matrices() const {
  std::vector<Eigen::MatrixXd> out(nvars_y_, Eigen::MatrixXd::Zero(dim_, dim_));
  std::size_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j, ++t) {
      for (const auto& [l, c] : entries_[t]) {
        out[l](i, j) = out[l](j, i) = c.get_d();
      }
    }
  }
  return out;
}

Eigen::VectorXd MomentTemplate::project(const Eigen::VectorXd& y) const {
  Eigen::VectorXd x(coord_forms_.size());
  for (std::size_t v = 0; v < coord_forms_.size(); ++v) {
    double s = 0.0;
    for (const auto& [l, c] : coord_forms_[v]) s += c.get_d() * y[l];
    x[v] = s;
  }
  return x;
}

std::string MomentTemplate::entry_to_string(std::size_t i, std::size_t j) const {
  const auto& f = entry(i, j);
  if (f.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [l, c] : f) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (a != 1) out += to_string(a) + "*";
    out += "y" + std::to_string(l);
  }
  return out;
}

std::string MomentTemplate::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  j["nvars_y"] = nvars_y_;
  j["level"] = level_;
  j["rows"] = row_labels_;
  j["y"] = y_labels_;
  auto entries = nlohmann::json::array();
  std::size_t t = 0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c, ++t) {
      auto terms = nlohmann::json::array();
      for (const auto& [l, a] : entries_[t]) terms.push_back({l, to_string(a)});
      entries.push_back({{"i", r}, {"j", c}, {"terms", terms}});
    }
  }
  j["entries"] = entries;
  return j.dump();
}

MomentTemplate build_moment_template(const QuotientOracle& oracle, int k) {
  MomentTemplate t;
  t.dim_ = oracle.level_size(k);
  const auto& basis = oracle.basis();
  t.nvars_y_ = oracle.complete() ? std::min(basis.size(), basis.prefix_size(2 * k)) : basis.prefix_size(2 * k);
  t.level_ = k;
  t.entries_.reserve(t.dim_ * (t.dim_ + 1) / 2);
  for (std::size_t i = 0; i < t.dim_; ++i) {
    for (std::size_t j = i; j < t.dim_; ++j) {
      auto f = oracle.product(i, j);
      for (const auto& term : f) {
        if (term.first >= t.nvars_y_) throw std::logic_error("product leaves the span of B_2k");
      }
      t.entries_.push_back(std::move(f));
    }
  }
  for (std::size_t v = 0; v < oracle.nvars(); ++v) t.coord_forms_.push_back(oracle.coordinate_form(v));
  auto label = [&](std::size_t i) {
    if (i < basis.labels.size() && !basis.labels[i].empty()) return basis.labels[i];
    return basis.elements[i].to_string();
  };
  for (std::size_t i = 0; i < t.dim_; ++i) t.row_labels_.push_back(label(i));
  for (std::size_t i = 0; i < t.nvars_y_; ++i) t.y_labels_.push_back(label(i));
  return t;
}

Eigen::VectorXd point_to_moment_vector(const QuotientOracle& oracle, int k, const std::vector<double>& s) {
  if (s.size() != oracle.nvars()) throw std::invalid_argument("point has wrong dimension");
  const auto& basis = oracle.basis();
  std::size_t n = oracle.complete() ? std::min(basis.size(), basis.prefix_size(2 * k)) : basis.prefix_size(2 * k);
  Eigen::VectorXd y(n);
  for (std::size_t l = 0; l < n; ++l) y[l] = basis.elements[l].evaluate(std::span<const double>(s));
  return y;
}

RationalVector point_to_moment_vector(const QuotientOracle& oracle, int k, const RationalPoint& s) {
  if (s.size() != oracle.nvars()) throw std::invalid_argument("point has wrong dimension");
  const auto& basis = oracle.basis();
  std::size_t n = oracle.complete() ? std::min(basis.size(), basis.prefix_size(2 * k)) : basis.prefix_size(2 * k);
  RationalVector y(n);
  for (std::size_t l = 0; l < n; ++l) y[l] = basis.elements[l].evaluate(std::span<const Rational>(s));
  return y;
}

}  // namespace theta

#include "theta/moment.hpp"

#include <doctest.h>
#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <sstream>

using namespace theta;

namespace {

// Displayed entry text ("-2y11 - y13 + 4y5", "0", "1" = y0) as a sorted form.
LinearForm form(std::string s) {
  std::erase(s, ' ');
  if (s == "0") return {};
  if (s == "1") return {{0, Rational(1)}};
  std::map<std::size_t, Rational> acc;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
    std::size_t y = s.find('y', pos);
    std::string coef = s.substr(pos, y - pos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    std::size_t end = y + 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    acc[std::stoul(s.substr(y + 1, end - y - 1))] += Rational(sign) * (coef.empty() ? Rational(1) : parse_rational(coef));
    pos = end;
  }
  LinearForm out;
  for (const auto& [l, c] : acc) {
    if (c != 0) out.emplace_back(l, c);
  }
  return out;
}

void check_matrix(const MomentTemplate& t, const std::vector<std::vector<std::string>>& expect) {
  REQUIRE(t.dim() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    for (std::size_t j = 0; j < expect.size(); ++j) {
      INFO("entry (" << i << "," << j << ") = " << t.entry_to_string(i, j));
      CHECK(t.entry(i, j) == form(expect[i][j]));
    }
  }
}

std::vector<std::vector<std::string>> table(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(' ') == std::string::npos) continue;
    std::vector<std::string> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, '&')) row.push_back(cell);
    rows.push_back(row);
  }
  return rows;
}

Polynomial cardioid() {
  return parse_polynomial("x1^4 + 2*x1^2*x2^2 + x2^4 + 4*x1^3 + 4*x1*x2^2 - 4*x2^2", 2);
}

double min_eig(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

TEST_CASE("linearization example") {
  ReducerSet g({parse_polynomial("x1^2 + x1 - 2*x2", 2), parse_polynomial("x1*x2", 2)}, MonomialOrder::GrevLex, true);
  auto o = basis_from_reducers(g, 1);
  auto t = build_moment_template(*o, 1);
  CHECK(t.nvars_y() == 4);
  check_matrix(t, table(R"(
    y0 & y1      & y2
    y1 & 2y2-y1  & 0
    y2 & 0       & y3)"));
  CHECK(t.entry_to_string(1, 1) == "-y1 + 2*y2");
  Eigen::MatrixXd m = t.instantiate(Eigen::VectorXd::Ones(4));
  Eigen::MatrixXd expect(3, 3);
  expect << 1, 1, 1, 1, 1, 0, 1, 0, 1;
  CHECK(m == expect);
}

TEST_CASE("pentagon templates") {
  auto o = basis_stable_set(Graph::cycle(5), 2);
  check_matrix(build_moment_template(*o, 1), table(R"(
    1  & y1 & y2 & y3  & y4 & y5
    y1 & y1 & 0  & y6  & y7 & 0
    y2 & 0  & y2 & 0   & y8 & y9
    y3 & y6 & 0  & y3  & 0  & y10
    y4 & y7 & y8 & 0   & y4 & 0
    y5 & 0  & y9 & y10 & 0  & y5)"));
  check_matrix(build_moment_template(*o, 2), table(R"(
    1   & y1 & y2 & y3  & y4 & y5  & y6 & y7 & y8 & y9 & y10
    y1  & y1 & 0  & y6  & y7 & 0   & y6 & y7 & 0  & 0  & 0
    y2  & 0  & y2 & 0   & y8 & y9  & 0  & 0  & y8 & y9 & 0
    y3  & y6 & 0  & y3  & 0  & y10 & y6 & 0  & 0  & 0  & y10
    y4  & y7 & y8 & 0   & y4 & 0   & 0  & y7 & y8 & 0  & 0
    y5  & 0  & y9 & y10 & 0  & y5  & 0  & 0  & 0  & y9 & y10
    y6  & y6 & 0  & y6  & 0  & 0   & y6 & 0  & 0  & 0  & 0
    y7  & y7 & 0  & 0   & y7 & 0   & 0  & y7 & 0  & 0  & 0
    y8  & 0  & y8 & 0   & y8 & 0   & 0  & 0  & y8 & 0  & 0
    y9  & 0  & y9 & 0   & 0  & y9  & 0  & 0  & 0  & y9 & 0
    y10 & 0  & 0  & y10 & 0  & y10 & 0  & 0  & 0  & 0  & y10)"));
}

TEST_CASE("cardioid template") {
  auto o = basis_principal(cardioid(), MonomialOrder::GrevLex, 2);
  auto t = build_moment_template(*o, 2);
  check_matrix(t, table(R"(
    1  & y1 & y2 & y3 & y4  & y5
    y1 & y3 & y4 & y6 & y7  & y8
    y2 & y4 & y5 & y7 & y8  & y9
    y3 & y6 & y7 & -2y11 - y13 - 4y6 - 4y8 + 4y5 & y10 & y11
    y4 & y7 & y8 & y10 & y11 & y12
    y5 & y8 & y9 & y11 & y12 & y13)"));
  CHECK_THROWS_AS(build_moment_template(*o, 3), std::out_of_range);
}

TEST_CASE("template invariants and JSON dump") {
  auto o = basis_stable_set(Graph::cycle(5), 1);
  auto t = build_moment_template(*o, 1);
  CHECK(t.entry(0, 0) == form("y0"));
  for (std::size_t v = 0; v < 5; ++v) {
    CHECK(t.coord_slot(v) == v + 1);
    CHECK(t.entry(0, v + 1) == form("y" + std::to_string(v + 1)));
  }
  auto j = nlohmann::json::parse(t.to_json());
  CHECK(j["dim"] == 6);
  CHECK(j["rows"].size() == 6);
}

TEST_CASE("moment vectors of points") {
  auto card = basis_principal(cardioid(), MonomialOrder::GrevLex, 2);
  Eigen::VectorXd y0 = point_to_moment_vector(*card, 2, std::vector<double>{0, 0});
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(14);
  e0[0] = 1;
  CHECK(y0 == e0);

  auto pent = basis_stable_set(Graph::cycle(5), 1);
  RationalVector y = point_to_moment_vector(*pent, 1, RationalPoint{1, 0, 1, 0, 0});
  CHECK(y == RationalVector{1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0});
}

TEST_CASE("variety points give rank-one PSD moment matrices") {
  auto o = basis_principal(cardioid(), MonomialOrder::GrevLex, 2);
  auto t = build_moment_template(*o, 2);
  for (int j = 0; j < 100; ++j) {
    double th = 2 * M_PI * j / 100;
    std::vector<double> s{2 * std::cos(th) * (1 - std::cos(th)), 2 * std::sin(th) * (1 - std::cos(th))};
    Eigen::VectorXd y = point_to_moment_vector(*o, 2, s);
    Eigen::MatrixXd m = t.instantiate(y);
    Eigen::VectorXd f = y.head(t.dim());
    CHECK((m - f * f.transpose()).cwiseAbs().maxCoeff() < 1e-9 * (1 + m.cwiseAbs().maxCoeff()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    CHECK(ev(0) >= -1e-9 * (1 + ev(ev.size() - 1)));
    CHECK(ev(ev.size() - 2) <= 1e-8 * ev(ev.size() - 1));
    Eigen::VectorXd x = t.project(y);
    CHECK(std::abs(x[0] - s[0]) < 1e-12);
    CHECK(std::abs(x[1] - s[1]) < 1e-12);
  }
}

TEST_CASE("exact rank one at rational points") {
  auto o = basis_stable_set(Graph::cycle(5), 2);
  auto t = build_moment_template(*o, 2);
  for (const auto& s : stable_set_points(Graph::cycle(5))) {
    RationalVector y = point_to_moment_vector(*o, 2, s);
    RationalMatrix m = t.instantiate(y);
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (std::size_t j = 0; j < t.dim(); ++j) CHECK(m[i][j] == y[i] * y[j]);
    }
  }
}

TEST_CASE("barycenter of all points is positive definite") {
  auto pts = stable_set_points(Graph::cycle(5));
  auto o = basis_points(pts);
  auto t = build_moment_template(*o, 1);
  Eigen::VectorXd bar = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(t.nvars_y()));
  for (const auto& s : pts) {
    std::vector<double> d;
    for (const auto& v : s) d.push_back(v.get_d());
    bar += point_to_moment_vector(*o, 1, d);
  }
  bar /= static_cast<double>(pts.size());
  CHECK(min_eig(t.instantiate(bar)) > 1e-6);
}

TEST_CASE("instantiation is linear") {
  auto o = basis_principal(cardioid(), MonomialOrder::GrevLex, 2);
  auto t = build_moment_template(*o, 2);
  std::mt19937 rng(1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd y(14), z(14);
    for (int i = 0; i < 14; ++i) y[i] = g(rng), z[i] = g(rng);
    double a = g(rng), b = g(rng);
    Eigen::MatrixXd lhs = t.instantiate(Eigen::VectorXd(a * y + b * z));
    Eigen::MatrixXd rhs = a * t.instantiate(y) + b * t.instantiate(z);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12 * (1 + rhs.cwiseAbs().maxCoeff()));
  }
  CHECK_THROWS_AS(t.instantiate(Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

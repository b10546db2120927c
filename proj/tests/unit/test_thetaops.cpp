#include "theta/moment.hpp"
#include "theta/thetaops.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <random>
#include <set>

using namespace theta;

namespace {

const double kPi = std::numbers::pi;

Polynomial cardioid() {
  return parse_polynomial("x1^4 + 2*x1^2*x2^2 + x2^4 + 4*x1^3 + 4*x1*x2^2 - 4*x2^2", 2);
}

ThetaBodyProblem cardioid_problem(int k) {
  return make_problem(basis_principal(cardioid(), MonomialOrder::GrevLex, k), k, sample_plane_curve(cardioid(), 90));
}

ThetaBodyProblem stable_problem(const Graph& g, int k) { return make_problem(basis_stable_set(g, k), k); }

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

Graph petersen() {
  std::vector<Graph::Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : e) {
    if (u > v) std::swap(u, v);
  }
  return Graph(10, e);
}

oracle::EdgeList edges_of(const Graph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

Polynomial linear(std::size_t n, double lambda, const std::vector<double>& c) {
  Polynomial l = Polynomial::constant(n, limit_denominator(lambda, 1000000));
  for (std::size_t i = 0; i < n; ++i) l -= limit_denominator(c[i], 1000000) * Polynomial::variable(n, i);
  return l;
}

}  // namespace

TEST_CASE("stable set values") {
  CHECK(maximize_linear(stable_problem(Graph::cycle(5), 1), ones(5)).value ==
        doctest::Approx(oracle::theta_cycle(5)).epsilon(1e-7));
  CHECK(maximize_linear(stable_problem(Graph::cycle(5), 2), ones(5)).value == doctest::Approx(2).epsilon(1e-7));
  CHECK(maximize_linear(stable_problem(Graph::cycle(4), 1), ones(4)).value == doctest::Approx(2).epsilon(1e-7));
  CHECK(maximize_linear(stable_problem(Graph::cycle(7), 1), ones(7)).value ==
        doctest::Approx(oracle::theta_cycle(7)).epsilon(1e-7));
  auto g = petersen();
  auto r = maximize_linear(stable_problem(g, 1), ones(10));
  CHECK(r.status == SdpStatus::Optimal);
  CHECK(r.value == doctest::Approx(oracle::theta_edge_transitive(10, edges_of(g))).epsilon(1e-7));
  CHECK(r.optimizer.size() == 10);
}

TEST_CASE("membership") {
  auto card = cardioid_problem(2);
  CHECK(membership(card, oracle::cardioid_point(kPi / 3)).inside);
  auto pent = stable_problem(Graph::cycle(5), 1);
  // rows {1, x1, x2} of M at x = (1,1,0,0,0) involve no free entry
  Eigen::Matrix3d minor;
  minor << 1, 1, 1, 1, 1, 0, 1, 0, 1;
  REQUIRE(minor.determinant() < 0);
  CHECK_FALSE(membership(pent, {1, 1, 0, 0, 0}).inside);
  auto bar = std::vector<double>(5, 0.0);
  auto pts = stable_set_points(Graph::cycle(5));
  for (const auto& s : pts) {
    for (int i = 0; i < 5; ++i) bar[i] += s[i].get_d() / static_cast<double>(pts.size());
  }
  auto m = membership(pent, bar);
  CHECK(m.inside);
  CHECK(m.margin > 0);
}

TEST_CASE("cardioid rays") {
  auto th1 = cardioid_problem(1);
  for (int j = 0; j < 8; ++j) {
    auto r = ray_shoot(th1, {std::cos(kPi * j / 4), std::sin(kPi * j / 4)});
    CHECK(r.unbounded);
    CHECK(r.status == SdpStatus::Unbounded);
  }
  auto th2 = cardioid_problem(2);
  auto left = ray_shoot(th2, {-1, 0});
  REQUIRE(left.status == SdpStatus::Optimal);
  CHECK(left.t >= 4 - 1e-6);
  CHECK(left.t <= 4 + 1e-2);
  auto right = ray_shoot(th2, {1, 0});
  REQUIRE(right.status == SdpStatus::Optimal);
  CHECK(right.t >= 0.5 - 1e-6);
  CHECK(right.t <= 0.5 + 1e-2);
}

TEST_CASE("boundary traces") {
  auto th1 = cardioid_problem(1);
  auto unb = trace_boundary_2d(th1, 8);
  CHECK(unb.size() == 8);
  for (const auto& b : unb) CHECK(b.ray.unbounded);

  auto th2 = cardioid_problem(2);
  auto one = trace_boundary_2d(th2, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].theta == 0);
  CHECK(one[0].ray.t == doctest::Approx(ray_shoot(th2, {1, 0}).t).epsilon(1e-12));
  CHECK(one[0].x == doctest::Approx(one[0].ray.t));

  auto a = trace_boundary_2d(th2, 24, {}, 1), b = trace_boundary_2d(th2, 24, {}, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ray.status == SdpStatus::Optimal);
    CHECK(a[i].ray.t == b[i].ray.t);
  }
}

TEST_CASE("support contour") {
  auto th2 = cardioid_problem(2);
  auto lines = support_contour(th2, {{1, 1}, {-1, 0}});
  REQUIRE(lines[0].status == SdpStatus::Optimal);
  CHECK(std::abs(lines[0].lambda - maximize_linear(th2, {1, 1}).value) <= 1e-5);
  CHECK(lines[1].lambda == doctest::Approx(4).epsilon(1e-6));

  std::vector<std::vector<double>> dirs;
  for (int j = 0; j < 32; ++j) dirs.push_back({std::cos(2 * kPi * j / 32), std::sin(2 * kPi * j / 32)});
  auto contour = support_contour(th2, dirs);
  REQUIRE(contour.size() == 32);
  for (const auto& l : contour) {
    REQUIRE(l.status == SdpStatus::Optimal);
    for (int j = 0; j < 360; ++j) {
      auto s = oracle::cardioid_point(2 * kPi * j / 360);
      CHECK(l.c[0] * s[0] + l.c[1] * s[1] <= l.lambda + 1e-7);
    }
  }
  auto th1 = cardioid_problem(1);
  CHECK(support_contour(th1, {{1, 0}})[0].unbounded);
}

TEST_CASE("certificates") {
  auto pent = stable_problem(Graph::cycle(5), 1);
  SUBCASE("edge facet") {
    auto cert = extract_certificate(pent, {1, 1, 0, 0, 0}, 1.0);
    CHECK(cert.mode == CertificateMode::Exact);
    CHECK(cert.verified);
    CHECK(cert.residual.is_zero());
    CHECK(gram_residual(*pent.oracle, 1, cert.linear_poly, cert.gram).is_zero());
    // (1 - x1 - x2)^2 is itself a valid Gram matrix
    RationalMatrix rank1(6, RationalVector(6));
    RationalVector v{1, -1, -1, 0, 0, 0};
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) rank1[i][j] = v[i] * v[j];
    }
    CHECK(gram_residual(*pent.oracle, 1, cert.linear_poly, rank1).is_zero());
  }
  SUBCASE("x1 >= 0") {
    auto cert = extract_certificate(pent, {-1, 0, 0, 0, 0}, 0.0);
    CHECK(cert.mode == CertificateMode::Exact);
    CHECK(cert.verified);
  }
  SUBCASE("odd cycle facet is not 1-sos") {
    auto cert = extract_certificate(pent, ones(5), 2.0);
    CHECK_FALSE(cert.verified);
  }
  SUBCASE("odd cycle facet is 2-sos") {
    auto cert = extract_certificate(stable_problem(Graph::cycle(5), 2), ones(5), 2.0);
    CHECK(cert.mode == CertificateMode::Exact);
    CHECK(cert.verified);
  }
  SUBCASE("cardioid (1,1)") {
    auto card = cardioid_problem(2);
    double lambda = maximize_linear(card, {1, 1}).value;
    auto cert = extract_certificate(card, {1, 1}, lambda);
    CHECK(cert.verified);
    CHECK(cert.max_residual <= 1e-6);
  }
}

TEST_CASE("explicit sos identities") {
  for (std::size_t n : {5, 7, 9}) {
    auto o = basis_stable_set(Graph::cycle(n), 2);
    Polynomial l = Polynomial::constant(n, Rational(static_cast<long>((n - 1) / 2)));
    for (std::size_t i = 0; i < n; ++i) l -= Polynomial::variable(n, i);
    auto sq = odd_cycle_squares(n);
    CHECK(sq.size() == n - 2);
    CHECK(verify_sos_identity(l, sq, *o).is_zero());
  }
  auto o = basis_stable_set(Graph::cycle(5), 1);
  auto x1 = Polynomial::variable(5, 0);
  CHECK(verify_sos_identity(x1, {x1}, *o).is_zero());
  CHECK_FALSE(verify_sos_identity(x1 + x1, {x1}, *o).is_zero());
}

TEST_CASE("hierarchy nesting and outer relaxation") {
  std::mt19937 rng(17);
  std::normal_distribution<double> g;
  auto c5_1 = stable_problem(Graph::cycle(5), 1), c5_2 = stable_problem(Graph::cycle(5), 2);
  auto card2 = cardioid_problem(2), card3 = cardioid_problem(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> c5(5), c2(2);
    for (auto& v : c5) v = g(rng);
    for (auto& v : c2) v = g(rng);
    CHECK(maximize_linear(c5_2, c5).value <= maximize_linear(c5_1, c5).value + 1e-6);
    CHECK(maximize_linear(card3, c2).value <= maximize_linear(card2, c2).value + 1e-6);
  }
  for (int j = 0; j < 12; ++j) CHECK(membership(card2, oracle::cardioid_point(2 * kPi * j / 12 + 0.1)).inside);
}

TEST_CASE("certificate soundness on the variety") {
  auto pent = stable_problem(Graph::cycle(5), 2);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto pts = stable_set_points(Graph::cycle(5));
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> c(5);
    for (auto& v : c) v = coef(rng);
    double best = -1e9;
    for (const auto& s : pts) {
      double v = 0;
      for (int i = 0; i < 5; ++i) v += c[i] * s[i].get_d();
      best = std::max(best, v);
    }
    auto cert = extract_certificate(pent, c, best);
    if (cert.mode == CertificateMode::Exact && cert.verified) {
      for (const auto& s : pts) CHECK(cert.linear_poly.evaluate(std::span<const Rational>(s)) >= 0);
    }
  }
}

TEST_CASE("finite varieties are exact at some level") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(0, 2);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 4; ++trial) {
    std::set<RationalPoint> s;
    while (s.size() < 6) s.insert({Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))});
    std::vector<RationalPoint> pts(s.begin(), s.end());
    std::vector<std::vector<double>> dp;
    for (const auto& p : pts) dp.push_back({p[0].get_d(), p[1].get_d(), p[2].get_d()});
    auto o = basis_points(pts);
    bool exact_somewhere = false;
    for (int k = 1; k <= static_cast<int>(pts.size()) && !exact_somewhere; ++k) {
      auto p = make_problem(o, k);
      bool all = true;
      for (int j = 0; j < 20 && all; ++j) {
        std::vector<double> c{g(rng), g(rng), g(rng)};
        auto r = maximize_linear(p, c);
        all = r.status == SdpStatus::Optimal && std::abs(r.value - oracle::lp_over_points(dp, c)) <= 1e-5;
      }
      exact_somewhere = all;
    }
    CHECK(exact_somewhere);
  }
}

TEST_CASE("curve sampling") {
  auto pts = sample_plane_curve(cardioid(), 36);
  std::size_t origin = 0;
  for (const auto& p : pts) {
    CHECK(std::abs(cardioid().evaluate(std::span<const double>(p))) < 1e-9);
    origin += std::abs(p[0]) + std::abs(p[1]) < 1e-12;
  }
  CHECK(origin == 1);
  CHECK(pts.size() >= 36);
}

TEST_CASE("parallel map keeps order") {
  auto v = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (int i = 0; i < 100; ++i) CHECK(v[i] == i * i);
}

#include "theta/exactness.hpp"
#include "theta/quotient.hpp"
#include "theta/thetaops.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace theta;

namespace {

PointSet ints(std::initializer_list<std::initializer_list<int>> rows) {
  PointSet out;
  for (const auto& r : rows) {
    RationalVector v;
    for (int x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

PointSet cube(std::size_t d) {
  PointSet out;
  for (std::size_t mask = 0; mask < (1U << d); ++mask) {
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1U;
    out.push_back(v);
  }
  return out;
}

PointSet cross_polytope(std::size_t d) {
  PointSet out;
  for (std::size_t i = 0; i < d; ++i) {
    for (int s : {1, -1}) {
      RationalVector v(d);
      v[i] = s;
      out.push_back(v);
    }
  }
  return out;
}

// 3-cube with the vertex at the origin cut off by x + y + z = 1/2
PointSet truncated_cube() {
  PointSet out;
  for (const auto& v : cube(3)) {
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    out.push_back(v);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    RationalVector v(3);
    v[i] = Rational(1, 2);
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<double>> to_double(const PointSet& s) {
  std::vector<std::vector<double>> out;
  for (const auto& p : s) {
    std::vector<double> d;
    for (const auto& x : p) d.push_back(x.get_d());
    out.push_back(d);
  }
  return out;
}

bool has_facet(const std::vector<Facet>& fs, const RationalVector& normal, const Rational& offset) {
  return std::any_of(fs.begin(), fs.end(), [&](const Facet& f) { return f.normal == normal && f.offset == offset; });
}

bool sdp_matches_lp(const PointSet& s, int k, int trials, std::mt19937& rng) {
  std::normal_distribution<double> g;
  auto p = make_problem(basis_points(s), k);
  auto pts = to_double(s);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> c(pts[0].size());
    for (auto& v : c) v = g(rng);
    auto r = maximize_linear(p, c);
    if (r.status != SdpStatus::Optimal || std::abs(r.value - oracle::lp_over_points(pts, c)) > 1e-5) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("facet counts") {
  CHECK(enumerate_facets(cube(2)).size() == 4);
  CHECK(enumerate_facets(cube(3)).size() == 6);
  CHECK(enumerate_facets(cross_polytope(3)).size() == 8);
  CHECK(enumerate_facets(ints({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).size() == 4);
  CHECK(enumerate_facets(truncated_cube()).size() == 7);
}

TEST_CASE("pentagon stable set facets") {
  auto s = stable_set_points(Graph::cycle(5));
  auto fs = enumerate_facets(s);
  // x_i >= 0 is 0 - (-e_i).x >= 0
  for (std::size_t i = 0; i < 5; ++i) {
    RationalVector n(5);
    n[i] = -1;
    CHECK(has_facet(fs, n, 0));
    RationalVector e(5);
    e[i] = 1;
    e[(i + 1) % 5] = 1;
    CHECK(has_facet(fs, e, 1));
  }
  CHECK(has_facet(fs, RationalVector(5, Rational(1)), 2));
  CHECK(fs.size() == 11);
  auto rep = level_report(s);
  CHECK(rep.overall_level == 3);
  CHECK(rep.th_k_bound == 2);
  CHECK_FALSE(rep.is_2_level);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (rep.facets[i].normal == RationalVector(5, Rational(1))) CHECK(rep.levels[i] == 3);
  }
}

TEST_CASE("level counts") {
  CHECK(level_report(cube(3)).is_2_level);
  CHECK(level_report(ints({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).is_2_level);
  CHECK(level_report(cross_polytope(3)).is_2_level);
  CHECK(th1_exact_finite(cube(2)));

  // cut facet: x+y+z over S takes 1/2, 1, 2, 3; the facets x = 0 and x = 1 see x in {0, 1/2, 1}
  auto rep = level_report(truncated_cube());
  CHECK_FALSE(rep.is_2_level);
  CHECK(rep.overall_level == 4);
  for (std::size_t i = 0; i < rep.facets.size(); ++i) {
    const auto& n = rep.facets[i].normal;
    if (n == RationalVector{-1, -1, -1}) CHECK(rep.levels[i] == 4);
    if (n == RationalVector{-1, 0, 0}) CHECK(rep.levels[i] == 3);
    if (n == RationalVector{1, 0, 0}) CHECK(rep.levels[i] == 3);
  }
  CHECK_FALSE(th1_exact_finite(truncated_cube()));

  // removing (1,1,1) cuts through its three neighbours: x+y+z <= 2 over S is {0, 1, 2}
  PointSet neighbour_cut;
  for (const auto& v : cube(3)) {
    if (v[0] + v[1] + v[2] != 3) neighbour_cut.push_back(v);
  }
  auto nrep = level_report(neighbour_cut);
  CHECK(nrep.facets.size() == 7);
  CHECK(nrep.overall_level == 3);
  CHECK(nrep.th_k_bound == 2);
  CHECK_FALSE(nrep.is_2_level);
}

TEST_CASE("lower-dimensional sets") {
  // a square sitting in the plane z = 1 of R^3
  auto s = ints({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  auto hull = affine_hull(s);
  CHECK(hull.ambient_dim == 3);
  CHECK(hull.dim == 2);
  CHECK(enumerate_facets(s).size() == 4);
  CHECK(th1_exact_finite(s));
  // three collinear points: two facets, 3 levels
  auto line = ints({{0, 0}, {1, 1}, {2, 2}});
  CHECK(enumerate_facets(line).size() == 2);
  CHECK(level_report(line).overall_level == 3);
}

TEST_CASE("caps and degenerate input") {
  CHECK_THROWS_AS(enumerate_facets(cube(3), FacetCaps{2, 64}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_facets(cube(3), FacetCaps{6, 4}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_facets(ints({{1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_facets(ints({{1, 2}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("facets are valid and tight") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<RationalVector> s;
    while (s.size() < 7) s.insert({Rational(coord(rng)), Rational(coord(rng)), Rational(coord(rng))});
    PointSet pts(s.begin(), s.end());
    auto fs = enumerate_facets(pts);
    auto dp = to_double(pts);
    auto hull = affine_hull(pts);
    for (const auto& f : fs) {
      for (const auto& p : pts) CHECK(f.evaluate(p) >= 0);
      CHECK(f.tight.size() >= hull.dim);
      std::vector<double> c;
      for (const auto& x : f.normal) c.push_back(x.get_d());
      CHECK(oracle::lp_over_points(dp, c) == doctest::Approx(f.offset.get_d()).epsilon(1e-12));
    }
  }
}

TEST_CASE("exactness verdicts agree with the SDP") {
  std::mt19937 rng(11);
  CHECK(sdp_matches_lp(cube(3), 1, 8, rng));
  CHECK(sdp_matches_lp(cross_polytope(3), 1, 8, rng));
  auto trunc = truncated_cube();
  CHECK(level_report(trunc).th_k_bound == 3);
  CHECK(sdp_matches_lp(trunc, 3, 8, rng));
  auto c5 = stable_set_points(Graph::cycle(5));
  CHECK(sdp_matches_lp(c5, 2, 8, rng));
  std::vector<double> ones(5, 1.0);
  auto th1 = maximize_linear(make_problem(basis_points(c5), 1), ones);
  CHECK(th1.value > 2 + 1e-3);
}

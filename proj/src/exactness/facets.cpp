#include "theta/exactness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace theta {

namespace {

/// g(x) = off - n.x, in full-dimensional local coordinates.
struct Functional {
  RationalVector n;
  Rational off;

  Rational operator()(const RationalVector& x) const {
    Rational v = off;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] != 0) v -= n[i] * x[i];
    }
    return v;
  }
};

Functional combine(const Functional& a, const Functional& b, const Rational& mu) {  // a + mu b
  Functional g{a.n, a.off + mu * b.off};
  for (std::size_t i = 0; i < g.n.size(); ++i) g.n[i] += mu * b.n[i];
  return g;
}

/// Primitive integer normal, positive scaling only.
void canonicalize(Functional& g) {
  mpz_class l = 1;
  for (const auto& v : g.n) {
    if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  mpz_class gcd = 0;
  for (auto& v : g.n) {
    v *= l;
    if (v != 0) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_num_mpz_t());
  }
  g.off *= l;
  if (gcd == 0) throw std::logic_error("facet functional has zero normal");
  for (auto& v : g.n) v /= gcd;
  g.off /= gcd;
}

std::vector<std::size_t> tight_set(const Functional& g, const PointSet& p) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (g(p[i]) == 0) t.push_back(i);
  }
  return t;
}

PointSet subset(const PointSet& p, const std::vector<std::size_t>& idx) {
  PointSet out;
  for (auto i : idx) out.push_back(p[i]);
  return out;
}

/// Tilt g about its tight set along r (which vanishes there) until the tight
/// set grows: returns r + mu g with the smallest valid mu.
Functional rotate(const Functional& g, const Functional& r, const PointSet& p) {
  bool have = false;
  Rational mu;
  for (const auto& x : p) {
    Rational gx = g(x);
    if (gx == 0) continue;
    Rational cand = -r(x) / gx;
    if (!have || cand > mu) {
      mu = cand;
      have = true;
    }
  }
  if (!have) throw std::logic_error("point set is not full-dimensional");
  return combine(r, g, mu);
}

Functional initial_facet(const PointSet& p) {
  const std::size_t d = p.front().size();
  Rational lo = p.front()[0];
  for (const auto& x : p) lo = std::min(lo, x[0]);
  Functional g{RationalVector(d), -lo};
  g.n[0] = -1;  // g(x) = x_0 - lo
  while (true) {
    auto t = tight_set(g, p);
    auto h = affine_hull(subset(p, t));
    if (h.dim + 1 == d) return g;
    // A direction orthogonal to aff(T) and to the normal of g.
    RationalMatrix rows;
    for (std::size_t i = 1; i < t.size(); ++i) {
      RationalVector diff(d);
      for (std::size_t c = 0; c < d; ++c) diff[c] = p[t[i]][c] - p[t[0]][c];
      rows.push_back(std::move(diff));
    }
    rows.push_back(g.n);
    auto ns = nullspace(rows, d);
    if (ns.empty()) throw std::logic_error("cannot tilt supporting hyperplane");
    Functional r{ns.front(), 0};
    for (std::size_t c = 0; c < d; ++c) r.off += r.n[c] * p[t[0]][c];
    g = rotate(g, r, p);
  }
}

std::vector<Functional> facets_full(const PointSet& p) {
  const std::size_t d = p.front().size();
  if (d == 1) {
    Rational lo = p.front()[0], hi = lo;
    for (const auto& x : p) {
      lo = std::min(lo, x[0]);
      hi = std::max(hi, x[0]);
    }
    Functional a{{Rational(-1)}, -lo}, b{{Rational(1)}, hi};
    return {a, b};
  }
  auto first = initial_facet(p);
  canonicalize(first);
  std::set<RationalVector> seen;
  auto key = [](const Functional& g) {
    RationalVector k = g.n;
    k.push_back(g.off);
    return k;
  };
  std::vector<Functional> out;
  std::deque<Functional> queue{first};
  seen.insert(key(first));
  while (!queue.empty()) {
    Functional f = queue.front();
    queue.pop_front();
    out.push_back(f);
    auto t = tight_set(f, p);
    auto face = subset(p, t);
    auto h = affine_hull(face);
    auto local = project_to(face, h.pivots);
    for (const auto& rl : facets_full(local)) {
      Functional r{RationalVector(d), rl.off};
      for (std::size_t k = 0; k < h.pivots.size(); ++k) r.n[h.pivots[k]] = rl.n[k];
      Functional g = rotate(f, r, p);
      canonicalize(g);
      if (seen.insert(key(g)).second) queue.push_back(g);
    }
  }
  return out;
}

}  // namespace

Rational Facet::evaluate(const RationalVector& x) const {
  Rational v = offset;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] != 0) v -= normal[i] * x[i];
  }
  return v;
}

std::vector<Facet> enumerate_facets(const PointSet& s, const FacetCaps& caps) {
  if (s.size() > caps.max_points) {
    throw std::invalid_argument("facet enumeration is capped at " + std::to_string(caps.max_points) + " points (got " +
                                std::to_string(s.size()) + ")");
  }
  auto hull = affine_hull(s);
  if (hull.dim == 0) throw std::invalid_argument("point set spans no line; conv(S) has no facets");
  if (hull.dim > caps.max_dim) {
    throw std::invalid_argument("facet enumeration is capped at affine dimension " + std::to_string(caps.max_dim) +
                                " (got " + std::to_string(hull.dim) + ")");
  }
  auto local = project_to(s, hull.pivots);
  std::vector<Facet> out;
  for (const auto& g : facets_full(local)) {
    Facet f;
    f.normal.assign(hull.ambient_dim, Rational(0));
    for (std::size_t k = 0; k < hull.pivots.size(); ++k) f.normal[hull.pivots[k]] = g.n[k];
    f.offset = g.off;
    f.tight = tight_set(g, local);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  return out;
}

LevelReport level_report(const PointSet& s, const FacetCaps& caps) {
  LevelReport r;
  r.hull = affine_hull(s);
  r.facets = enumerate_facets(s, caps);
  for (const auto& f : r.facets) {
    std::set<Rational> values;
    for (const auto& x : s) values.insert(f.evaluate(x));
    r.levels.push_back(values.size());
    r.overall_level = std::max(r.overall_level, values.size());
  }
  r.is_2_level = r.overall_level <= 2;
  r.th_k_bound = r.overall_level - 1;
  return r;
}

bool th1_exact_finite(const PointSet& s, const FacetCaps& caps) { return level_report(s, caps).is_2_level; }

}  // namespace theta

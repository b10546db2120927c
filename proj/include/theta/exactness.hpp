#pragma once

// Facets and level counts of finite point sets, for the 2-level test of
// TH_1-exactness and the (k+1)-level sufficient bound.

#include "theta/rational_linalg.hpp"

#include <cstddef>
#include <vector>

namespace theta {

using PointSet = std::vector<RationalVector>;

/// Affine hull of a point set: points = base + span of `directions`. The
/// pivot coordinates identify each point of the hull uniquely.
struct AffineHull {
  std::size_t ambient_dim = 0;
  std::size_t dim = 0;
  RationalVector base;
  std::vector<std::size_t> pivots;
};

AffineHull affine_hull(const PointSet& s);

/// Restriction of every point to the given coordinates.
PointSet project_to(const PointSet& s, const std::vector<std::size_t>& coords);

/// l(x) = offset - normal.x >= 0 on S, tight on a facet. The normal is a
/// primitive integer vector supported on the affine-hull pivot coordinates.
struct Facet {
  RationalVector normal;
  Rational offset;
  std::vector<std::size_t> tight;  // indices into S

  Rational evaluate(const RationalVector& x) const;
};

struct FacetCaps {
  std::size_t max_dim = 6;
  std::size_t max_points = 64;
};

/// Exhaustive, duplicate-free facet list of conv(S) within its affine hull,
/// sorted by (normal, offset). Throws std::invalid_argument on cap
/// violations and when S spans no line.
std::vector<Facet> enumerate_facets(const PointSet& s, const FacetCaps& caps = {});

struct LevelReport {
  AffineHull hull;
  std::vector<Facet> facets;
  std::vector<std::size_t> levels;  // distinct values of l over S, per facet
  std::size_t overall_level = 0;
  bool is_2_level = false;
  std::size_t th_k_bound = 0;       // overall_level - 1
};

LevelReport level_report(const PointSet& s, const FacetCaps& caps = {});

bool th1_exact_finite(const PointSet& s, const FacetCaps& caps = {});

}  // namespace theta

#include "theta/exactness.hpp"

#include <stdexcept>

namespace theta {

AffineHull affine_hull(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("point set is empty");
  AffineHull h;
  h.ambient_dim = s.front().size();
  for (const auto& p : s) {
    if (p.size() != h.ambient_dim) throw std::invalid_argument("points have different dimensions");
  }
  h.base = s.front();
  RationalMatrix diffs;
  for (std::size_t i = 1; i < s.size(); ++i) {
    RationalVector d(h.ambient_dim);
    for (std::size_t c = 0; c < h.ambient_dim; ++c) d[c] = s[i][c] - h.base[c];
    diffs.push_back(std::move(d));
  }
  if (!diffs.empty()) h.pivots = rref(diffs);
  h.dim = h.pivots.size();
  return h;
}

PointSet project_to(const PointSet& s, const std::vector<std::size_t>& coords) {
  PointSet out;
  out.reserve(s.size());
  for (const auto& p : s) {
    RationalVector q;
    q.reserve(coords.size());
    for (auto c : coords) q.push_back(p.at(c));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace theta

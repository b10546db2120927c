#include "theta/quotient.hpp"
#include "theta/rational_linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace theta {

namespace {

/// Incremental echelon basis of evaluation vectors.
class EvaluationEchelon {
 public:
  /// Adds v if it is independent of the stored vectors; returns whether it was.
  bool try_add(RationalVector v) {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot] == 0) continue;
      const Rational f = v[pivot];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (it == v.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - v.begin());
    const Rational inv = 1 / v[pivot];
    for (auto& q : v) q *= inv;
    // Keep stored rows reduced at the new pivot so later reductions are one pass.
    for (auto& [p, row] : rows_) {
      if (row[pivot] == 0) continue;
      const Rational f = row[pivot];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * v[j];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, RationalVector>> rows_;
};

class PointsOracle final : public QuotientOracle {
 public:
  PointsOracle(const std::vector<RationalPoint>& points, MonomialOrder order)
      : QuotientOracle(IdealKind::FinitePoints, points.front().size()), points_(points) {
    const std::size_t n = nvars();
    const std::size_t count = points_.size();

    std::vector<Monomial> standard;
    std::vector<Monomial> border;
    EvaluationEchelon echelon;
    for (std::uint32_t d = 0; standard.size() < count; ++d) {
      auto candidates = monomials_of_degree(n, d, order);
      std::reverse(candidates.begin(), candidates.end());  // increasing order
      bool any_candidate = false;
      for (const auto& m : candidates) {
        if (standard.size() == count) break;
        if (std::any_of(border.begin(), border.end(), [&m](const Monomial& b) { return b.divides(m); })) {
          continue;
        }
        any_candidate = true;
        if (echelon.try_add(evaluations(m))) {
          standard.push_back(m);
        } else {
          border.push_back(m);
        }
      }
      if (!any_candidate) throw std::logic_error("point basis search exhausted");
    }

    std::stable_sort(standard.begin(), standard.end(), [order](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return compare_monomials(a, b, order) == std::strong_ordering::greater;
    });
    basis_.elements = standard;

    RationalMatrix eval(count, RationalVector(count));
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t b = 0; b < count; ++b) eval[s][b] = standard[b].evaluate(points_[s]);
    }
    auto inv = inverse(eval);
    if (!inv) throw std::logic_error("point evaluation matrix is singular");
    eval_inverse_ = std::move(*inv);

    for (const auto& p : points_) {
      std::vector<double> q;
      q.reserve(p.size());
      for (const auto& c : p) q.push_back(c.get_d());
      samples_.push_back(std::move(q));
    }
    level_ = basis_.max_degree();
    complete_ = true;
    finalize();
  }

 protected:
  SparseVector reduce_monomial(const Monomial& m) const override {
    RationalVector values = evaluations(m);
    SparseVector out;
    for (std::size_t b = 0; b < eval_inverse_.size(); ++b) {
      Rational c = 0;
      for (std::size_t s = 0; s < values.size(); ++s) {
        if (values[s] != 0 && eval_inverse_[b][s] != 0) c += eval_inverse_[b][s] * values[s];
      }
      if (c != 0) out.emplace_back(b, c);
    }
    return out;
  }

 private:
  RationalVector evaluations(const Monomial& m) const {
    RationalVector v;
    v.reserve(points_.size());
    for (const auto& p : points_) v.push_back(m.evaluate(p));
    return v;
  }

  std::vector<RationalPoint> points_;
  RationalMatrix eval_inverse_;  // basis coefficients from point values
};

}  // namespace

OraclePtr basis_points(const std::vector<RationalPoint>& points, MonomialOrder order) {
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  const std::size_t n = points.front().size();
  if (n == 0) throw std::invalid_argument("points must have at least one coordinate");
  std::set<RationalPoint> seen;
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("points have differing dimensions");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate point in point set");
  }
  return std::make_shared<PointsOracle>(points, order);
}

}  // namespace theta

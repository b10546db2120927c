#include "theta/rational_linalg.hpp"

#include <stdexcept>

namespace theta {

std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RationalMatrix a) { return rref(a).size(); }

std::vector<RationalVector> nullspace(RationalMatrix a, std::size_t cols) {
  for (const auto& row : a) {
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  }
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (a.empty()) return RationalVector{};
  const std::size_t cols = a.front().size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

bool is_positive_semidefinite(RationalMatrix a) {
  const std::size_t n = a.size();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick any remaining positive diagonal entry.
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (a[i][i] < 0) return false;
      if (a[i][i] > 0 && p == n) p = i;
    }
    if (p == n) {
      // All remaining diagonal entries are zero: the remaining block must vanish.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!done[i] && !done[j] && a[i][j] != 0) return false;
        }
      }
      return true;
    }
    done[p] = true;
    const Rational pivot = a[p][p];
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      const Rational f = a[i][p] / pivot;
      for (std::size_t j = 0; j < n; ++j) {
        if (!done[j]) a[i][j] -= f * a[p][j];
      }
    }
  }
  return true;
}

}  // namespace theta

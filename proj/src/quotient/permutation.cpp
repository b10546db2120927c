#include "theta/quotient.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace theta {

namespace {

void check_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n) throw std::invalid_argument("permutation length does not match n");
  std::vector<bool> seen(n + 1, false);
  for (auto v : p) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("generator is not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation compose(const Permutation& a, const Permutation& b) {  // (a o b)(i) = a(b(i))
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i] - 1];
  return out;
}

}  // namespace

std::vector<RationalPoint> permutation_points(std::size_t n, const std::vector<Permutation>& generators,
                                              std::size_t max_order) {
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  for (const auto& g : generators) check_permutation(g, n);
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i + 1;
  std::set<Permutation> group{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      auto q = compose(g, p);
      if (group.insert(q).second) {
        if (group.size() > max_order) {
          throw std::invalid_argument("group order exceeds the cap of " + std::to_string(max_order));
        }
        queue.push_back(std::move(q));
      }
    }
  }
  std::vector<RationalPoint> out;
  for (const auto& p : group) {
    RationalPoint row(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) row[i * n + (p[i] - 1)] = 1;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace theta

#include "theta/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace theta {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), adjacency_(n, std::vector<bool>(n, false)) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph must not have loops");
    if (u > v) std::swap(u, v);
    if (adjacency_[u][v]) throw std::invalid_argument("duplicate edge");
    adjacency_[u][v] = adjacency_[v][u] = true;
    edges_.emplace_back(u, v);
  }
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, std::move(e));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return u < n_ && v < n_ && adjacency_[u][v];
}

std::vector<std::size_t> Graph::components() const {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n_, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n_; ++s) {
    if (comp[s] != unset) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v) {
        if (adjacency_[u][v] && comp[v] == unset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

namespace {

std::size_t max_stable(const Graph& g, std::size_t v, std::vector<bool>& chosen) {
  if (v == g.vertex_count()) return 0;
  std::size_t best = max_stable(g, v + 1, chosen);
  bool ok = true;
  for (std::size_t u = 0; u < v && ok; ++u) ok = !(chosen[u] && g.adjacent(u, v));
  if (ok) {
    chosen[v] = true;
    best = std::max(best, 1 + max_stable(g, v + 1, chosen));
    chosen[v] = false;
  }
  return best;
}

}  // namespace

std::size_t stability_number(const Graph& g) {
  if (g.vertex_count() > 30) throw std::invalid_argument("stability_number: graph too large");
  std::vector<bool> chosen(g.vertex_count(), false);
  return max_stable(g, 0, chosen);
}

std::size_t max_cut_size(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("max_cut_size: graph too large");
  if (n == 0) return 0;
  std::size_t best = 0;
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << (n - 1)); ++side) {
    std::size_t cut = 0;
    for (auto [u, v] : g.edges()) cut += ((side >> u) & 1U) != ((side >> v) & 1U);
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace theta

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace theta {

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v in
/// input order; edge i is variable x_{i+1} for cut ideals.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Throws std::invalid_argument on loops, duplicate edges or out-of-range ends.
  Graph(std::size_t n, std::vector<Edge> edges);

  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Component id per vertex, numbered from 0 in order of first appearance.
  std::vector<std::size_t> components() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adjacency_;
};

/// Size of a maximum stable set, by exhaustive search (n <= 30).
std::size_t stability_number(const Graph& g);
/// Size of a maximum cut, by exhaustive search (n <= 24).
std::size_t max_cut_size(const Graph& g);

}  // namespace theta

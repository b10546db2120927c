#pragma once

// theta-bases and quotient-ring structure constants for the supported ideal
// classes: vanishing ideals of finite point sets, stable-set ideals, cut
// ideals and ideals given by a confluent reducer set (principal ideals).

#include "theta/graph.hpp"
#include "theta/polycore.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace theta {

enum class IdealKind { FinitePoints, StableSet, CutIdeal, Principal };

std::string_view to_string(IdealKind kind);

/// Sparse coordinate vector over basis indices, sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

using RationalPoint = std::vector<Rational>;

struct ThetaBasis {
  /// Degree-nondecreasing; element 0 is the constant monomial.
  std::vector<Monomial> elements;
  /// Optional combinatorial labels (stable set U, T-join vertex set T).
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  /// |B_k|: number of elements of degree at most k.
  std::size_t prefix_size(int k) const;
  int max_degree() const;
};

class QuotientOracle {
 public:
  virtual ~QuotientOracle() = default;
  QuotientOracle(const QuotientOracle&) = delete;
  QuotientOracle& operator=(const QuotientOracle&) = delete;

  IdealKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const ThetaBasis& basis() const { return basis_; }

  /// Largest level k for which B_2k is fully enumerated. Finite quotients
  /// whose whole basis is enumerated report `complete()` and accept any level.
  int built_level() const { return level_; }
  bool complete() const { return complete_; }
  bool supports_level(int k) const { return k >= 1 && (k <= level_ || complete_); }
  std::size_t level_size(int k) const;

  /// Coordinates of f_i f_j + I. Tabulated for f_i, f_j in B_{built_level}.
  SparseVector product(std::size_t i, std::size_t j) const;

  /// x_var + I in basis coordinates (a unit vector unless degenerate).
  const SparseVector& coordinate_form(std::size_t var) const { return coordinate_forms_.at(var); }
  /// Basis index of x_var when x_var is itself a basis element.
  std::optional<std::size_t> coordinate_slot(std::size_t var) const;
  /// True when some coordinate is not a basis element (affinely degenerate).
  bool degenerate() const;

  SparseVector coordinates(const Polynomial& f) const;
  Polynomial from_coordinates(const SparseVector& v) const;
  /// Representative of f + I in the span of the basis.
  Polynomial normal_form(const Polynomial& f) const { return from_coordinates(coordinates(f)); }

  /// Known points of the real variety (all of them for finite varieties).
  const std::vector<std::vector<double>>& sample_points() const { return samples_; }

 protected:
  QuotientOracle(IdealKind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

  /// Coordinates of m + I; throws std::out_of_range when the result leaves
  /// the enumerated part of the basis.
  virtual SparseVector reduce_monomial(const Monomial& m) const = 0;

  /// Fills coordinate forms and the product table over B_level. Call once the
  /// basis, level and completeness are set.
  void finalize();

  ThetaBasis basis_;
  int level_ = 0;
  bool complete_ = false;
  std::vector<std::vector<double>> samples_;

 private:
  IdealKind kind_;
  std::size_t nvars_;
  std::size_t table_dim_ = 0;
  std::vector<SparseVector> table_;  // upper triangle, row-major
  std::vector<SparseVector> coordinate_forms_;
};

using OraclePtr = std::shared_ptr<const QuotientOracle>;

/// Vanishing ideal of a finite point set. Standard monomials are found by
/// exact elimination on point evaluations, scanning monomials upward in the
/// graded order. Throws on duplicate or ragged points.
OraclePtr basis_points(const std::vector<RationalPoint>& points,
                       MonomialOrder order = MonomialOrder::GrevLex);

/// Stable-set ideal <x_i^2 - x_i, x_i x_j : ij in E>. Stable sets of size up
/// to 2k are enumerated ordered by (size, lexicographic).
OraclePtr basis_stable_set(const Graph& graph, int k);

/// Cut ideal of a graph in +-1 edge variables. Basis elements are indexed by
/// vertex sets T with a minimal T-join of at most 2k edges. Minimal joins are
/// searched exhaustively; for k >= 2 the search is capped at `max_edges`.
OraclePtr basis_cut_ideal(const Graph& graph, int k, std::size_t max_edges = 16);

/// Principal ideal <h>: the basis is the monomials of degree <= 2k not
/// divisible by the leading monomial of h.
OraclePtr basis_principal(const Polynomial& h, MonomialOrder order, int k);

/// Same construction for any confluent reducer set.
OraclePtr basis_from_reducers(const ReducerSet& reducers, int k);

/// Confluent reducers {x_i^2 - x_i} and {x_i x_j : ij in E}.
ReducerSet stable_set_reducers(const Graph& graph);

/// Incidence vectors of all stable sets, ordered by (size, lexicographic).
std::vector<RationalPoint> stable_set_points(const Graph& graph);

/// All +-1 cut vectors of the graph (one per cut, not per bipartition).
std::vector<RationalPoint> cut_points(const Graph& graph);

using Permutation = std::vector<std::size_t>;  // one-line notation, 1-based

/// Group generated by `generators` acting on {1..n}, each element flattened
/// row-major to its n x n permutation matrix (entry (i, sigma(i)) = 1).
/// Elements are sorted lexicographically by one-line notation.
std::vector<RationalPoint> permutation_points(std::size_t n,
                                              const std::vector<Permutation>& generators,
                                              std::size_t max_order = 5040);

}  // namespace theta

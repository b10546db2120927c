#pragma once

// Combinatorial moment matrices M_{B_k}(y) as symmetric matrices of sparse
// linear forms in y, indexed by B_k x B_k with y indexed by B_2k.

#include "theta/quotient.hpp"
#include "theta/rational_linalg.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace theta {

/// Sparse linear form sum_l a_l y_l, sorted by l.
using LinearForm = SparseVector;

class MomentTemplate {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t nvars_y() const { return nvars_y_; }
  std::size_t nvars_x() const { return coord_forms_.size(); }
  int level() const { return level_; }

  /// Entry (i, j) in either order.
  const LinearForm& entry(std::size_t i, std::size_t j) const;

  /// y-expression of x_var (a single slot unless the oracle is degenerate).
  const LinearForm& coord_form(std::size_t var) const { return coord_forms_.at(var); }
  /// Slot l with x_var = y_l, if any.
  std::optional<std::size_t> coord_slot(std::size_t var) const;

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }

  Eigen::MatrixXd instantiate(const Eigen::VectorXd& y) const;
  RationalMatrix instantiate(const RationalVector& y) const;

  /// Coefficient matrices A_l with M(y) = sum_l y_l A_l.
  std::vector<Eigen::MatrixXd> coefficient_matrices() const;

  /// x = projection of y through the coordinate forms.
  Eigen::VectorXd project(const Eigen::VectorXd& y) const;

  /// Entry (i, j) as text, e.g. "2*y2 - y1"; y indices are 0-based.
  std::string entry_to_string(std::size_t i, std::size_t j) const;

  /// JSON dump: labels and per-entry coefficient lists.
  std::string to_json() const;

 private:
  friend MomentTemplate build_moment_template(const QuotientOracle& oracle, int k);

  std::size_t dim_ = 0;
  std::size_t nvars_y_ = 0;
  int level_ = 0;
  std::vector<LinearForm> entries_;  // upper triangle, row-major
  std::vector<LinearForm> coord_forms_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> y_labels_;
};

/// Throws std::out_of_range when k exceeds the oracle's constructed depth.
MomentTemplate build_moment_template(const QuotientOracle& oracle, int k);

/// y^s = (f_l(s)) for f_l in B_2k.
Eigen::VectorXd point_to_moment_vector(const QuotientOracle& oracle, int k, const std::vector<double>& s);
RationalVector point_to_moment_vector(const QuotientOracle& oracle, int k, const RationalPoint& s);

}  // namespace theta

#pragma once

// Dense primal-dual interior-point solver for
//   maximize c.y  subject to  M(y) >= 0, y_0 = 1, optional pinned coordinates
// and linear equalities, with recovery of the dual (Gram) matrix.

#include "theta/moment.hpp"

#include <Eigen/Dense>

#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace theta {

struct SdpOptions {
  double gap_tol = 1e-9;
  double feas_tol = 1e-9;
  int max_iter = 200;
  double unbounded_cap = 1e8;
};

enum class SdpStatus { Optimal, Unbounded, Infeasible, NumericalTrouble };
std::string_view to_string(SdpStatus status);

enum class Sense { Maximize, Minimize };

/// Standard-form LMI pair used by the interior-point core:
///   (P) min <C, X>  s.t. <A_i, X> = b_i, X >= 0
///   (D) max b.z     s.t. S = C - sum_i z_i A_i >= 0
struct LmiProblem {
  Eigen::MatrixXd c;
  std::vector<Eigen::MatrixXd> a;
  Eigen::VectorXd b;
};

struct IterateRecord {
  double primal_objective;  // <C, X>
  double dual_objective;    // b.z
  double primal_residual;   // relative
  double dual_residual;     // relative
  double mu;
};

struct LmiResult {
  SdpStatus status = SdpStatus::NumericalTrouble;
  Eigen::MatrixXd x;
  Eigen::VectorXd z;
  Eigen::MatrixXd s;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
  int iterations = 0;
  std::vector<IterateRecord> history;
};

/// Optional strictly dual-feasible start: C - sum z_i A_i must be positive
/// definite.
LmiResult solve_lmi(const LmiProblem& problem, const SdpOptions& opts,
                    const std::optional<Eigen::VectorXd>& dual_start = std::nullopt);

/// max b.u  s.t.  F0 + sum_i u_i F_i >= 0, with phase I for a strictly
/// feasible start and detection of ascent directions that leave the matrix
/// unchanged. `value` is b.u; `dual_matrix` is the multiplier of the LMI.
struct AffineLmiResult {
  SdpStatus status = SdpStatus::NumericalTrouble;
  Eigen::VectorXd u;
  double value = 0.0;
  double bound = 0.0;
  Eigen::MatrixXd dual_matrix;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  std::vector<IterateRecord> history;
};

AffineLmiResult solve_affine_lmi(const Eigen::MatrixXd& f0, const std::vector<Eigen::MatrixXd>& f,
                                 const Eigen::VectorXd& b, const SdpOptions& opts = {},
                                 const std::optional<Eigen::VectorXd>& start = std::nullopt);

struct SdpProblem {
  std::shared_ptr<const MomentTemplate> tmpl;
  /// Objective over [y; extra], length nvars_y + extra_vars (shorter is zero-padded).
  Eigen::VectorXd objective;
  Sense sense = Sense::Maximize;
  /// Pinned y coordinates; y_0 = 1 is always added.
  std::map<std::size_t, double> fixed;
  /// Free auxiliary variables that enter only through the equalities.
  std::size_t extra_vars = 0;
  /// Linear equalities over [y; extra].
  Eigen::MatrixXd eq_lhs;
  Eigen::VectorXd eq_rhs;
  /// A moment vector believed to satisfy the constraints with M(y) > 0.
  std::optional<Eigen::VectorXd> interior_hint;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalTrouble;
  Eigen::VectorXd y;       // moment vector
  Eigen::VectorXd extra;   // auxiliary variables
  double value = 0.0;      // objective at y
  double bound = 0.0;      // objective bound certified by the dual matrix
  Eigen::MatrixXd dual_matrix;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  std::vector<IterateRecord> history;
};

SdpSolution solve(const SdpProblem& problem, const SdpOptions& opts = {});

struct PhaseOneResult {
  bool feasible = false;
  /// Optimal t of  max t s.t. M(y) - t I >= 0, t <= 1.
  double margin = 0.0;
  /// Upper bound on the optimal t certified by the phase-I dual.
  double margin_upper = 0.0;
  Eigen::VectorXd y;
  Eigen::VectorXd extra;
  SdpStatus status = SdpStatus::NumericalTrouble;
};

/// Strictly feasible start if one exists. Uses the interior hint when it is
/// consistent and positive definite, otherwise solves the phase-I problem.
PhaseOneResult phase1_interior(const SdpProblem& problem, const SdpOptions& opts = {});

}  // namespace theta

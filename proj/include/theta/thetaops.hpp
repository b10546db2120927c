#pragma once

// Theta-body operations: linear optimization over TH_k, membership, ray
// shooting, 2-D boundary and support-contour sweeps, and sum-of-squares
// certificates modulo the ideal.

#include "theta/moment.hpp"
#include "theta/sdp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace theta {

struct ThetaBodyProblem {
  OraclePtr oracle;
  int k = 1;
  std::shared_ptr<const MomentTemplate> tmpl;
  /// Known points of the real variety (oracle samples unless supplied).
  std::vector<std::vector<double>> samples;

  std::size_t nvars() const { return oracle->nvars(); }
  /// Average of y^s over the samples; empty when there are none.
  std::optional<Eigen::VectorXd> barycenter() const;
};

ThetaBodyProblem make_problem(OraclePtr oracle, int k,
                              std::optional<std::vector<std::vector<double>>> samples = std::nullopt);

/// Objective over y equal to c.x under the coordinate forms.
Eigen::VectorXd objective_over_y(const ThetaBodyProblem& p, const std::vector<double>& c);

struct LinearResult {
  SdpStatus status = SdpStatus::NumericalTrouble;
  double value = 0.0;
  std::vector<double> optimizer;
  SdpSolution sdp;
};

LinearResult maximize_linear(const ThetaBodyProblem& p, const std::vector<double>& c, const SdpOptions& opts = {});

struct MembershipResult {
  bool inside = false;
  /// Optimal t of max t s.t. M(y) - t I >= 0 with the coordinates pinned.
  double margin = 0.0;
  SdpStatus status = SdpStatus::NumericalTrouble;
};

MembershipResult membership(const ThetaBodyProblem& p, const std::vector<double>& x, const SdpOptions& opts = {});

struct RayResult {
  SdpStatus status = SdpStatus::NumericalTrouble;
  bool unbounded = false;
  double t = 0.0;
};

/// max{t : t d in TH_k}.
RayResult ray_shoot(const ThetaBodyProblem& p, const std::vector<double>& direction, const SdpOptions& opts = {});

struct BoundaryPoint {
  double theta = 0.0;
  RayResult ray;
  double x = 0.0, y = 0.0;  // t (cos theta, sin theta) when bounded
};

/// Directions theta_j = 2 pi j / num_dirs, solved on `jobs` workers (0: all cores).
std::vector<BoundaryPoint> trace_boundary_2d(const ThetaBodyProblem& p, std::size_t num_dirs,
                                             const SdpOptions& opts = {}, std::size_t jobs = 0);

struct SupportLine {
  std::vector<double> c;
  SdpStatus status = SdpStatus::NumericalTrouble;
  bool unbounded = false;
  double lambda = 0.0;  // min{lambda : lambda - c.x is k-sos mod I}
};

/// Solves the Gram-matrix side directly: minimize lambda over PSD X with
/// lambda - c.x = f_k' X f_k modulo the ideal.
std::vector<SupportLine> support_contour(const ThetaBodyProblem& p, const std::vector<std::vector<double>>& directions,
                                         const SdpOptions& opts = {}, std::size_t jobs = 0);

enum class CertificateMode { Exact, Numeric };
std::string_view to_string(CertificateMode mode);

struct Certificate {
  Polynomial linear_poly;        // lambda - c.x
  RationalMatrix gram;           // rationalized P, indexed by B_k
  Eigen::MatrixXd gram_numeric;  // P before rationalization
  Polynomial residual;           // (lambda - c.x) - f' P f reduced mod I, exact for `gram`
  CertificateMode mode = CertificateMode::Numeric;
  bool verified = false;
  bool gram_psd = false;
  double max_residual = 0.0;     // largest |coefficient| of the residual in the reported mode
  double optimum = 0.0;          // max c.x over TH_k
  std::string message;
};

Certificate extract_certificate(const ThetaBodyProblem& p, const std::vector<double>& c, double lambda,
                                const SdpOptions& opts = {});

/// Exact residual of P against lambda - c.x: both sides in B_2k coordinates.
Polynomial gram_residual(const QuotientOracle& oracle, int k, const Polynomial& l, const RationalMatrix& gram);

/// Normal form of l - sum s_i^2 modulo the ideal.
Polynomial verify_sos_identity(const Polynomial& l, const std::vector<Polynomial>& squares,
                               const QuotientOracle& oracle);

/// Squares p_i = (1 - x1)(1 - x_{2i} - x_{2i+1}), g_i = x1 (1 - x_{2i+1} - x_{2i+2})
/// certifying (n-1)/2 - sum x_i on the odd cycle C_n.
std::vector<Polynomial> odd_cycle_squares(std::size_t n);

/// Points of a real plane curve h = 0 on lines through the origin at
/// `count` equally spaced angles in [0, pi).
std::vector<std::vector<double>> sample_plane_curve(const Polynomial& h, std::size_t count);

/// Deterministic map over [0, n) on a worker pool; results by index.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, std::size_t jobs, F fn);

}  // namespace theta

#include "theta/detail/parallel.hpp"

#include "theta/sdp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace theta {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

double min_eigenvalue(const MatrixXd& a) {
  if (a.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (a + a.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// The problem after eliminating equalities: w = w0 + basis * u, with
/// M(w) = f0 + sum_i u_i f[i] and objective c.w = offset + sign * b.u.
struct Reduced {
  std::size_t nw = 0;
  VectorXd c;
  VectorXd w0;
  MatrixXd basis;  // nw x r
  MatrixXd f0;
  std::vector<MatrixXd> f;
  VectorXd b;      // sign-adjusted, internal maximization
  double sign = 1.0;
  bool inconsistent = false;
  bool flat_ascent = false;  // objective improves along a direction that leaves M unchanged
  std::vector<std::size_t> free_cols;
  MatrixXd rotation;  // free coordinates -> u
};

Reduced reduce(const SdpProblem& p) {
  if (!p.tmpl) throw std::invalid_argument("SDP problem has no moment template");
  const auto& t = *p.tmpl;
  Reduced r;
  const std::size_t ny = t.nvars_y();
  r.nw = ny + p.extra_vars;
  if (static_cast<std::size_t>(p.objective.size()) > r.nw) throw std::invalid_argument("objective too long");
  r.c = VectorXd::Zero(r.nw);
  r.c.head(p.objective.size()) = p.objective;
  r.sign = p.sense == Sense::Maximize ? 1.0 : -1.0;

  auto fixed = p.fixed;
  fixed.emplace(0, 1.0);
  if (fixed.at(0) != 1.0) throw std::invalid_argument("y_0 must be pinned to 1");
  const std::size_t neq = fixed.size() + static_cast<std::size_t>(p.eq_lhs.rows());
  if (p.eq_lhs.rows() > 0 && static_cast<std::size_t>(p.eq_lhs.cols()) > r.nw) {
    throw std::invalid_argument("equality rows are too long");
  }
  if (p.eq_lhs.rows() != p.eq_rhs.size()) throw std::invalid_argument("equality sizes disagree");
  MatrixXd e = MatrixXd::Zero(neq, r.nw + 1);
  std::size_t row = 0;
  for (auto [idx, v] : fixed) {
    if (idx >= ny) throw std::invalid_argument("pinned coordinate out of range");
    e(row, idx) = 1.0;
    e(row, r.nw) = v;
    ++row;
  }
  for (Eigen::Index i = 0; i < p.eq_lhs.rows(); ++i, ++row) {
    e.block(row, 0, 1, p.eq_lhs.cols()) = p.eq_lhs.row(i);
    e(row, r.nw) = p.eq_rhs[i];
  }

  // Gauss-Jordan with partial pivoting.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
  for (std::size_t col = 0; col < r.nw && rank < neq; ++col) {
    Eigen::Index best;
    double mag = e.col(col).segment(rank, neq - rank).cwiseAbs().maxCoeff(&best);
    if (mag <= 1e-12 * scale) continue;
    e.row(rank).swap(e.row(rank + best));
    e.row(rank) /= e(rank, col);
    for (std::size_t i = 0; i < neq; ++i) {
      if (i != rank && e(i, col) != 0.0) e.row(i) -= e(i, col) * e.row(rank);
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < neq; ++i) {
    if (std::abs(e(i, r.nw)) > 1e-9 * scale) r.inconsistent = true;
  }
  std::vector<bool> is_pivot(r.nw, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < r.nw; ++c) {
    if (!is_pivot[c]) r.free_cols.push_back(c);
  }
  r.w0 = VectorXd::Zero(r.nw);
  for (std::size_t i = 0; i < rank; ++i) r.w0[pivots[i]] = e(i, r.nw);
  MatrixXd tfree = MatrixXd::Zero(r.nw, r.free_cols.size());
  for (std::size_t j = 0; j < r.free_cols.size(); ++j) {
    tfree(r.free_cols[j], j) = 1.0;
    for (std::size_t i = 0; i < rank; ++i) tfree(pivots[i], j) = -e(i, r.free_cols[j]);
  }

  const auto a = t.coefficient_matrices();
  auto matrix_of = [&](const VectorXd& w) {
    MatrixXd m = MatrixXd::Zero(t.dim(), t.dim());
    for (std::size_t l = 0; l < ny; ++l) {
      if (w[l] != 0.0) m += w[l] * a[l];
    }
    return m;
  };
  r.f0 = matrix_of(r.w0);
  std::vector<MatrixXd> ff;
  for (std::size_t j = 0; j < r.free_cols.size(); ++j) ff.push_back(matrix_of(tfree.col(j)));
  VectorXd bfree = r.sign * (tfree.transpose() * r.c);

  // Drop directions along which M does not change.
  const std::size_t nf = ff.size();
  const std::size_t d = t.dim();
  MatrixXd v(d * (d + 1) / 2, nf);
  for (std::size_t j = 0; j < nf; ++j) {
    std::size_t k = 0;
    for (std::size_t i1 = 0; i1 < d; ++i1) {
      for (std::size_t i2 = i1; i2 < d; ++i2, ++k) v(k, j) = ff[j](i1, i2) * (i1 == i2 ? 1.0 : std::sqrt(2.0));
    }
  }
  MatrixXd gram = v.transpose() * v;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es;
  if (nf > 0) es.compute(gram);  // Eigen cannot take an empty matrix
  const double top = nf ? std::max(es.eigenvalues().maxCoeff(), 0.0) : 0.0;
  std::vector<Eigen::Index> keep;
  for (std::size_t j = 0; j < nf; ++j) {
    if (es.eigenvalues()(j) > 1e-12 * std::max(top, 1.0)) {
      keep.push_back(j);
    } else if (std::abs(es.eigenvectors().col(j).dot(bfree)) > 1e-9 * (1.0 + bfree.norm())) {
      r.flat_ascent = true;
    }
  }
  r.rotation = MatrixXd(nf, keep.size());
  for (std::size_t q = 0; q < keep.size(); ++q) r.rotation.col(q) = es.eigenvectors().col(keep[q]);
  r.basis = tfree * r.rotation;
  r.b = r.rotation.transpose() * bfree;
  for (std::size_t q = 0; q < keep.size(); ++q) {
    MatrixXd m = MatrixXd::Zero(d, d);
    for (std::size_t j = 0; j < nf; ++j) m += r.rotation(j, q) * ff[j];
    r.f.push_back(std::move(m));
  }
  return r;
}

MatrixXd matrix_at(const Reduced& r, const VectorXd& u) {
  MatrixXd m = r.f0;
  for (std::size_t i = 0; i < r.f.size(); ++i) m += u[i] * r.f[i];
  return m;
}

/// u for a full vector w, when w satisfies the equalities.
std::optional<VectorXd> coordinates_of(const Reduced& r, const VectorXd& w) {
  if (static_cast<std::size_t>(w.size()) != r.nw) return std::nullopt;
  VectorXd zf(r.free_cols.size());
  for (std::size_t j = 0; j < r.free_cols.size(); ++j) zf[j] = w[r.free_cols[j]];
  // Components of zf dropped here leave M unchanged.
  return VectorXd(r.rotation.transpose() * zf);
}

bool satisfies_equalities(const SdpProblem& p, const VectorXd& w, double tol) {
  if (std::abs(w[0] - 1.0) > tol) return false;
  for (auto [idx, v] : p.fixed) {
    if (std::abs(w[idx] - v) > tol) return false;
  }
  for (Eigen::Index i = 0; i < p.eq_lhs.rows(); ++i) {
    double lhs = p.eq_lhs.row(i).dot(w.head(p.eq_lhs.cols()));
    if (std::abs(lhs - p.eq_rhs[i]) > tol * (1.0 + std::abs(p.eq_rhs[i]))) return false;
  }
  return true;
}

struct PhaseOneCore {
  PhaseOneResult result;
  VectorXd u;
};

PhaseOneCore run_phase1(const Reduced& r, const SdpOptions& opts) {
  PhaseOneCore out;
  const std::size_t d = r.f0.rows();
  const std::size_t m = r.f.size();
  // Variables (u, t); S = blkdiag(M(u) - t I, 1 - t).
  LmiProblem lmi;
  lmi.c = MatrixXd::Zero(d + 1, d + 1);
  lmi.c.topLeftCorner(d, d) = r.f0;
  lmi.c(d, d) = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    MatrixXd a = MatrixXd::Zero(d + 1, d + 1);
    a.topLeftCorner(d, d) = -r.f[i];
    lmi.a.push_back(std::move(a));
  }
  lmi.a.push_back(MatrixXd::Identity(d + 1, d + 1));
  lmi.b = VectorXd::Zero(m + 1);
  lmi.b[m] = 1.0;
  VectorXd start = VectorXd::Zero(m + 1);
  start[m] = std::min(min_eigenvalue(r.f0) - 1.0, 0.0);
  auto res = solve_lmi(lmi, opts, start);
  out.u = res.z.head(m);
  out.result.margin = res.dual_objective;
  out.result.margin_upper = res.primal_objective;
  out.result.status = res.status;
  if (res.status == SdpStatus::Optimal) {
    out.result.feasible = res.primal_objective >= -opts.feas_tol;
    if (!out.result.feasible) out.result.status = SdpStatus::Infeasible;
  } else {
    out.result.feasible = res.dual_objective >= -opts.feas_tol;
  }
  return out;
}

void fill_point(const Reduced& r, std::size_t ny, const VectorXd& u, VectorXd& y, VectorXd& extra) {
  VectorXd w = r.w0 + r.basis * u;
  y = w.head(ny);
  extra = w.tail(r.nw - ny);
}

}  // namespace

PhaseOneResult phase1_interior(const SdpProblem& problem, const SdpOptions& opts) {
  auto r = reduce(problem);
  const std::size_t ny = problem.tmpl->nvars_y();
  PhaseOneResult out;
  if (r.inconsistent) {
    out.status = SdpStatus::Infeasible;
    out.margin = out.margin_upper = -std::numeric_limits<double>::infinity();
    return out;
  }
  if (problem.interior_hint && satisfies_equalities(problem, *problem.interior_hint, 1e-9)) {
    if (auto u = coordinates_of(r, *problem.interior_hint)) {
      double lo = min_eigenvalue(matrix_at(r, *u));
      if (lo > 1e-9) {
        out.feasible = true;
        out.margin = out.margin_upper = std::min(lo, 1.0);
        out.status = SdpStatus::Optimal;
        fill_point(r, ny, *u, out.y, out.extra);
        return out;
      }
    }
  }
  if (r.f.empty()) {
    double lo = min_eigenvalue(r.f0);
    out.margin = out.margin_upper = std::min(lo, 1.0);
    out.feasible = lo >= -opts.feas_tol;
    out.status = out.feasible ? SdpStatus::Optimal : SdpStatus::Infeasible;
    fill_point(r, ny, VectorXd::Zero(0), out.y, out.extra);
    return out;
  }
  auto core = run_phase1(r, opts);
  out = core.result;
  fill_point(r, ny, core.u, out.y, out.extra);
  return out;
}

namespace {

AffineLmiResult affine_lmi(const MatrixXd& f0, const std::vector<MatrixXd>& f, const VectorXd& b,
                           const SdpOptions& opts, const std::optional<VectorXd>& start_hint, bool recession_check);

// max b.d over {d : sum d_i F_i >= 0, tr(sum d_i F_i) <= 1}. With the flat
// directions removed the set is compact; a positive optimum is a recession
// direction of the LMI along which b.u grows without bound.
double recession_ascent(const std::vector<MatrixXd>& f, const VectorXd& b, const SdpOptions& opts) {
  const Eigen::Index d = f.front().rows();
  MatrixXd g0 = MatrixXd::Zero(d + 1, d + 1);
  g0(d, d) = 1.0;
  std::vector<MatrixXd> g;
  for (const auto& fi : f) {
    MatrixXd gi = MatrixXd::Zero(d + 1, d + 1);
    gi.topLeftCorner(d, d) = fi;
    gi(d, d) = -fi.trace();
    g.push_back(std::move(gi));
  }
  auto rec = affine_lmi(g0, g, b, opts, std::nullopt, false);
  return rec.status == SdpStatus::Optimal ? rec.value : 0.0;
}

}  // namespace

AffineLmiResult solve_affine_lmi(const MatrixXd& f0, const std::vector<MatrixXd>& f, const VectorXd& b,
                                 const SdpOptions& opts, const std::optional<VectorXd>& start_hint) {
  return affine_lmi(f0, f, b, opts, start_hint, true);
}

namespace {

AffineLmiResult affine_lmi(const MatrixXd& f0, const std::vector<MatrixXd>& f, const VectorXd& b,
                           const SdpOptions& opts, const std::optional<VectorXd>& start_hint, bool recession_check) {
  AffineLmiResult out;
  const std::size_t d = f0.rows();
  out.dual_matrix = MatrixXd::Zero(d, d);
  if (static_cast<std::size_t>(b.size()) != f.size()) throw std::invalid_argument("objective length mismatch");

  // Directions along which the matrix does not move.
  Reduced r;
  r.f0 = f0;
  const std::size_t nf = f.size();
  MatrixXd v(d * (d + 1) / 2, nf);
  for (std::size_t j = 0; j < nf; ++j) {
    std::size_t k = 0;
    for (std::size_t i1 = 0; i1 < d; ++i1) {
      for (std::size_t i2 = i1; i2 < d; ++i2, ++k) v(k, j) = f[j](i1, i2) * (i1 == i2 ? 1.0 : std::sqrt(2.0));
    }
  }
  MatrixXd rot = MatrixXd::Identity(nf, nf);
  if (nf > 0) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(v.transpose() * v);
    const double top = std::max(es.eigenvalues().maxCoeff(), 0.0);
    std::vector<Eigen::Index> keep;
    for (std::size_t j = 0; j < nf; ++j) {
      if (es.eigenvalues()(j) > 1e-12 * std::max(top, 1.0)) {
        keep.push_back(j);
      } else if (std::abs(es.eigenvectors().col(j).dot(b)) > 1e-9 * (1.0 + b.norm())) {
        r.flat_ascent = true;
      }
    }
    if (keep.size() < nf) {
      rot = MatrixXd(nf, keep.size());
      for (std::size_t q = 0; q < keep.size(); ++q) rot.col(q) = es.eigenvectors().col(keep[q]);
    }
  }
  for (Eigen::Index q = 0; q < rot.cols(); ++q) {
    MatrixXd m = MatrixXd::Zero(d, d);
    for (std::size_t j = 0; j < nf; ++j) {
      if (rot(j, q) != 0.0) m += rot(j, q) * f[j];
    }
    r.f.push_back(std::move(m));
  }
  r.b = rot.transpose() * b;

  if (r.f.empty()) {
    out.u = VectorXd::Zero(nf);
    bool ok = min_eigenvalue(f0) >= -opts.feas_tol;
    out.status = !ok ? SdpStatus::Infeasible : (r.flat_ascent ? SdpStatus::Unbounded : SdpStatus::Optimal);
    return out;
  }
  std::optional<VectorXd> start;
  if (start_hint && static_cast<std::size_t>(start_hint->size()) == nf) {
    VectorXd u = rot.transpose() * *start_hint;
    if (min_eigenvalue(matrix_at(r, u)) > 1e-9) start = u;
  }
  if (!start) {
    auto core = run_phase1(r, opts);
    if (core.result.status == SdpStatus::Infeasible) {
      out.status = SdpStatus::Infeasible;
      out.u = rot * core.u;
      return out;
    }
    if (core.result.margin > 1e-7) start = core.u;
  }
  if (r.flat_ascent) {
    out.status = SdpStatus::Unbounded;
    out.u = start ? VectorXd(rot * *start) : VectorXd::Zero(nf);
    out.value = out.bound = std::numeric_limits<double>::infinity();
    return out;
  }
  LmiProblem lmi;
  lmi.c = r.f0;
  for (const auto& m : r.f) lmi.a.push_back(-m);
  lmi.b = r.b;
  auto res = solve_lmi(lmi, opts, start);
  out.status = res.status;
  out.u = rot * res.z;
  out.value = res.dual_objective;
  out.bound = res.primal_objective;
  out.dual_matrix = res.x;
  out.gap = res.gap;
  out.primal_residual = res.primal_residual;
  out.dual_residual = res.dual_residual;
  out.iterations = res.iterations;
  out.history = std::move(res.history);
  if (out.status == SdpStatus::NumericalTrouble && recession_check &&
      recession_ascent(r.f, r.b, opts) > 1e-6 * (1.0 + r.b.norm())) {
    out.status = SdpStatus::Unbounded;
    out.value = out.bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace

SdpSolution solve(const SdpProblem& problem, const SdpOptions& opts) {
  auto r = reduce(problem);
  const std::size_t ny = problem.tmpl->nvars_y();
  const std::size_t d = problem.tmpl->dim();
  SdpSolution sol;
  sol.dual_matrix = MatrixXd::Zero(d, d);
  if (r.inconsistent) {
    sol.status = SdpStatus::Infeasible;
    return sol;
  }
  if (r.flat_ascent) {
    // The objective moves along a direction that leaves M fixed: unbounded
    // as soon as the constraints are feasible at all.
    auto core = r.f.empty() ? PhaseOneCore{} : run_phase1(r, opts);
    bool feasible = r.f.empty() ? min_eigenvalue(r.f0) >= -opts.feas_tol
                                : core.result.status != SdpStatus::Infeasible;
    sol.status = feasible ? SdpStatus::Unbounded : SdpStatus::Infeasible;
    fill_point(r, ny, r.f.empty() ? VectorXd::Zero(0) : core.u, sol.y, sol.extra);
    sol.value = sol.bound = std::numeric_limits<double>::infinity() * r.sign;
    return sol;
  }
  std::optional<VectorXd> start;
  if (problem.interior_hint && satisfies_equalities(problem, *problem.interior_hint, 1e-9)) {
    start = coordinates_of(r, *problem.interior_hint);
  }
  auto res = solve_affine_lmi(r.f0, r.f, r.b, opts, start);
  sol.status = res.status;
  fill_point(r, ny, res.u.size() ? res.u : VectorXd::Zero(r.f.size()), sol.y, sol.extra);
  const double offset = r.c.dot(r.w0);
  sol.value = sol.status == SdpStatus::Unbounded ? std::numeric_limits<double>::infinity() * r.sign
                                                 : r.c.dot(r.w0 + r.basis * res.u);
  sol.bound = offset + r.sign * res.bound;
  sol.dual_matrix = res.dual_matrix;
  sol.gap = res.gap;
  sol.primal_residual = res.primal_residual;
  sol.dual_residual = res.dual_residual;
  sol.iterations = res.iterations;
  sol.history = std::move(res.history);
  return sol;
}

}  // namespace theta

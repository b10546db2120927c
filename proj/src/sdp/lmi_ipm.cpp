#include "theta/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace theta {

std::string_view to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::Optimal: return "optimal";
    case SdpStatus::Unbounded: return "unbounded";
    case SdpStatus::Infeasible: return "infeasible";
    case SdpStatus::NumericalTrouble: return "numerical_trouble";
  }
  return "unknown";
}

namespace {

// The core iterates in extended precision: NT scaling amplifies rounding
// in the direction computation by roughly 1/mu near rank-deficient optima.
using Real = long double;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

const Real kSqrt2 = std::sqrt(Real(2));
const Real kInf = std::numeric_limits<Real>::infinity();

Real inner(const Mat& a, const Mat& b) { return a.cwiseProduct(b).sum(); }

Mat sym(const Mat& a) { return Real(0.5) * (a + a.transpose()); }

Real min_eigenvalue(const Mat& a) {
  if (a.rows() == 0) return kInf;
  Eigen::SelfAdjointEigenSolver<Mat> es(sym(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

/// Largest alpha with L L^T + alpha D >= 0, given the Cholesky factor L.
Real max_step(const Mat& l, const Mat& d) {
  auto tri = l.triangularView<Eigen::Lower>();
  Mat t = tri.solve(d);
  t = tri.solve(t.transpose()).transpose();
  Real lo = min_eigenvalue(t);
  return lo < 0 ? -1 / lo : kInf;
}

class Core {
 public:
  Core(const LmiProblem& p, const SdpOptions& o) : opts_(o), n_(p.c.rows()), m_(p.a.size()) {
    c_ = p.c.cast<Real>();
    for (const auto& a : p.a) a_.push_back(a.cast<Real>());
    b_ = p.b.cast<Real>();
    norm_b_ = b_.norm();
    norm_c_ = c_.norm();
  }

  Mat adjoint(const Vec& z) const {
    Mat out = Mat::Zero(n_, n_);
    for (std::size_t i = 0; i < m_; ++i) out += z[i] * a_[i];
    return out;
  }

  Vec apply(const Mat& x) const {
    Vec out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = inner(a_[i], x);
    return out;
  }

  LmiResult run(const std::optional<Eigen::VectorXd>& dual_start) {
    LmiResult res;
    Real max_norm_a = 0, xi_ratio = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      Real na = a_[i].norm();
      max_norm_a = std::max(max_norm_a, na);
      xi_ratio = std::max(xi_ratio, (1 + std::abs(b_[i])) / (1 + na));
    }
    const Real rn = std::sqrt(static_cast<Real>(n_));
    const Real xi = std::max({Real(10), rn, static_cast<Real>(n_) * xi_ratio});
    const Real eta = std::max({Real(10), rn, 1 + std::max(max_norm_a, norm_c_)});

    Mat x = xi * Mat::Identity(n_, n_);
    Vec z = Vec::Zero(m_);
    Mat s = eta * Mat::Identity(n_, n_);
    if (dual_start) {
      z = dual_start->cast<Real>();
      s = sym(c_ - adjoint(z));
    }

    for (int iter = 0;; ++iter) {
      Vec rp = b_ - apply(x);
      Mat rd = sym(c_ - adjoint(z) - s);
      const Real pobj = inner(c_, x);
      const Real dobj = b_.dot(z);
      const Real pinf = rp.norm() / (1 + norm_b_);
      const Real dinf = rd.norm() / (1 + norm_c_);
      const Real gap = std::abs(pobj - dobj) / (1 + std::abs(pobj) + std::abs(dobj));
      const Real mu = inner(x, s) / static_cast<Real>(n_);
      res.history.push_back({double(pobj), double(dobj), double(pinf), double(dinf), double(mu)});
      res.x = x.cast<double>();
      res.z = z.cast<double>();
      res.s = s.cast<double>();
      res.primal_objective = double(pobj);
      res.dual_objective = double(dobj);
      res.primal_residual = double(pinf);
      res.dual_residual = double(dinf);
      res.gap = double(gap);
      res.iterations = iter;

      if (pinf <= opts_.feas_tol && dinf <= opts_.feas_tol && gap <= opts_.gap_tol) {
        res.status = SdpStatus::Optimal;
        return res;
      }
      if (dobj > opts_.unbounded_cap) {
        // Only a dual point that is truly feasible certifies unboundedness.
        Real lo = min_eigenvalue(c_ - adjoint(z));
        if (lo >= -opts_.feas_tol * (1 + norm_c_)) {
          res.status = SdpStatus::Unbounded;
          return res;
        }
      }
      if (pobj < -opts_.unbounded_cap && pinf <= opts_.feas_tol) {
        res.status = SdpStatus::Infeasible;  // primal unbounded below: the dual has no feasible point
        return res;
      }
      if (iter >= opts_.max_iter) return res;

      Eigen::LLT<Mat> llt_x(x), llt_s(s);
      if (llt_x.info() != Eigen::Success || llt_s.info() != Eigen::Success) return res;
      Mat lx = llt_x.matrixL();
      Mat ls = llt_s.matrixL();
      Eigen::JacobiSVD<Mat> svd(ls.transpose() * lx, Eigen::ComputeFullU | Eigen::ComputeFullV);
      Vec lambda = svd.singularValues();
      if (lambda.minCoeff() <= 0) return res;
      Vec isq = lambda.cwiseSqrt().cwiseInverse();
      Mat g = lx * svd.matrixV() * isq.asDiagonal();
      Mat g_inv = isq.asDiagonal() * svd.matrixU().transpose() * ls.transpose();
      Mat w = sym(g * g.transpose());

      // Schur complement M_ij = <A_i, W A_j W> = <G'A_iG, G'A_jG>, factored
      // through a QR of the stacked scaled constraints rather than formed.
      // Columns are equilibrated first, so the 1e-20 diagonal regularization
      // is relative to each diagonal entry of M.
      const std::size_t rows = n_ * (n_ + 1) / 2;
      Mat stacked = Mat::Zero(rows + m_, m_);
      Vec colnorm(m_);
      for (std::size_t j = 0; j < m_; ++j) {
        Mat sa = g.transpose() * a_[j] * g;
        std::size_t k = 0;
        for (std::size_t i1 = 0; i1 < n_; ++i1) {
          for (std::size_t i2 = i1; i2 < n_; ++i2, ++k) stacked(k, j) = sa(i1, i2) * (i1 == i2 ? 1 : kSqrt2);
        }
        colnorm[j] = stacked.col(j).norm();
        if (colnorm[j] == 0) colnorm[j] = 1;
        stacked.col(j) /= colnorm[j];
        stacked(rows + j, j) = Real(1e-10);
      }
      Eigen::ColPivHouseholderQR<Mat> qr(stacked);
      const Mat rfac = qr.matrixR().topLeftCorner(m_, m_).template triangularView<Eigen::Upper>();
      const auto perm = qr.colsPermutation();
      auto schur_solve = [&](const Vec& rhs) {
        Vec t = perm.transpose() * rhs.cwiseQuotient(colnorm);
        t = rfac.transpose().triangularView<Eigen::Lower>().solve(t);
        t = rfac.triangularView<Eigen::Upper>().solve(t);
        return Vec((perm * t).cwiseQuotient(colnorm));
      };

      Mat wrdw = w * rd * w;
      auto direction = [&](const Mat& r, Mat& dx, Vec& dz, Mat& ds) {
        dz = schur_solve(rp - apply(r - wrdw));
        ds = sym(rd - adjoint(dz));
        dx = sym(r - w * ds * w);
        // Refinement against the computed dx restores A(dx) = rp despite the
        // regularization.
        Real defect = (rp - apply(dx)).norm();
        for (int pass = 0; pass < 8 && defect > 0; ++pass) {
          Vec dz2 = dz + schur_solve(rp - apply(dx));
          Mat ds2 = sym(rd - adjoint(dz2));
          Mat dx2 = sym(r - w * ds2 * w);
          Real d2 = (rp - apply(dx2)).norm();
          if (!(d2 < Real(0.5) * defect)) break;
          dz = std::move(dz2);
          ds = std::move(ds2);
          dx = std::move(dx2);
          defect = d2;
        }
      };

      Mat dx_a, ds_a;
      Vec dz_a;
      direction(-x, dx_a, dz_a, ds_a);
      Real ap = std::min(Real(1), max_step(lx, dx_a));
      Real ad = std::min(Real(1), max_step(ls, ds_a));
      Real mu_aff = inner(x + ap * dx_a, s + ad * ds_a) / static_cast<Real>(n_);
      Real sigma = std::clamp(std::pow(std::max(mu_aff, Real(0)) / mu, Real(3)), Real(0), Real(1));

      Mat dxt = g_inv * dx_a * g_inv.transpose();
      Mat dst = g.transpose() * ds_a * g;
      Mat rc = -sym(dxt * dst);
      for (std::size_t i = 0; i < n_; ++i) rc(i, i) += sigma * mu - lambda[i] * lambda[i];
      Mat u(n_, n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) u(i, j) = 2 * rc(i, j) / (lambda[i] + lambda[j]);
      }
      Mat dx, ds;
      Vec dz;
      direction(sym(g * u * g.transpose()), dx, dz, ds);

      const Real tau = 0.98L;
      ap = std::min(Real(1), tau * max_step(lx, dx));
      ad = std::min(Real(1), tau * max_step(ls, ds));
      // The eigenvalue step bound can overshoot by rounding when X or S is
      // nearly singular; back off until the factorization succeeds.
      Mat x_new = sym(x + ap * dx), s_new = sym(s + ad * ds);
      for (int back = 0; back < 30 && Eigen::LLT<Mat>(x_new).info() != Eigen::Success; ++back) {
        ap *= Real(0.5);
        x_new = sym(x + ap * dx);
      }
      for (int back = 0; back < 30 && Eigen::LLT<Mat>(s_new).info() != Eigen::Success; ++back) {
        ad *= Real(0.5);
        s_new = sym(s + ad * ds);
      }
      if (ap < 1e-12L && ad < 1e-12L) return res;
      x = std::move(x_new);
      z += ad * dz;
      s = std::move(s_new);
    }
  }

 private:
  SdpOptions opts_;
  std::size_t n_, m_;
  Mat c_;
  std::vector<Mat> a_;
  Vec b_;
  Real norm_b_ = 0, norm_c_ = 0;
};

}  // namespace

LmiResult solve_lmi(const LmiProblem& problem, const SdpOptions& opts, const std::optional<Eigen::VectorXd>& dual_start) {
  Core core(problem, opts);
  return core.run(dual_start);
}

}  // namespace theta

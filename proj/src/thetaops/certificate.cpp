#include "theta/thetaops.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>

namespace theta {

std::string_view to_string(CertificateMode mode) {
  return mode == CertificateMode::Exact ? "exact" : "numeric";
}

namespace {

std::map<std::size_t, Rational> to_map(const SparseVector& v) {
  std::map<std::size_t, Rational> m;
  for (const auto& [i, c] : v) m[i] += c;
  return m;
}

SparseVector from_map(const std::map<std::size_t, Rational>& m) {
  SparseVector out;
  for (const auto& [i, c] : m) {
    if (c != 0) out.emplace_back(i, c);
  }
  return out;
}

/// (l - f' P f) in B_2k coordinates.
std::map<std::size_t, Rational> residual_coordinates(const QuotientOracle& oracle, int k, const Polynomial& l,
                                                     const RationalMatrix& gram) {
  const std::size_t d = oracle.level_size(k);
  if (gram.size() != d) throw std::invalid_argument("Gram matrix does not match |B_k|");
  auto acc = to_map(oracle.coordinates(l));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational w = i == j ? gram[i][i] : gram[i][j] + gram[j][i];
      if (w == 0) continue;
      for (const auto& [idx, c] : oracle.product(i, j)) acc[idx] -= w * c;
    }
  }
  return acc;
}

/// Rounds the numeric Gram matrix to a rational P = Q Y Q' (Q: columns of
/// `face`, identity when empty) with an exact least-norm correction of Y.
/// Returns P when the identity is exact and Y is PSD.
std::optional<RationalMatrix> round_on_face(const QuotientOracle& oracle, int k, const Polynomial& l,
                                            const Eigen::MatrixXd& gram, const std::vector<RationalVector>& face,
                                            unsigned long max_den) {
  const std::size_t d = oracle.level_size(k);
  const bool full = face.empty();
  const std::size_t q = full ? d : face.size();
  auto qat = [&](std::size_t i, std::size_t a) -> Rational { return full ? Rational(i == a ? 1 : 0) : face[a][i]; };

  Eigen::MatrixXd ynum = gram;
  if (!full) {
    Eigen::MatrixXd qd(d, q);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t a = 0; a < q; ++a) qd(i, a) = face[a][i].get_d();
    }
    Eigen::MatrixXd pinv = (qd.transpose() * qd).ldlt().solve(qd.transpose());
    ynum = pinv * gram * pinv.transpose();
  }
  RationalMatrix y(q, RationalVector(q));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a; b < q; ++b) y[a][b] = y[b][a] = limit_denominator(0.5 * (ynum(a, b) + ynum(b, a)), max_den);
  }
  auto lift = [&](const RationalMatrix& ym) {
    if (full) return ym;
    RationalMatrix t(d, RationalVector(q)), out(d, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t a = 0; a < q; ++a) {
        if (face[a][i] == 0) continue;
        for (std::size_t b = 0; b < q; ++b) t[i][b] += face[a][i] * ym[a][b];
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        Rational s = 0;
        for (std::size_t b = 0; b < q; ++b) {
          if (t[i][b] != 0 && face[b][j] != 0) s += t[i][b] * face[b][j];
        }
        out[i][j] = out[j][i] = s;
      }
    }
    return out;
  };

  auto is_zero = [](const std::map<std::size_t, Rational>& m) {
    for (const auto& [i, v] : m) {
      if (v != 0) return false;
    }
    return true;
  };
  RationalMatrix p = lift(y);
  auto res = residual_coordinates(oracle, k, l, p);
  if (!is_zero(res)) {
    // Columns: coordinates of f' Q E_ab Q' f for each upper-triangle slot (a, b) of Y.
    std::map<std::size_t, std::size_t> row_of;
    for (const auto& [i, v] : res) row_of.emplace(i, row_of.size());
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    std::vector<std::map<std::size_t, Rational>> cols;
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = a; b < q; ++b) {
        std::map<std::size_t, Rational> col;
        for (std::size_t i = 0; i < d; ++i) {
          Rational qia = qat(i, a), qib = qat(i, b);
          if (qia == 0 && qib == 0) continue;
          for (std::size_t j = 0; j < d; ++j) {
            Rational e = qia * qat(j, b);
            if (a != b) e += qib * qat(j, a);
            if (e == 0) continue;
            for (const auto& [idx, c] : oracle.product(std::min(i, j), std::max(i, j))) col[idx] += e * c;
          }
        }
        for (const auto& [idx, v] : col) {
          if (v != 0) row_of.emplace(idx, row_of.size());
        }
        slots.emplace_back(a, b);
        cols.push_back(std::move(col));
      }
    }
    const std::size_t m = row_of.size();
    RationalMatrix aat(m, RationalVector(m));
    for (const auto& col : cols) {
      for (const auto& [i1, v1] : col) {
        if (v1 == 0) continue;
        for (const auto& [i2, v2] : col) {
          if (v2 != 0) aat[row_of[i1]][row_of[i2]] += v1 * v2;
        }
      }
    }
    RationalVector rhs(m);
    for (const auto& [i, v] : res) rhs[row_of[i]] = v;
    auto w = solve(aat, rhs);
    if (!w) return std::nullopt;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      Rational e = 0;
      for (const auto& [idx, v] : cols[s]) {
        if (v != 0) e += v * (*w)[row_of[idx]];
      }
      if (e == 0) continue;
      auto [a, b] = slots[s];
      y[a][b] += e;
      if (a != b) y[b][a] += e;
    }
    p = lift(y);
    if (!is_zero(residual_coordinates(oracle, k, l, p))) return std::nullopt;
  }
  if (!is_positive_semidefinite(y)) return std::nullopt;
  return p;
}

}  // namespace

Polynomial gram_residual(const QuotientOracle& oracle, int k, const Polynomial& l, const RationalMatrix& gram) {
  return oracle.from_coordinates(from_map(residual_coordinates(oracle, k, l, gram)));
}

Polynomial verify_sos_identity(const Polynomial& l, const std::vector<Polynomial>& squares,
                               const QuotientOracle& oracle) {
  Polynomial f = l;
  for (const auto& s : squares) f -= s * s;
  return oracle.normal_form(f);
}

std::vector<Polynomial> odd_cycle_squares(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd cycle length must be odd and at least 3");
  const std::size_t k = (n - 1) / 2;
  auto x = [n](std::size_t i) { return Polynomial::variable(n, i - 1); };
  const Polynomial one = Polynomial::constant(n, 1);
  std::vector<Polynomial> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back((one - x(1)) * (one - x(2 * i) - x(2 * i + 1)));
  for (std::size_t i = 1; i + 1 <= k; ++i) out.push_back(x(1) * (one - x(2 * i + 1) - x(2 * i + 2)));
  return out;
}

Certificate extract_certificate(const ThetaBodyProblem& p, const std::vector<double>& c, double lambda,
                                const SdpOptions& opts) {
  const auto& oracle = *p.oracle;
  const std::size_t n = p.nvars();
  const std::size_t d = p.tmpl->dim();
  Certificate cert;
  cert.linear_poly = Polynomial::constant(n, Rational(lambda));
  for (std::size_t v = 0; v < n; ++v) {
    if (c[v] != 0.0) cert.linear_poly -= Polynomial::variable(n, v) * Rational(c[v]);
  }

  auto lin = maximize_linear(p, c, opts);
  cert.optimum = lin.value;
  if (lin.status == SdpStatus::Unbounded) {
    cert.message = "c.x is unbounded over TH_k: no certificate exists";
    return cert;
  }
  if (lin.status != SdpStatus::Optimal) {
    cert.message = "solver did not reach optimality (" + std::string(to_string(lin.status)) + ")";
    return cert;
  }
  const double slack_tol = 1e-6 * (1.0 + std::abs(lin.value));
  if (lambda < lin.value - slack_tol) {
    cert.message = "lambda is below max c.x over TH_k, so lambda - c.x is not k-sos";
  }

  // Gram matrix of lambda_X - c.x; shift the constant slot up to lambda.
  Eigen::MatrixXd gram = lin.sdp.dual_matrix;
  const double lambda_x = lin.sdp.bound;
  gram(0, 0) += lambda - lambda_x;
  cert.gram_numeric = gram;

  std::optional<RationalMatrix> exact;
  // Small denominators first: they often land on the exact solution directly.
  for (unsigned long den : {100UL, 1000000UL}) {
    if (!exact) exact = round_on_face(oracle, p.k, cert.linear_poly, gram, {}, den);
  }
  if (!exact) {
    // Every Gram matrix of l annihilates f(v) at the variety points where l
    // vanishes; restricting to that face keeps rounding from leaving the cone.
    std::vector<RationalVector> kernel;
    for (const auto& v : oracle.sample_points()) {
      RationalVector pt;
      for (double x : v) pt.push_back(limit_denominator(x, 1000000UL));
      if (cert.linear_poly.evaluate(std::span<const Rational>(pt)) != 0) continue;
      RationalVector fv(d);
      for (std::size_t i = 0; i < d; ++i) {
        fv[i] = Polynomial::term(oracle.basis().elements[i], 1).evaluate(std::span<const Rational>(pt));
      }
      kernel.push_back(std::move(fv));
    }
    if (!kernel.empty()) {
      auto face = nullspace(kernel, d);
      for (unsigned long den : {100UL, 1000000UL}) {
        if (!exact && !face.empty()) exact = round_on_face(oracle, p.k, cert.linear_poly, gram, face, den);
      }
    }
  }
  std::map<std::size_t, Rational> res;
  bool zero = false;
  if (exact) {
    cert.gram = std::move(*exact);
    res = residual_coordinates(oracle, p.k, cert.linear_poly, cert.gram);
    zero = true;
  } else {
    cert.gram.assign(d, RationalVector(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        cert.gram[i][j] = cert.gram[j][i] = limit_denominator(0.5 * (gram(i, j) + gram(j, i)), 1000000UL);
      }
    }
    res = residual_coordinates(oracle, p.k, cert.linear_poly, cert.gram);
  }

  cert.residual = oracle.from_coordinates(from_map(res));
  if (zero) {
    cert.gram_psd = is_positive_semidefinite(cert.gram);
    if (cert.gram_psd) {
      cert.mode = CertificateMode::Exact;
      cert.verified = true;
      cert.max_residual = 0.0;
      cert.message.clear();
      return cert;
    }
  }

  // Numeric fallback on the unrounded Gram matrix.
  cert.mode = CertificateMode::Numeric;
  double worst = 0.0;
  {
    std::map<std::size_t, double> acc;
    for (const auto& [i, v] : oracle.coordinates(cert.linear_poly)) acc[i] += v.get_d();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        double w = i == j ? gram(i, i) : gram(i, j) + gram(j, i);
        for (const auto& [idx, v] : oracle.product(i, j)) acc[idx] -= w * v.get_d();
      }
    }
    for (const auto& [i, v] : acc) worst = std::max(worst, std::abs(v));
  }
  cert.max_residual = worst;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gram + gram.transpose()), Eigen::EigenvaluesOnly);
  cert.gram_psd = es.eigenvalues()(0) >= -1e-9;
  cert.verified = cert.gram_psd && worst <= 1e-6 && cert.message.empty();
  if (!cert.verified && cert.message.empty()) {
    cert.message = "residual " + std::to_string(worst) + (cert.gram_psd ? "" : ", Gram matrix not PSD");
  }
  return cert;
}

}  // namespace theta

#include "cli.hpp"

#include "theta/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace theta::cli {

namespace {

struct Flags {
  std::string file;
  int k = 0;  // 0: take the file's level
  std::vector<double> objective;
  SdpOptions sdp;
  std::size_t jobs = 0;
  bool json = false;
  // trace
  std::size_t dirs = 720;
  std::size_t contour = 0;
  std::string csv, svg;
  // exactness
  FacetCaps caps;
  // certify
  std::vector<double> c;
  std::optional<double> lambda;
  std::optional<std::size_t> facet;
  bool odd_cycle = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << key << value << '\n';
}

std::string join(const std::vector<double>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_number(v[i]);
  return s + ")";
}

int cmd_solve(const ProblemFile& pf, const Flags& fl, std::ostream& out) {
  const int k = fl.k ? fl.k : pf.k;
  auto problem = build_problem(pf, k);
  std::vector<double> c = fl.objective.empty() ? problem_objective(pf) : fl.objective;
  if (c.size() != problem.nvars()) throw InputError("objective needs " + std::to_string(problem.nvars()) + " entries");
  LinearResult r = maximize_linear(problem, c, fl.sdp);
  nlohmann::json report = solve_report(pf, k, c, r);
  if (pf.kind == ProblemKind::MaxCut && !fl.objective.empty()) report.erase("cut_bound");
  if (fl.json) {
    out << report.dump(2) << '\n';
  } else {
    row(out, "problem", std::string(to_string(pf.kind)) + (pf.name.empty() ? "" : " " + pf.name));
    row(out, "level k", std::to_string(k));
    row(out, "status", std::string(to_string(r.status)));
    row(out, "value", format_number(r.value));
    if (report.contains("cut_bound")) row(out, "cut bound", format_number(report["cut_bound"].get<double>()));
    if (!r.optimizer.empty()) row(out, "optimizer", join(r.optimizer));
    row(out, "iterations", std::to_string(r.sdp.iterations));
    row(out, "gap", format_number(r.sdp.gap));
    row(out, "primal residual", format_number(r.sdp.primal_residual));
    row(out, "dual residual", format_number(r.sdp.dual_residual));
  }
  return r.status == SdpStatus::NumericalTrouble ? kNumericalFailure : kOk;
}

int cmd_trace(const ProblemFile& pf, const Flags& fl, std::ostream& out) {
  const int k = fl.k ? fl.k : pf.k;
  auto problem = build_problem(pf, k);
  if (problem.nvars() != 2) throw InputError("trace needs a problem in 2 variables");
  std::vector<BoundaryPoint> trace;
  std::vector<SupportLine> lines;
  if (fl.contour > 0) {
    std::vector<std::vector<double>> dirs;
    for (std::size_t j = 0; j < fl.contour; ++j) {
      double th = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(fl.contour);
      dirs.push_back({std::cos(th), std::sin(th)});
    }
    lines = support_contour(problem, dirs, fl.sdp, fl.jobs);
  } else {
    trace = trace_boundary_2d(problem, fl.dirs, fl.sdp, fl.jobs);
  }
  const std::string csv = fl.contour > 0 ? contour_csv(lines) : trace_csv(trace);
  if (!fl.csv.empty()) write_file(fl.csv, csv);
  if (!fl.svg.empty()) {
    std::vector<std::vector<double>> variety;
    if (pf.kind == ProblemKind::Curve) variety = problem.samples;
    write_file(fl.svg, render_svg(trace, lines, variety));
  }
  if (fl.csv.empty() && fl.svg.empty()) out << csv;

  std::size_t finite = 0, unbounded = 0, trouble = 0;
  for (const auto& b : trace) {
    b.ray.unbounded ? ++unbounded : b.ray.status == SdpStatus::Optimal ? ++finite : ++trouble;
  }
  for (const auto& l : lines) {
    l.unbounded ? ++unbounded : l.status == SdpStatus::Optimal ? ++finite : ++trouble;
  }
  if (!fl.csv.empty() || !fl.svg.empty()) {
    row(out, fl.contour > 0 ? "support lines" : "directions", std::to_string(trace.size() + lines.size()));
    row(out, "finite", std::to_string(finite));
    row(out, "unbounded", std::to_string(unbounded));
    row(out, "failed", std::to_string(trouble));
  }
  return trouble ? kNumericalFailure : kOk;
}

int cmd_exactness(const ProblemFile& pf, const Flags& fl, std::ostream& out) {
  if (pf.kind == ProblemKind::Curve) throw InputError("exactness needs a finite point set (points, stable_set, maxcut, permutation)");
  PointSet pts = problem_points(pf);
  LevelReport r;
  try {
    r = level_report(pts, fl.caps);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(e.what()) + " (caps: max_dim " + std::to_string(fl.caps.max_dim) + ", max_points " +
                     std::to_string(fl.caps.max_points) + ")");
  }
  auto j = level_report_json(r);
  j["points"] = pts.size();
  if (fl.json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  row(out, "points", std::to_string(pts.size()));
  row(out, "affine dimension", std::to_string(r.hull.dim) + " of " + std::to_string(r.hull.ambient_dim));
  row(out, "facets", std::to_string(r.facets.size()));
  for (std::size_t i = 0; i < r.facets.size(); ++i) {
    const auto& f = r.facets[i];
    Polynomial l = Polynomial::constant(f.normal.size(), f.offset);
    for (std::size_t v = 0; v < f.normal.size(); ++v) l -= f.normal[v] * Polynomial::variable(f.normal.size(), v);
    out << "  [" << i << "] " << l.to_string() << " >= 0, levels " << r.levels[i] << '\n';
  }
  row(out, "overall level", std::to_string(r.overall_level));
  row(out, "2-level", r.is_2_level ? "yes" : "no");
  row(out, "TH_k exact for k", ">= " + std::to_string(r.th_k_bound));
  return kOk;
}

int cmd_odd_cycle(const ProblemFile& pf, const Flags& fl, std::ostream& out) {
  if (pf.kind != ProblemKind::StableSet) throw InputError("--odd-cycle needs a stable_set problem");
  const Graph& g = *pf.graph;
  const std::size_t n = g.vertex_count();
  bool cycle = n >= 3 && n % 2 == 1 && g.edges().size() == n;
  for (std::size_t i = 0; cycle && i < n; ++i) cycle = g.adjacent(i, (i + 1) % n);
  if (!cycle) throw InputError("--odd-cycle needs the odd cycle 1-2-...-n-1");
  auto oracle = build_oracle(pf, 2);
  Polynomial l = Polynomial::constant(n, Rational(static_cast<long>((n - 1) / 2)));
  for (std::size_t i = 0; i < n; ++i) l -= Polynomial::variable(n, i);
  auto squares = odd_cycle_squares(n);
  Polynomial residual = verify_sos_identity(l, squares, *oracle);
  nlohmann::json j;
  j["inequality"] = l.to_string() + " >= 0";
  j["k"] = 2;
  j["mode"] = "exact";
  nlohmann::json sq = nlohmann::json::array();
  for (const auto& s : squares) sq.push_back(s.to_string());
  j["squares"] = sq;
  j["residual"] = residual.to_string();
  j["verified"] = residual.is_zero();
  if (fl.json) {
    out << j.dump(2) << '\n';
  } else {
    row(out, "inequality", l.to_string() + " >= 0");
    row(out, "squares", std::to_string(squares.size()));
    for (const auto& s : squares) out << "  (" << s.to_string() << ")^2\n";
    row(out, "residual", residual.is_zero() ? "0" : residual.to_string());
    row(out, "verdict", residual.is_zero() ? "verified (exact)" : "FAILED");
  }
  return residual.is_zero() ? kOk : kVerificationFailure;
}

int cmd_certify(const ProblemFile& pf, const Flags& fl, std::ostream& out) {
  if (fl.odd_cycle) return cmd_odd_cycle(pf, fl, out);
  const int k = fl.k ? fl.k : pf.k;
  std::vector<double> c = fl.c;
  std::optional<double> lambda = fl.lambda;
  if (fl.facet) {
    if (!c.empty()) throw InputError("give either --facet or --c, not both");
    auto facets = enumerate_facets(problem_points(pf));
    if (*fl.facet >= facets.size()) {
      throw InputError("facet index out of range (" + std::to_string(facets.size()) + " facets)");
    }
    const auto& f = facets[*fl.facet];
    for (const auto& v : f.normal) c.push_back(v.get_d());
    lambda = f.offset.get_d();
  }
  auto problem = build_problem(pf, k);
  if (c.empty()) c = problem_objective(pf);
  if (c.size() != problem.nvars()) throw InputError("--c needs " + std::to_string(problem.nvars()) + " entries");
  if (!lambda) {
    LinearResult lin = maximize_linear(problem, c, fl.sdp);
    if (lin.status != SdpStatus::Optimal) {
      out << "no finite bound: " << to_string(lin.status) << '\n';
      return lin.status == SdpStatus::Unbounded ? kVerificationFailure : kNumericalFailure;
    }
    lambda = lin.value;
    // SDP optima are often small rationals up to solver noise
    double snapped = limit_denominator(*lambda, 1000).get_d();
    if (snapped - *lambda >= -1e-9 && snapped - *lambda <= 1e-7 * std::max(1.0, std::abs(*lambda))) lambda = snapped;
  }
  Certificate cert = extract_certificate(problem, c, *lambda, fl.sdp);
  if (fl.json) {
    out << certificate_json(cert, problem).dump(2) << '\n';
  } else {
    row(out, "inequality", cert.linear_poly.to_string() + " >= 0");
    row(out, "level k", std::to_string(k));
    row(out, "max c.x on TH_k", format_number(cert.optimum));
    row(out, "mode", std::string(to_string(cert.mode)));
    row(out, "Gram PSD", cert.gram_psd ? "yes" : "no");
    row(out, "max residual", format_number(cert.max_residual));
    bool short_entries = cert.gram.size() <= 12;
    for (const auto& r : cert.gram) {
      for (const auto& q : r) short_entries = short_entries && to_string(q).size() <= 9;
    }
    if (cert.mode == CertificateMode::Exact && short_entries) {
      out << "Gram matrix:\n";
      for (const auto& r : cert.gram) {
        out << ' ';
        for (const auto& q : r) out << ' ' << std::setw(10) << to_string(q);
        out << '\n';
      }
    }
    row(out, "verdict", cert.verified ? "verified" : "FAILED");
    if (!cert.message.empty()) row(out, "note", cert.message);
  }
  return cert.verified ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta bodies of polynomial ideals", "theta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key = value file with defaults for the options below");
  Flags fl;
  app.add_option("--k", fl.k, "theta body level (default: the file's)")->check(CLI::PositiveNumber);
  app.add_option("--objective", fl.objective, "objective vector c for max c.x")->delimiter(',');
  app.add_option("--gap-tol", fl.sdp.gap_tol, "relative duality gap tolerance");
  app.add_option("--feas-tol", fl.sdp.feas_tol, "relative feasibility tolerance");
  app.add_option("--max-iter", fl.sdp.max_iter, "interior point iteration cap");
  app.add_option("--unbounded-cap", fl.sdp.unbounded_cap, "objective magnitude treated as unbounded");
  app.add_option("--jobs", fl.jobs, "worker threads for sweeps (0: logical cores)");
  app.add_flag("--json", fl.json, "print JSON instead of a table");

  auto* solve = app.add_subcommand("solve", "maximize c.x over TH_k");
  auto* trace = app.add_subcommand("trace", "trace the boundary of a 2-variable theta body");
  auto* exact = app.add_subcommand("exactness", "facets, levels and TH_1 exactness of a finite point set");
  auto* certify = app.add_subcommand("certify", "extract and verify a k-sos certificate for lambda - c.x");
  for (auto* sub : {solve, trace, exact, certify}) sub->add_option("file", fl.file, "problem file (JSON)")->required();
  trace->add_option("--dirs", fl.dirs, "number of ray directions")->check(CLI::PositiveNumber);
  trace->add_option("--contour", fl.contour, "solve N support lines instead of rays");
  trace->add_option("--csv", fl.csv, "CSV output path");
  trace->add_option("--svg", fl.svg, "SVG output path");
  exact->add_option("--max-dim", fl.caps.max_dim, "facet enumeration dimension cap");
  exact->add_option("--max-points", fl.caps.max_points, "facet enumeration point cap");
  certify->add_option("--c", fl.c, "linear form c")->delimiter(',');
  certify->add_option("--lambda", fl.lambda, "right-hand side (default: max c.x over TH_k)");
  certify->add_option("--facet", fl.facet, "certify facet i of conv(S), as listed by exactness");
  certify->add_flag("--odd-cycle", fl.odd_cycle, "check the explicit 2-sos identity for the odd cycle");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    ProblemFile pf = load_problem_file(fl.file);
    if (solve->parsed()) return cmd_solve(pf, fl, out);
    if (trace->parsed()) return cmd_trace(pf, fl, out);
    if (exact->parsed()) return cmd_exactness(pf, fl, out);
    return cmd_certify(pf, fl, out);
  } catch (const ProblemError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace theta::cli

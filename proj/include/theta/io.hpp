#pragma once

// Problem files (JSON) and report emitters (JSON, CSV, SVG).

#include "theta/exactness.hpp"
#include "theta/thetaops.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta {

/// Schema or content error in a problem file.
class ProblemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ProblemKind { StableSet, MaxCut, Points, Curve, Permutation };
std::string_view to_string(ProblemKind kind);

struct ProblemFile {
  ProblemKind kind = ProblemKind::Points;
  std::string name;
  int k = 1;
  std::optional<Graph> graph;                  // stable_set, maxcut
  std::vector<RationalPoint> points;           // points
  MonomialOrder order = MonomialOrder::GrevLex;
  std::optional<Polynomial> polynomial;        // curve
  std::size_t perm_n = 0;                      // permutation
  std::vector<Permutation> generators;         // permutation
  std::optional<std::vector<double>> objective;
  std::size_t sample_lines = 360;              // curve sampling
  std::size_t max_edges = 16;                  // cut ideal T-join cap
  std::size_t max_order = 5040;                // permutation group cap
};

/// Throws ProblemError with a description of the first schema violation.
ProblemFile parse_problem_file(const std::string& text);
ProblemFile load_problem_file(const std::string& path);
nlohmann::json to_json(const ProblemFile& p);

std::size_t problem_nvars(const ProblemFile& p);
OraclePtr build_oracle(const ProblemFile& p, int k);
ThetaBodyProblem build_problem(const ProblemFile& p, int k);
/// The finite point set behind a problem (points, stable_set, maxcut, permutation).
PointSet problem_points(const ProblemFile& p);
/// Default objective: the file's, else all ones (maxcut: -1 per edge).
std::vector<double> problem_objective(const ProblemFile& p);

/// Number with 9 significant digits; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);
nlohmann::json number_json(double v);

nlohmann::json solve_report(const ProblemFile& p, int k, const std::vector<double>& c, const LinearResult& r);
nlohmann::json level_report_json(const LevelReport& r);
nlohmann::json certificate_json(const Certificate& c, const ThetaBodyProblem& p);

std::string trace_csv(const std::vector<BoundaryPoint>& pts);
std::string contour_csv(const std::vector<SupportLine>& lines);

/// Hand-written SVG: traced boundary as a polyline, support lines as
/// segments clipped to the view, sampled variety as a polygon.
std::string render_svg(const std::vector<BoundaryPoint>& trace, const std::vector<SupportLine>& contour,
                       const std::vector<std::vector<double>>& variety);

}  // namespace theta

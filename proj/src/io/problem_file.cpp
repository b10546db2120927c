#include "theta/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace theta {

using nlohmann::json;

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::StableSet: return "stable_set";
    case ProblemKind::MaxCut: return "maxcut";
    case ProblemKind::Points: return "points";
    case ProblemKind::Curve: return "curve";
    case ProblemKind::Permutation: return "permutation";
  }
  return "unknown";
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ProblemError(msg); }

ProblemKind parse_kind(const std::string& s) {
  if (s == "stable_set") return ProblemKind::StableSet;
  if (s == "maxcut") return ProblemKind::MaxCut;
  if (s == "points") return ProblemKind::Points;
  if (s == "curve") return ProblemKind::Curve;
  if (s == "permutation") return ProblemKind::Permutation;
  fail("unknown kind '" + s + "' (expected stable_set, maxcut, points, curve or permutation)");
}

Rational parse_rational_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(where + ": " + e.what());
    }
  }
  fail(where + ": expected an integer or a \"p/q\" string");
}

std::size_t parse_count(const json& v, const std::string& where, std::size_t min) {
  if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min)) {
    fail(where + ": expected an integer >= " + std::to_string(min));
  }
  return v.get<std::size_t>();
}

Graph parse_graph(const json& g) {
  if (!g.is_object() || !g.contains("n") || !g.contains("edges")) fail("graph: expected {\"n\": int, \"edges\": [[u,v],...]}");
  for (auto it = g.begin(); it != g.end(); ++it) {
    if (it.key() != "n" && it.key() != "edges") fail("graph: unknown key '" + it.key() + "'");
  }
  std::size_t n = parse_count(g["n"], "graph.n", 1);
  if (!g["edges"].is_array()) fail("graph.edges: expected an array");
  std::vector<Graph::Edge> edges;
  for (const auto& e : g["edges"]) {
    if (!e.is_array() || e.size() != 2) fail("graph.edges: each edge must be [u, v]");
    std::size_t u = parse_count(e[0], "graph.edges", 1), v = parse_count(e[1], "graph.edges", 1);
    if (u > n || v > n) fail("graph.edges: vertex out of range 1.." + std::to_string(n));
    edges.emplace_back(u - 1, v - 1);
  }
  try {
    return Graph(n, edges);
  } catch (const std::exception& e) {
    fail(std::string("graph: ") + e.what());
  }
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("problem file must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail("missing string field 'kind'");
  ProblemFile p;
  p.kind = parse_kind(j["kind"].get<std::string>());

  std::set<std::string> allowed{"kind", "name", "k", "objective"};
  switch (p.kind) {
    case ProblemKind::StableSet: allowed.insert("graph"); break;
    case ProblemKind::MaxCut: allowed.insert({"graph", "max_edges"}); break;
    case ProblemKind::Points: allowed.insert({"points", "order"}); break;
    case ProblemKind::Curve: allowed.insert({"polynomial", "order", "samples"}); break;
    case ProblemKind::Permutation: allowed.insert({"n", "generators", "order", "max_order"}); break;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) fail("unknown key '" + it.key() + "' for kind " + std::string(to_string(p.kind)));
  }

  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name: expected a string");
    p.name = j["name"].get<std::string>();
  }
  if (j.contains("k")) p.k = static_cast<int>(parse_count(j["k"], "k", 1));
  if (j.contains("order")) {
    if (!j["order"].is_string()) fail("order: expected a string");
    try {
      p.order = parse_monomial_order(j["order"].get<std::string>());
    } catch (const std::exception& e) {
      fail(std::string("order: ") + e.what());
    }
  }

  switch (p.kind) {
    case ProblemKind::StableSet:
    case ProblemKind::MaxCut:
      if (!j.contains("graph")) fail("missing field 'graph'");
      p.graph = parse_graph(j["graph"]);
      if (p.kind == ProblemKind::MaxCut && p.graph->edges().empty()) fail("maxcut: graph has no edges");
      if (j.contains("max_edges")) p.max_edges = parse_count(j["max_edges"], "max_edges", 1);
      break;
    case ProblemKind::Points: {
      if (!j.contains("points") || !j["points"].is_array() || j["points"].empty()) fail("points: expected a nonempty array");
      for (const auto& row : j["points"]) {
        if (!row.is_array() || row.empty()) fail("points: each point must be a nonempty array");
        RationalPoint pt;
        for (const auto& v : row) pt.push_back(parse_rational_json(v, "points"));
        if (!p.points.empty() && pt.size() != p.points.front().size()) fail("points: all points need the same dimension");
        p.points.push_back(std::move(pt));
      }
      std::set<RationalPoint> seen(p.points.begin(), p.points.end());
      if (seen.size() != p.points.size()) fail("points: duplicate points");
      break;
    }
    case ProblemKind::Curve:
      if (!j.contains("polynomial") || !j["polynomial"].is_string()) fail("curve: missing string field 'polynomial'");
      try {
        p.polynomial = parse_polynomial(j["polynomial"].get<std::string>(), 2);
      } catch (const std::exception& e) {
        fail(std::string("polynomial: ") + e.what());
      }
      if (p.polynomial->degree() < 1) fail("polynomial: must be nonconstant");
      if (j.contains("samples")) p.sample_lines = parse_count(j["samples"], "samples", 1);
      break;
    case ProblemKind::Permutation:
      if (!j.contains("n")) fail("permutation: missing field 'n'");
      p.perm_n = parse_count(j["n"], "n", 1);
      if (!j.contains("generators") || !j["generators"].is_array()) fail("permutation: 'generators' must be an array");
      for (const auto& g : j["generators"]) {
        if (!g.is_array() || g.size() != p.perm_n) fail("generators: each generator must list n images");
        Permutation perm;
        for (const auto& v : g) perm.push_back(parse_count(v, "generators", 1));
        p.generators.push_back(std::move(perm));
      }
      if (j.contains("max_order")) p.max_order = parse_count(j["max_order"], "max_order", 1);
      break;
  }

  if (j.contains("objective")) {
    if (!j["objective"].is_array()) fail("objective: expected an array of numbers");
    std::vector<double> c;
    for (const auto& v : j["objective"]) {
      if (!v.is_number()) fail("objective: expected numbers");
      c.push_back(v.get<double>());
    }
    if (c.size() != problem_nvars(p)) {
      fail("objective: expected " + std::to_string(problem_nvars(p)) + " entries, got " + std::to_string(c.size()));
    }
    p.objective = std::move(c);
  }
  return p;
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_file(ss.str());
}

json to_json(const ProblemFile& p) {
  json j;
  j["kind"] = std::string(to_string(p.kind));
  if (!p.name.empty()) j["name"] = p.name;
  j["k"] = p.k;
  if (p.graph) {
    json edges = json::array();
    for (auto [u, v] : p.graph->edges()) edges.push_back({u + 1, v + 1});
    j["graph"] = {{"n", p.graph->vertex_count()}, {"edges", edges}};
  }
  switch (p.kind) {
    case ProblemKind::MaxCut: j["max_edges"] = p.max_edges; break;
    case ProblemKind::Points: {
      json pts = json::array();
      for (const auto& pt : p.points) {
        json row = json::array();
        for (const auto& v : pt) row.push_back(to_string(v));
        pts.push_back(row);
      }
      j["points"] = pts;
      j["order"] = std::string(to_string(p.order));
      break;
    }
    case ProblemKind::Curve:
      j["polynomial"] = p.polynomial->to_string();
      j["order"] = std::string(to_string(p.order));
      j["samples"] = p.sample_lines;
      break;
    case ProblemKind::Permutation:
      j["n"] = p.perm_n;
      j["generators"] = p.generators;
      j["order"] = std::string(to_string(p.order));
      j["max_order"] = p.max_order;
      break;
    case ProblemKind::StableSet: break;
  }
  if (p.objective) j["objective"] = *p.objective;
  return j;
}

std::size_t problem_nvars(const ProblemFile& p) {
  switch (p.kind) {
    case ProblemKind::StableSet: return p.graph->vertex_count();
    case ProblemKind::MaxCut: return p.graph->edges().size();
    case ProblemKind::Points: return p.points.front().size();
    case ProblemKind::Curve: return 2;
    case ProblemKind::Permutation: return p.perm_n * p.perm_n;
  }
  return 0;
}

PointSet problem_points(const ProblemFile& p) {
  switch (p.kind) {
    case ProblemKind::StableSet: return stable_set_points(*p.graph);
    case ProblemKind::MaxCut: return cut_points(*p.graph);
    case ProblemKind::Points: return p.points;
    case ProblemKind::Permutation:
      try {
        return permutation_points(p.perm_n, p.generators, p.max_order);
      } catch (const std::invalid_argument& e) {
        throw ProblemError(e.what());
      }
    case ProblemKind::Curve: break;
  }
  throw ProblemError("kind " + std::string(to_string(p.kind)) + " has no finite point set");
}

OraclePtr build_oracle(const ProblemFile& p, int k) {
  try {
    switch (p.kind) {
      case ProblemKind::StableSet: return basis_stable_set(*p.graph, k);
      case ProblemKind::MaxCut: return basis_cut_ideal(*p.graph, k, p.max_edges);
      case ProblemKind::Points: return basis_points(p.points, p.order);
      case ProblemKind::Permutation: return basis_points(problem_points(p), p.order);
      case ProblemKind::Curve: return basis_principal(*p.polynomial, p.order, k);
    }
  } catch (const ProblemError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ProblemError(e.what());
  }
  throw ProblemError("unsupported kind");
}

ThetaBodyProblem build_problem(const ProblemFile& p, int k) {
  auto oracle = build_oracle(p, k);
  if (!oracle->supports_level(k)) throw ProblemError("level k exceeds the constructed basis depth");
  if (p.kind == ProblemKind::Curve) return make_problem(oracle, k, sample_plane_curve(*p.polynomial, p.sample_lines));
  return make_problem(oracle, k);
}

std::vector<double> problem_objective(const ProblemFile& p) {
  if (p.objective) return *p.objective;
  if (p.kind == ProblemKind::MaxCut) return std::vector<double>(problem_nvars(p), -1.0);
  return std::vector<double>(problem_nvars(p), 1.0);
}

}  // namespace theta

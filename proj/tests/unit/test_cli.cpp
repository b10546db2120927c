#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run theta_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "theta");
  std::ostringstream out, err;
  int code = theta::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string problem(const std::string& name) { return std::string(PROBLEMS_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "theta_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("solve") {
  auto r = theta_cli({"solve", problem("pentagon.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.23606798") != std::string::npos);

  r = theta_cli({"solve", problem("pentagon.json"), "--k", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "optimal");
  CHECK(j["k"] == 2);
  CHECK(j["value"].get<double>() == doctest::Approx(2).epsilon(1e-7));

  j = json::parse(theta_cli({"solve", problem("c5_maxcut.json"), "--json"}).out);
  CHECK(j["cut_bound"].get<double>() == doctest::Approx(4).epsilon(1e-6));
  j = json::parse(theta_cli({"solve", problem("c5_maxcut.json"), "--k", "1", "--json"}).out);
  CHECK(j["cut_bound"].get<double>() > 4.001);
  j = json::parse(theta_cli({"solve", problem("k3_maxcut.json"), "--json"}).out);
  CHECK(j["cut_bound"].get<double>() == doctest::Approx(2).epsilon(1e-6));

  j = json::parse(theta_cli({"solve", problem("pentagon.json"), "--objective", "1,0,0,0,0", "--json"}).out);
  CHECK(j["value"].get<double>() == doctest::Approx(1).epsilon(1e-7));
}

TEST_CASE("config file") {
  auto cfg = write("theta.toml", "k = 2\n");
  auto j = json::parse(theta_cli({"--config", cfg, "solve", problem("pentagon.json"), "--json"}).out);
  CHECK(j["k"] == 2);
}

TEST_CASE("exactness") {
  auto r = theta_cli({"exactness", problem("cube.json"), "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["is_2_level"] == true);
  CHECK(j["facets"].size() == 6);

  j = json::parse(theta_cli({"exactness", problem("pentagon.json"), "--json"}).out);
  CHECK(j["is_2_level"] == false);
  CHECK(j["th_k_bound"] == 2);
  CHECK(j["facets"].size() == 11);

  j = json::parse(theta_cli({"exactness", problem("s3.json"), "--json"}).out);
  CHECK(j["affine_dim"] == 4);
  CHECK(j["is_2_level"] == true);

  CHECK(theta_cli({"exactness", problem("cube.json"), "--max-points", "4"}).code == 2);
  CHECK(theta_cli({"exactness", problem("cardioid.json")}).code == 2);
}

TEST_CASE("certify") {
  auto rep = json::parse(theta_cli({"exactness", problem("pentagon.json"), "--json"}).out);
  int sum_facet = -1, edge_facet = -1;
  for (std::size_t i = 0; i < rep["facets"].size(); ++i) {
    auto n = rep["facets"][i]["normal"];
    int ones = 0, zeros = 0;
    for (const auto& v : n) {
      ones += v == "1" || v == 1;
      zeros += v == "0" || v == 0;
    }
    if (ones == 5) sum_facet = static_cast<int>(i);
    if (ones == 2 && zeros == 3 && (n[0] == "1" || n[0] == 1) && (n[1] == "1" || n[1] == 1)) edge_facet = static_cast<int>(i);
  }
  REQUIRE(sum_facet >= 0);
  REQUIRE(edge_facet >= 0);

  auto r = theta_cli({"certify", problem("pentagon.json"), "--k", "2", "--facet", std::to_string(sum_facet), "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["mode"] == "exact");
  CHECK(j["verified"] == true);

  r = theta_cli({"certify", problem("pentagon.json"), "--facet", std::to_string(edge_facet)});
  CHECK(r.code == 0);
  CHECK(r.out.find("exact") != std::string::npos);

  CHECK(theta_cli({"certify", problem("pentagon.json"), "--lambda", "2"}).code == 4);
  CHECK(theta_cli({"certify", problem("pentagon.json"), "--odd-cycle"}).code == 0);
  CHECK(theta_cli({"certify", problem("cardioid.json"), "--c", "1,0"}).code == 0);
  CHECK(theta_cli({"certify", problem("cardioid.json"), "--c", "1,0", "--k", "1"}).code == 4);
  CHECK(theta_cli({"certify", problem("cube.json"), "--odd-cycle"}).code == 2);
}

TEST_CASE("trace outputs") {
  auto csv = scratch("card.csv"), svg1 = scratch("a.svg"), svg2 = scratch("b.svg");
  auto r = theta_cli({"trace", problem("cardioid.json"), "--dirs", "16", "--csv", csv.string(), "--svg", svg1.string()});
  REQUIRE(r.code == 0);
  auto text = slurp(csv);
  CHECK(text.rfind("theta,t,x,y\n", 0) == 0);
  CHECK(count_lines(text) == 17);
  CHECK(text.find("inf") == std::string::npos);
  CHECK(theta_cli({"trace", problem("cardioid.json"), "--dirs", "16", "--svg", svg2.string(), "--jobs", "2"}).code == 0);
  CHECK(slurp(svg1) == slurp(svg2));
  CHECK(slurp(svg1).find("<svg") != std::string::npos);

  r = theta_cli({"trace", problem("cardioid.json"), "--dirs", "8", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 9);
  CHECK(r.out.find("inf") != std::string::npos);

  r = theta_cli({"trace", problem("cardioid.json"), "--contour", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("c1,c2,lambda,status\n", 0) == 0);
  CHECK(count_lines(r.out) == 9);

  CHECK(theta_cli({"trace", problem("pentagon.json")}).code == 2);
}

TEST_CASE("errors") {
  CHECK(theta_cli({}).code == 2);
  CHECK(theta_cli({"solve"}).code == 2);
  CHECK(theta_cli({"frobnicate", problem("pentagon.json")}).code == 2);
  CHECK(theta_cli({"--help"}).code == 0);
  CHECK(theta_cli({"solve", problem("missing.json")}).code == 2);
  CHECK(theta_cli({"solve", write("bad.json", "{not json")}).code == 2);
  CHECK(theta_cli({"solve", write("key.json", R"({"kind":"stable_set","n":3,"edges":[[1,2]],"bogus":1})")}).code == 2);
  CHECK(theta_cli({"solve", write("edge.json", R"({"kind":"stable_set","n":3,"edges":[[1,4]]})")}).code == 2);
  CHECK(theta_cli({"solve", write("dup.json", R"({"kind":"points","points":[[0,0],[0,0]]})")}).code == 2);
  CHECK(theta_cli({"solve", problem("pentagon.json"), "--objective", "1,2"}).code == 2);
  CHECK(theta_cli({"solve", problem("pentagon.json"), "--k", "0"}).code == 2);
  CHECK(theta_cli({"solve", problem("pentagon.json"), "--k", "2", "--max-iter", "2"}).code == 3);
  auto r = theta_cli({"solve", write("poly.json", R"({"kind":"curve","polynomial":"x1^2 + y"})")});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopt/baselines.hpp"
#include "hopt/corpus.hpp"
#include "hopt/problem_io.hpp"
#include "hopt/trace_io.hpp"
#include "hopt/triangle.hpp"

using namespace hopt;
using nlohmann::json;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hopt_test_" + name);
}

}  // namespace

TEST_CASE("empty run trace") {
  const CorpusEntry& e = corpus_entry("quartic");
  SolveOptions opt;
  opt.iterations = 0;
  const json j = to_json(solve(e.oracle, e.square, 1e-3, opt));
  CHECK(j["trace"]["executed_iterations"] == 0);
  CHECK(j["trace"]["iterations"].empty());
  CHECK(j["trace"]["final_region"] == j["trace"]["initial_region"]);
}

TEST_CASE("three-iteration trace logs halving sides") {
  const CorpusEntry& e = corpus_entry("quartic");
  SolveOptions opt;
  opt.iterations = 3;
  opt.small_gradient_stop = false;
  const json j = to_json(solve(e.oracle, e.square, 1e-3, opt));
  const auto& its = j["trace"]["iterations"];
  REQUIRE(its.size() == 3);
  const double R = e.square.width();
  for (int i = 0; i < 3; ++i) {
    const Region r = region_from_json(its[i]["region"]);
    CHECK(std::get<AxisBox>(r).width() == R / (1 << i));
    CHECK(its[i]["cuts"].size() == 2);
    CHECK(its[i]["cuts"][0]["cut_axis"] == "horizontal");
    CHECK(its[i]["cuts"][1]["cut_axis"] == "vertical");
  }
}

TEST_CASE("regions round-trip through JSON") {
  const RightTriangle t = RightTriangle::make({0.1, -0.7}, 1.0 / 3.0, {-1, 1});
  for (const Region& r : {Region{AxisBox::make({1.0 / 7, 2.0 / 3}, 0.1, 0.3)}, Region{t}, Region{Trapezoid{t}}}) {
    const json j = json::parse(to_json(r).dump());
    CHECK(region_from_json(j) == r);
  }
  CHECK_THROWS(region_from_json(json{{"kind", "hexagon"}}));
}

TEST_CASE("trace JSON numbers are lossless") {
  const CorpusEntry& e = corpus_entry("exp-sum");
  const Solution s = solve(e.oracle, e.square, 1e-5);
  const json j = json::parse(to_json(s).dump(2));
  CHECK(j["value"].get<double>() == s.value);
  CHECK(j["point"][0].get<double>() == s.point.x1);
  CHECK(j["trace"]["delta_horizontal"].get<double>() == s.trace.delta_horizontal);
  const auto& cut = s.trace.iterations[0].cuts[0];
  CHECK(j["trace"]["iterations"][0]["cuts"][0]["x_delta"][0].get<double>() == cut.x_delta.x1);
  CHECK(j["trace"]["counters"]["value_calls"].get<std::uint64_t>() == s.trace.counters.value_calls);
  CHECK(region_from_json(j["trace"]["final_region"]) == s.trace.final_region);
}

TEST_CASE("non-finite numbers become null") {
  const CorpusEntry& e = corpus_entry("plane");  // M = 0: midpoint line searches
  const json j = to_json(solve(e.oracle, e.square, 1e-3));
  CHECK(j["trace"]["delta_horizontal"].is_null());
  CHECK(j["trace"]["iterations"][0]["cuts"][0]["delta"].is_null());
}

TEST_CASE("triangle trace carries the region kind") {
  const Solution s = solve_triangle(corpus_entry("plane").oracle, RightTriangle::make({0, 0}, 1.0), 1e-3);
  const json j = to_json(s);
  CHECK(j["trace"]["initial_region"]["kind"] == "triangle");
  bool trapezoid = false;
  for (const auto& it : j["trace"]["iterations"])
    for (const auto& c : it["cuts"])
      if (!c["kept"].is_null() && c["kept"]["kind"] == "trapezoid") trapezoid = true;
  CHECK(trapezoid);
}

TEST_CASE("summary rows round-trip through CSV") {
  SummaryRow r{"halving", "exp-sum", 1.0 / 3.0, 17, 123456789012ULL, 34, 0, 0.1 + 0.2, -1e-300};
  CHECK(summary_from_csv(to_csv(r)) == r);
  SummaryRow nan_gap = r;
  nan_gap.final_gap = std::nan("");
  const SummaryRow back = summary_from_csv(to_csv(nan_gap));
  CHECK(std::isnan(back.final_gap));
  CHECK_THROWS(summary_from_csv("halving,exp-sum,1"));
  CHECK_THROWS(summary_from_csv("halving,exp-sum,x,1,2,3,4,5,6"));
}

TEST_CASE("comparison rows re-parse to the counter totals") {
  const CorpusEntry& e = corpus_entry("quartic");
  std::vector<Solution> runs;
  runs.push_back(solve(e.oracle, e.square, 5e-3));
  BaselineOptions known;
  known.f_star = e.f_star;
  runs.push_back(ellipsoid_solve(e.oracle, e.square, 5e-3, known));
  runs.push_back(gradient_descent_solve(e.oracle, e.square, 5e-3, known));

  const auto path = temp_path("compare.csv");
  std::filesystem::remove(path);
  std::uint64_t values = 0, directions = 0, grads = 0;
  for (const auto& s : runs) {
    append_summary_csv(path.string(), summarize(s, e.f_star));
    values += s.trace.counters.value_calls;
    directions += s.trace.counters.direction_calls;
    grads += s.trace.counters.full_grad_calls;
  }
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kSummaryHeader);
  in.seekg(0);
  const auto rows = read_summary_csv(in);
  REQUIRE(rows.size() == 3);
  std::uint64_t v = 0, d = 0, g = 0;
  for (const auto& r : rows) v += r.value_calls, d += r.direction_calls, g += r.full_grad_calls;
  CHECK(v == values);
  CHECK(d == directions);
  CHECK(g == grads);
  CHECK(rows[0].full_grad_calls == 0);
  for (const auto& r : rows) CHECK(r.final_gap <= 5e-3);
  std::filesystem::remove(path);
}

TEST_CASE("history TSV") {
  const CorpusEntry& e = corpus_entry("exp-sum");
  SolveOptions opt;
  opt.record_history = true;
  const Solution s = solve(e.oracle, e.square, 1e-3, opt);
  std::ostringstream os;
  write_history_tsv(os, s.trace, e.f_star);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# halving exp-sum", 0) == 0);
  std::getline(in, line);
  CHECK(line == "iteration\tvalue\tgap");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == s.trace.executed_iterations);
}

TEST_CASE("trace files") {
  const CorpusEntry& e = corpus_entry("sphere");
  const Solution s = solve(e.oracle, e.square, 1e-3);
  const auto path = temp_path("trace.json");
  emit_trace(s, path.string());
  std::ifstream in(path);
  CHECK(json::parse(in)["trace"]["function"] == "sphere");
  std::filesystem::remove(path);
  CHECK_THROWS(emit_trace(s, "/nonexistent-dir/trace.json"));
}

TEST_CASE("dual problem files") {
  const json j = json::parse(R"({
    "dimension": 2,
    "box": {"lo": [-1, -1], "hi": [1, 1]},
    "f": [{"type": "quadratic", "weight": [1, 1], "center": [1, 1]}],
    "g1": [{"type": "affine", "coef": [1, 0], "constant": -0.2}],
    "g2": [{"type": "affine", "coef": [1, 1], "constant": -0.5}],
    "slater": [0, 0]
  })");
  const DualProblem p = dual_problem_from_json(j);
  CHECK(p.mu == 2.0);
  CHECK(p.dim() == 2);
  const DualResult r = dual_solve(p, 1e-3);
  CHECK(r.certified);
  CHECK(r.f_value == doctest::Approx(1.13).epsilon(2e-3));

  json bad = j;
  bad["f"][0]["type"] = "cubic";
  CHECK_THROWS_AS(dual_problem_from_json(bad), ProblemFormatError);
  bad = j;
  bad["box"]["lo"] = json::array({0});
  CHECK_THROWS_AS(dual_problem_from_json(bad), ProblemFormatError);
  bad = j;
  bad.erase("g2");
  CHECK_THROWS_AS(dual_problem_from_json(bad), ProblemFormatError);

  const auto path = temp_path("broken.json");
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_dual_problem(path.string()), ProblemFormatError);
  CHECK_THROWS_AS(load_dual_problem("/nonexistent/problem.json"), ProblemFormatError);
  std::filesystem::remove(path);
}

TEST_CASE("objective files") {
  const json j = json::parse(R"({
    "name": "bowl",
    "square": {"center": [0, 0], "half_side": 1},
    "objective": [{"type": "quadratic", "weight": [1, 2], "center": [0.25, -0.5]},
                  {"type": "exp", "scale": 0.5, "coef": [1, 0], "constant": 0}],
    "f_star": 0.0
  })");
  const CorpusEntry e = objective_from_json(j);
  CHECK(e.id == "bowl");
  CHECK(e.square == AxisBox::square({0, 0}, 1));
  CHECK(e.oracle.lipschitz_L > 0);
  CHECK(e.oracle.grad_lipschitz_M >= 4.0);
  CHECK(finite_difference_check(e.oracle, {0.1, 0.2}, 1e-5) <= 1e-6);
  // declared L holds on a grid
  for (int i = 0; i < 50; ++i) {
    const Point2 a{-1 + 0.04 * i, 0.3}, b{0.7, -1 + 0.04 * i};
    CHECK(std::abs(e.oracle.value(a) - e.oracle.value(b)) <= e.oracle.lipschitz_L * distance(a, b) + 1e-12);
  }
  const Solution s = solve(e.oracle, e.square, 1e-4);
  CHECK(std::isfinite(s.value));
  json bad = j;
  bad["square"]["half_side"] = -1;
  CHECK_THROWS(objective_from_json(bad));
}

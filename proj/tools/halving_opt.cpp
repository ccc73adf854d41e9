// Command-line harness: run the halving method, its triangle variant and the
// baselines on built-in functions or problem files; emit traces and tables.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hopt/baselines.hpp"
#include "hopt/corpus.hpp"
#include "hopt/halving.hpp"
#include "hopt/problem_io.hpp"
#include "hopt/trace_io.hpp"
#include "hopt/triangle.hpp"

namespace {

using namespace hopt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitGuaranteeMissed = 3;

struct RunConfig {
  std::string method = "halving";
  std::string target;
  double eps = 5e-3;
  std::optional<double> delta;
  double grad_error = 0.0;
  std::string noise = "none";
  std::uint64_t seed = 0;
  std::optional<int> iterations;
  bool per_axis = false;
  bool no_small_grad = false;
  std::string stop = "known";
  std::string trace_path;
  std::string csv_path;
  std::string tsv_path;
};

CorpusEntry resolve_target(const std::string& target) {
  const bool is_file = target.size() > 5 && target.substr(target.size() - 5) == ".json";
  if (is_file) return load_objective(target);
  try {
    return corpus_entry(target);
  } catch (const std::out_of_range&) {
    std::string ids;
    for (const auto& e : corpus()) ids += " " + e.id;
    throw std::invalid_argument("unknown function id '" + target + "' (known:" + ids + ")");
  }
}

RightTriangle corpus_triangle(const CorpusEntry& e) {
  return RightTriangle::make({e.square.lo1(), e.square.lo2()}, e.square.width());
}

std::optional<double> reference_optimum(const CorpusEntry& e, const std::string& method) {
  if (!e.f_star) return std::nullopt;
  if (method == "triangle" && !(e.argmin && corpus_triangle(e).contains(*e.argmin))) return std::nullopt;
  return e.f_star;
}

Solution run_method(const CorpusEntry& e, const RunConfig& cfg, bool history) {
  std::optional<NoiseModel> noise;
  NoiseMode mode = noise_mode_from_string(cfg.noise);
  if (cfg.grad_error > 0.0 && mode == NoiseMode::none) mode = NoiseMode::random;
  if (mode != NoiseMode::none) noise = NoiseModel{mode, cfg.grad_error, cfg.seed};

  if (cfg.method == "halving" || cfg.method == "triangle") {
    SolveOptions so;
    so.delta = cfg.delta;
    so.iterations = cfg.iterations;
    so.noise = noise;
    so.use_per_axis_M = cfg.per_axis;
    so.small_gradient_stop = !cfg.no_small_grad;
    so.record_history = history;
    return cfg.method == "halving" ? solve(e.oracle, e.square, cfg.eps, so)
                                   : solve_triangle(e.oracle, corpus_triangle(e), cfg.eps, so);
  }
  BaselineOptions bo;
  bo.noise = noise;
  bo.record_history = history;
  if (cfg.stop == "known") bo.f_star = e.f_star;
  else if (cfg.stop != "theory") throw std::invalid_argument("--stop must be 'known' or 'theory'");
  if (cfg.iterations) bo.max_iter = *cfg.iterations;
  if (cfg.method == "ellipsoid") return ellipsoid_solve(e.oracle, e.square, cfg.eps, bo);
  if (cfg.method == "gd") return gradient_descent_solve(e.oracle, e.square, cfg.eps, bo);
  throw std::invalid_argument("unknown method '" + cfg.method + "' (halving, triangle, ellipsoid, gd)");
}

void check_budget(const CorpusEntry& e, const RunConfig& cfg) {
  if (!(cfg.eps > 0.0)) throw BudgetError("--eps must be positive");
  const double side = e.square.width();
  if ((cfg.method == "halving" || cfg.method == "triangle") &&
      cfg.eps >= e.oracle.lipschitz_L * side * std::sqrt(2.0))
    throw BudgetError("infeasible budget: eps >= L R sqrt(2) for " + e.id);
}

void write_outputs(const Solution& s, const RunConfig& cfg, std::optional<double> f_star) {
  if (!cfg.trace_path.empty()) emit_trace(s, cfg.trace_path);
  if (!cfg.csv_path.empty()) append_summary_csv(cfg.csv_path, summarize(s, f_star));
  if (!cfg.tsv_path.empty()) {
    std::ofstream out(cfg.tsv_path);
    if (!out) throw std::runtime_error("cannot open tsv file: " + cfg.tsv_path);
    write_history_tsv(out, s.trace, f_star);
  }
}

int cmd_solve(const RunConfig& cfg) {
  const CorpusEntry e = resolve_target(cfg.target);
  check_budget(e, cfg);
  const Solution s = run_method(e, cfg, !cfg.tsv_path.empty());
  const auto f_star = reference_optimum(e, cfg.method);
  write_outputs(s, cfg, f_star);

  const auto& t = s.trace;
  std::cout << std::setprecision(10);
  std::cout << "method:          " << t.method << "\n"
            << "function:        " << e.id << "  (" << e.formula << ")\n"
            << "eps:             " << cfg.eps << "\n"
            << "point:           (" << s.point.x1 << ", " << s.point.x2 << ")\n"
            << "value:           " << s.value << "\n"
            << "iterations:      " << t.executed_iterations << " / " << t.planned_iterations << "\n"
            << "stop:            " << to_string(t.stop_reason) << "\n"
            << "value_calls:     " << t.counters.value_calls << "\n"
            << "direction_calls: " << t.counters.direction_calls << "\n"
            << "full_grad_calls: " << t.counters.full_grad_calls << "\n";
  if (t.method == "halving" || t.method == "triangle")
    std::cout << "delta (h, v):    " << t.delta_horizontal << ", " << t.delta_vertical << "\n"
              << "Delta:           " << t.grad_error_cap << (t.inexact_budget_ok ? "" : "  (exceeds budget)") << "\n";
  std::cout << "wall_ms:         " << t.wall_ms << "\n";
  if (!f_star) {
    std::cout << "gap:             n/a (optimum unknown)\n";
    return kExitOk;
  }
  const double gap = s.value - *f_star;
  std::cout << "gap:             " << gap << "\n";
  if (gap > cfg.eps) {
    if (t.method == "halving" || t.method == "triangle") {
      // best value over the final region, sampled on a grid
      const Region& r = t.final_region;
      double best = s.value;
      if (const auto* b = std::get_if<AxisBox>(&r)) {
        for (int i = 0; i <= 100; ++i)
          for (int j = 0; j <= 100; ++j)
            best = std::min(best, e.oracle.value({b->lo1() + b->width() * i / 100.0, b->lo2() + b->height() * j / 100.0}));
      }
      std::cout << "final-region best value: " << best << " (minimum " << *f_star << ")\n";
    }
    std::cout << "guarantee missed: gap exceeds eps\n";
    return kExitGuaranteeMissed;
  }
  return kExitOk;
}

int cmd_compare(RunConfig cfg) {
  const CorpusEntry e = resolve_target(cfg.target);
  const auto f_star = e.f_star;
  std::vector<SummaryRow> rows;
  for (const std::string m : {"halving", "ellipsoid", "gd"}) {
    cfg.method = m;
    if (m == "gd" && !(e.oracle.grad_lipschitz_M > 0.0)) continue;
    check_budget(e, cfg);
    const Solution s = run_method(e, cfg, false);
    rows.push_back(summarize(s, f_star));
    if (!cfg.csv_path.empty()) append_summary_csv(cfg.csv_path, rows.back());
  }
  std::cout << std::left << std::setw(11) << "method" << std::right << std::setw(11) << "iterations" << std::setw(13)
            << "value_calls" << std::setw(17) << "direction_calls" << std::setw(17) << "full_grad_calls" << std::setw(12)
            << "wall_ms" << std::setw(15) << "final_gap" << "\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(11) << r.method << std::right << std::setw(11) << r.iterations << std::setw(13)
              << r.value_calls << std::setw(17) << r.direction_calls << std::setw(17) << r.full_grad_calls
              << std::setw(12) << std::fixed << std::setprecision(3) << r.wall_ms << std::setw(15) << std::scientific
              << std::setprecision(3) << r.final_gap << std::defaultfloat << "\n";
  }
  return kExitOk;
}

int cmd_dual(const std::string& path, double eps, const std::string& domain, std::optional<double> delta_fn,
             const std::string& trace_path) {
  const DualProblem p = load_dual_problem(path);
  DualOptions opt;
  if (domain == "square") opt.domain = DualDomain::square;
  else if (domain == "triangle") opt.domain = DualDomain::triangle;
  else throw std::invalid_argument("--domain must be 'square' or 'triangle'");
  opt.delta_fn = delta_fn;
  const DualResult r = dual_solve(p, eps, opt);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::runtime_error("cannot open trace file: " + trace_path);
    out << to_json(r).dump(2) << '\n';
  }
  std::cout << std::setprecision(10);
  std::cout << "certified:       " << (r.certified ? "yes" : "no") << "\n"
            << "x:              ";
  for (double v : r.x) std::cout << ' ' << v;
  std::cout << "\n"
            << "f(x):            " << r.f_value << "\n"
            << "lambda:          (" << r.lambda.lambda1 << ", " << r.lambda.lambda2 << ")\n"
            << "|lambda.g|:      " << r.residual.complementarity << "\n"
            << "max g:           " << r.residual.max_violation << "\n"
            << "A:               " << r.A << "\n"
            << "delta_fn:        " << r.delta_fn << "\n"
            << "Delta:           " << r.grad_error << "\n"
            << "inner solves:    " << r.inner_solves << "\n"
            << "outer iterations:" << r.outer.trace.executed_iterations << "\n";
  if (r.certified) std::cout << "guarantee:       f(x) - f* <= " << eps + r.delta_fn << "\n";
  return r.certified ? kExitOk : kExitGuaranteeMissed;
}

std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  if (out.empty()) throw std::invalid_argument("empty eps grid");
  return out;
}

unsigned sweep_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HALVING_OPT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

int cmd_sweep(RunConfig cfg, const std::string& grid, const std::vector<std::string>& methods) {
  const CorpusEntry e = resolve_target(cfg.target);
  const std::vector<double> eps_grid = parse_grid(grid);
  struct Cell {
    std::string method;
    double eps;
  };
  std::vector<Cell> cells;
  for (const auto& m : methods)
    for (double eps : eps_grid) cells.push_back({m, eps});
  for (const auto& c : cells) {
    RunConfig probe = cfg;
    probe.method = c.method;
    probe.eps = c.eps;
    check_budget(e, probe);
  }

  std::vector<std::optional<SummaryRow>> rows(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      RunConfig c = cfg;
      c.method = cells[i].method;
      c.eps = cells[i].eps;
      try {
        rows[i] = summarize(run_method(e, c, false), reference_optimum(e, c.method));
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  const unsigned n = std::min<unsigned>(sweep_threads(), static_cast<unsigned>(cells.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream file;
  if (!cfg.csv_path.empty()) {
    file.open(cfg.csv_path);
    if (!file) throw std::runtime_error("cannot open csv file: " + cfg.csv_path);
  }
  std::ostream& out = cfg.csv_path.empty() ? std::cout : file;
  out << kSummaryHeader << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (rows[i]) out << to_csv(*rows[i]) << '\n';
    else std::cerr << "sweep cell " << cells[i].method << " eps=" << cells[i].eps << " failed: " << errors[i] << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient-direction halving method: solvers, baselines and experiment harness"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--eps", cfg.eps, "target accuracy in function value")->check(CLI::PositiveNumber);
    sub->add_option("--grad-error", cfg.grad_error, "gradient perturbation cap Delta")->check(CLI::NonNegativeNumber);
    sub->add_option("--noise", cfg.noise, "perturbation mode: none, random, adversarial");
    sub->add_option("--seed", cfg.seed, "seed for random perturbations");
    sub->add_option("--stop", cfg.stop, "baseline stopping: known (gap to f*) or theory (iteration bound)");
    sub->add_option("--csv", cfg.csv_path, "append summary rows to this CSV file");
  };

  auto* solve_cmd = app.add_subcommand("solve", "run one method on a function id or objective file");
  solve_cmd->add_option("method", cfg.method, "halving, triangle, ellipsoid or gd")->required();
  solve_cmd->add_option("target", cfg.target, "function id or objective .json file")->required();
  add_common(solve_cmd);
  solve_cmd->add_option("--delta", cfg.delta, "line-search accuracy override")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--iterations", cfg.iterations, "iteration count override")->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--per-axis", cfg.per_axis, "use per-axis gradient Lipschitz constants");
  solve_cmd->add_flag("--no-small-grad", cfg.no_small_grad, "disable the small-gradient stop");
  solve_cmd->add_option("--trace", cfg.trace_path, "write the JSON trace here");
  solve_cmd->add_option("--tsv", cfg.tsv_path, "write value-vs-iteration TSV here");

  auto* compare_cmd = app.add_subcommand("compare", "run halving, ellipsoid and gradient descent on one function");
  compare_cmd->add_option("target", cfg.target, "function id or objective .json file")->required();
  add_common(compare_cmd);

  std::string dual_path, domain = "square", dual_trace;
  std::optional<double> delta_fn;
  double dual_eps = 1e-3;
  auto* dual_cmd = app.add_subcommand("dual", "solve a problem with two functional constraints through its dual");
  dual_cmd->add_option("problem", dual_path, "problem .json file")->required();
  dual_cmd->add_option("--eps", dual_eps, "certificate accuracy")->check(CLI::PositiveNumber);
  dual_cmd->add_option("--domain", domain, "square or triangle");
  dual_cmd->add_option("--delta-fn", delta_fn, "inner accuracy override")->check(CLI::PositiveNumber);
  dual_cmd->add_option("--trace", dual_trace, "write the JSON result here");

  std::string grid = "1e-2,1e-3,1e-4,1e-5,1e-6";
  std::vector<std::string> methods{"halving", "ellipsoid"};
  auto* sweep_cmd = app.add_subcommand("sweep", "cost versus eps for several methods (CSV)");
  sweep_cmd->add_option("target", cfg.target, "function id or objective .json file")->required();
  add_common(sweep_cmd);
  sweep_cmd->add_option("--eps-grid", grid, "comma-separated eps values");
  sweep_cmd->add_option("--methods", methods, "methods to run")->delimiter(',');

  auto* list_cmd = app.add_subcommand("list", "list built-in functions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return cmd_solve(cfg);
    if (*compare_cmd) return cmd_compare(cfg);
    if (*dual_cmd) return cmd_dual(dual_path, dual_eps, domain, delta_fn, dual_trace);
    if (*sweep_cmd) return cmd_sweep(cfg, grid, methods);
    if (*list_cmd) {
      for (const auto& e : corpus())
        std::cout << std::left << std::setw(15) << e.id << e.formula << "  on [" << e.square.lo1() << ", "
                  << e.square.hi1() << "] x [" << e.square.lo2() << ", " << e.square.hi2() << "]\n";
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

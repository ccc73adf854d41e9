#ifndef HOPT_HALVING_HPP
#define HOPT_HALVING_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopt/budget.hpp"
#include "hopt/geometry.hpp"
#include "hopt/oned.hpp"
#include "hopt/oracle.hpp"

namespace hopt {

enum class StopReason { iteration_budget, zero_gradient, small_gradient_norm, certificate, tolerance_reached };

const char* to_string(StopReason r);

/// One line search on a cut plus the direction decision taken after it.
struct CutRecord {
  Segment segment;
  double delta = 0.0;            // argument accuracy used (inf: midpoint)
  Point2 x_delta;
  std::size_t line_evals = 0;
  Side side = Side::zero;
  double grad_norm = 0.0;        // norm of the reported gradient at x_delta
  std::optional<Region> kept;    // empty when the run stopped at this cut
};

struct IterationRecord {
  int index = 0;                 // 1-based
  Region region_before;
  std::vector<CutRecord> cuts;
  CallCounters counters;         // cumulative after the iteration
};

struct RunTrace {
  std::string method;
  std::string function;
  double eps = 0.0;
  int planned_iterations = 0;
  int executed_iterations = 0;
  double delta_horizontal = 0.0;
  double delta_vertical = 0.0;
  double grad_error_cap = 0.0;   // Delta
  bool inexact_budget_ok = true;
  bool small_gradient_stop_enabled = false;
  Region initial_region = AxisBox{};
  Region final_region = AxisBox{};
  std::vector<IterationRecord> iterations;
  std::vector<double> history;   // objective at the iterate representative, per iteration
  int feasibility_cuts = 0;      // ellipsoid cuts along a box normal, not counted as iterations
  CallCounters counters;
  StopReason stop_reason = StopReason::iteration_budget;
  double wall_ms = 0.0;
};

struct Solution {
  Point2 point;
  double value = 0.0;
  RunTrace trace;
};

struct SolveOptions {
  std::optional<double> delta;        // override line-search accuracy (both axes)
  std::optional<int> iterations;      // override iteration count
  double grad_error_cap = 0.0;        // Delta of an inexact gradient source
  std::optional<NoiseModel> noise;    // synthetic perturbation; its cap adds to Delta
  bool small_gradient_stop = true;    // stop on |v(x_delta)| <= M delta + Delta
  bool use_per_axis_M = false;        // use the oracle's per-axis M when present
  bool record_history = false;
  std::function<bool()> stop_requested;  // polled after every cut
};

/// Quantities derived from (eps, L, M, R) that drive one run.
struct Budget {
  double eps = 0.0;
  double side = 0.0;
  int iterations_n = 0;
  double delta_horizontal = 0.0;
  double delta_vertical = 0.0;
  double grad_error_cap = 0.0;
  double zero_tol_horizontal = 1e-12;
  double zero_tol_vertical = 1e-12;
  bool inexact_budget_ok = true;
  bool small_gradient_stop = false;

  double delta_for(Axis a) const { return a == Axis::horizontal ? delta_horizontal : delta_vertical; }
  double zero_tol_for(Axis a) const { return a == Axis::horizontal ? zero_tol_horizontal : zero_tol_vertical; }
};

/// Builds the run budget for a square (or triangle leg) of size `side`.
Budget make_budget(const Oracle& o, double side, double eps, const SolveOptions& opt);

/// Line search on `seg` followed by one direction query at x_delta.
CutRecord probe_cut(OracleSession& session, const Segment& seg, double delta, double zero_tol);

struct StepResult {
  AxisBox next;
  IterationRecord record;
  std::optional<Point2> stop_point;  // set when a zero/small gradient stopped the run
};

/// One full iteration on a square: horizontal cut, discard, vertical cut, discard.
StepResult step(const AxisBox& region, OracleSession& session, const Budget& budget, int index = 1);

struct PhaseOutcome {
  Region final_region;
  std::optional<Point2> stop_point;
  bool interrupted = false;
};

/// Runs up to `iterations` square steps, appending records to `trace`.
PhaseOutcome run_square_iterations(OracleSession& session, AxisBox square, const Budget& budget, int iterations,
                                   int first_index, RunTrace& trace, const SolveOptions& opt);

/// Minimizes the oracle over `square` to accuracy eps in function value.
Solution solve(const Oracle& o, const AxisBox& square, double eps, const SolveOptions& opt = {});

}  // namespace hopt

#endif  // HOPT_HALVING_HPP

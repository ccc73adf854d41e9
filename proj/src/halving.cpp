#include "hopt/halving.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace hopt {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::iteration_budget: return "iteration_budget";
    case StopReason::zero_gradient: return "zero_gradient";
    case StopReason::small_gradient_norm: return "small_gradient_norm";
    case StopReason::certificate: return "certificate";
    case StopReason::tolerance_reached: return "tolerance_reached";
  }
  return "iteration_budget";
}

Budget make_budget(const Oracle& o, double side, double eps, const SolveOptions& opt) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Budget b;
  b.eps = eps;
  b.side = side;
  b.iterations_n = opt.iterations ? *opt.iterations : required_iterations(o.lipschitz_L, side, eps);
  if (b.iterations_n < 0) throw BudgetError("iteration count must be >= 0");
  b.grad_error_cap = opt.grad_error_cap;
  if (opt.noise && opt.noise->mode != NoiseMode::none) b.grad_error_cap += opt.noise->cap;

  double m_h = o.grad_lipschitz_M;
  double m_v = o.grad_lipschitz_M;
  if (opt.use_per_axis_M && o.per_axis_M) {
    m_h = (*o.per_axis_M)[0];
    m_v = (*o.per_axis_M)[1];
  }
  if (!(m_h >= 0.0) || !(m_v >= 0.0)) throw BudgetError("gradient Lipschitz constants must be >= 0");

  const bool budget_defined = eps < o.lipschitz_L * side * std::sqrt(2.0);
  if (!budget_defined) {
    if (b.iterations_n > 0 && !opt.delta)
      throw BudgetError("eps >= L R sqrt(2): no line-search accuracy for a forced iteration count");
    b.delta_horizontal = b.delta_vertical = opt.delta.value_or(kInf);
    b.inexact_budget_ok = true;
    return b;
  }

  const double rhs = inexact_budget_rhs(o.lipschitz_L, side, eps);
  const double room = rhs - 2.0 * b.grad_error_cap;
  auto axis_delta = [&](double m) {
    if (opt.delta) return *opt.delta;
    if (m == 0.0) return kInf;
    return room > 0.0 ? room / m : rhs / m;
  };
  b.delta_horizontal = axis_delta(m_h);
  b.delta_vertical = axis_delta(m_v);
  if (!(b.delta_horizontal > 0.0) || !(b.delta_vertical > 0.0)) throw BudgetError("line-search accuracy must be positive");

  auto spent = [](double m, double d) { return m == 0.0 ? 0.0 : m * d; };
  const double worst = std::max(spent(m_h, b.delta_horizontal), spent(m_v, b.delta_vertical));
  b.inexact_budget_ok = 2.0 * b.grad_error_cap + worst <= rhs;

  b.small_gradient_stop =
      opt.small_gradient_stop && b.inexact_budget_ok && o.lipschitz_L >= eps / (1.6 * side);
  if (b.small_gradient_stop) {
    b.zero_tol_horizontal = std::max(spent(m_h, b.delta_horizontal) + b.grad_error_cap, 1e-12);
    b.zero_tol_vertical = std::max(spent(m_v, b.delta_vertical) + b.grad_error_cap, 1e-12);
  }
  return b;
}

CutRecord probe_cut(OracleSession& session, const Segment& seg, double delta, double zero_tol) {
  CutRecord rec;
  rec.segment = seg;
  rec.delta = delta;
  LineProblem line{seg, [&session](Point2 x) { return session.value(x); }};
  const LineResult lr = golden_section(line, delta);
  rec.x_delta = lr.point;
  rec.line_evals = lr.evals;
  const DirectionReading reading = direction_side(session, rec.x_delta, seg, zero_tol);
  rec.side = reading.side;
  rec.grad_norm = reading.norm;
  return rec;
}

StepResult step(const AxisBox& region, OracleSession& session, const Budget& budget, int index) {
  if (!region.is_square()) throw GeometryError("halving step needs a square region");
  StepResult out{region, IterationRecord{index, region, {}, {}}, std::nullopt};

  AxisBox current = region;
  for (const Axis axis : {Axis::horizontal, Axis::vertical}) {
    const Segment seg = axis == Axis::horizontal ? horizontal_cut(current) : vertical_cut(current);
    CutRecord rec = probe_cut(session, seg, budget.delta_for(axis), budget.zero_tol_for(axis));
    if (rec.side == Side::zero) {
      out.stop_point = rec.x_delta;
      out.record.cuts.push_back(std::move(rec));
      out.record.counters = session.counters();
      out.next = current;
      return out;
    }
    const auto [low, high] = split(current, seg);
    // gradient into the high side (or along the cut): drop the high half
    current = rec.side == Side::negative ? high : low;
    rec.kept = current;
    out.record.cuts.push_back(std::move(rec));
  }
  out.next = current;
  out.record.counters = session.counters();
  return out;
}

PhaseOutcome run_square_iterations(OracleSession& session, AxisBox square, const Budget& budget, int iterations,
                                   int first_index, RunTrace& trace, const SolveOptions& opt) {
  PhaseOutcome out{square, std::nullopt, false};
  for (int i = 0; i < iterations; ++i) {
    if (opt.stop_requested && opt.stop_requested()) {
      out.interrupted = true;
      break;
    }
    StepResult s = step(square, session, budget, first_index + i);
    trace.iterations.push_back(std::move(s.record));
    ++trace.executed_iterations;
    square = s.next;
    out.final_region = square;
    if (s.stop_point) {
      out.stop_point = s.stop_point;
      if (opt.record_history) trace.history.push_back(session.oracle().value(*s.stop_point));
      break;
    }
    if (opt.record_history) trace.history.push_back(session.oracle().value(square.center));
    if (opt.stop_requested && opt.stop_requested()) {
      out.interrupted = true;
      break;
    }
  }
  return out;
}

Solution solve(const Oracle& o, const AxisBox& square, double eps, const SolveOptions& opt) {
  if (!square.is_square()) throw GeometryError("halving solve needs a square domain");
  const auto t0 = std::chrono::steady_clock::now();
  const Budget budget = make_budget(o, square.width(), eps, opt);
  OracleSession session(o, opt.noise);

  Solution sol;
  RunTrace& tr = sol.trace;
  tr.method = "halving";
  tr.function = o.name;
  tr.eps = eps;
  tr.planned_iterations = budget.iterations_n;
  tr.delta_horizontal = budget.delta_horizontal;
  tr.delta_vertical = budget.delta_vertical;
  tr.grad_error_cap = budget.grad_error_cap;
  tr.inexact_budget_ok = budget.inexact_budget_ok;
  tr.small_gradient_stop_enabled = budget.small_gradient_stop;
  tr.initial_region = square;

  const PhaseOutcome phase = run_square_iterations(session, square, budget, budget.iterations_n, 1, tr, opt);
  tr.final_region = phase.final_region;
  if (phase.stop_point) {
    sol.point = *phase.stop_point;
    tr.stop_reason = budget.small_gradient_stop ? StopReason::small_gradient_norm : StopReason::zero_gradient;
  } else {
    sol.point = representative_point(phase.final_region);
    tr.stop_reason = phase.interrupted ? StopReason::certificate : StopReason::iteration_budget;
  }
  tr.counters = session.counters();
  sol.value = o.value(sol.point);
  tr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace hopt

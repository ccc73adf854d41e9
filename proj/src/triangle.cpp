#include "hopt/triangle.hpp"

#include <chrono>

namespace hopt {

Solution solve_triangle(const Oracle& o, const RightTriangle& t, double eps, const SolveOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const Budget budget = make_budget(o, t.leg, eps, opt);
  OracleSession session(o, opt.noise);

  Solution sol;
  RunTrace& tr = sol.trace;
  tr.method = "triangle";
  tr.function = o.name;
  tr.eps = eps;
  tr.planned_iterations = budget.iterations_n;
  tr.delta_horizontal = budget.delta_horizontal;
  tr.delta_vertical = budget.delta_vertical;
  tr.grad_error_cap = budget.grad_error_cap;
  tr.inexact_budget_ok = budget.inexact_budget_ok;
  tr.small_gradient_stop_enabled = budget.small_gradient_stop;
  tr.initial_region = t;

  Region current = t;
  std::optional<Point2> stop_point;
  bool interrupted = false;
  int i = 0;
  while (i < budget.iterations_n && std::holds_alternative<RightTriangle>(current)) {
    if (opt.stop_requested && opt.stop_requested()) {
      interrupted = true;
      break;
    }
    const RightTriangle tri = std::get<RightTriangle>(current);
    ++i;
    IterationRecord rec{i, tri, {}, {}};
    const auto [first, second] = triangle_midline_cuts(tri);

    Region piece = tri;
    for (const Segment& seg : {first, second}) {
      CutRecord cut = probe_cut(session, seg, budget.delta_for(seg.axis), budget.zero_tol_for(seg.axis));
      if (cut.side == Side::zero) {
        stop_point = cut.x_delta;
        rec.cuts.push_back(std::move(cut));
        break;
      }
      const TrianglePieces pieces = triangle_split(piece, seg);
      const int far_sign = seg.axis == Axis::vertical ? tri.orientation.s1 : tri.orientation.s2;
      const bool toward_far = (cut.side == Side::positive && far_sign > 0) ||
                              (cut.side == Side::negative && far_sign < 0) ||
                              (cut.side == Side::along && far_sign > 0);
      // the part the gradient points into is discarded
      piece = toward_far ? pieces.near : Region{pieces.far};
      cut.kept = piece;
      rec.cuts.push_back(std::move(cut));
      if (std::holds_alternative<RightTriangle>(piece)) break;
    }
    rec.counters = session.counters();
    tr.iterations.push_back(std::move(rec));
    ++tr.executed_iterations;
    current = piece;
    if (opt.record_history)
      tr.history.push_back(o.value(stop_point ? *stop_point : representative_point(current)));
    if (stop_point) break;
  }

  if (!stop_point && !interrupted) {
    if (const auto* sq = std::get_if<AxisBox>(&current)) {
      const PhaseOutcome phase =
          run_square_iterations(session, *sq, budget, budget.iterations_n - i, i + 1, tr, opt);
      current = phase.final_region;
      stop_point = phase.stop_point;
      interrupted = phase.interrupted;
    }
  }

  tr.final_region = current;
  if (stop_point) {
    sol.point = *stop_point;
    tr.stop_reason = budget.small_gradient_stop ? StopReason::small_gradient_norm : StopReason::zero_gradient;
  } else {
    sol.point = representative_point(current);
    tr.stop_reason = interrupted ? StopReason::certificate : StopReason::iteration_budget;
  }
  tr.counters = session.counters();
  sol.value = o.value(sol.point);
  tr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace hopt

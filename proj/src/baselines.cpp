#include "hopt/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace hopt {

bool Ellipse::contains(Point2 p, double tol) const {
  const double det = determinant();
  const Vec2 d = p - center;
  // d^T shape^{-1} d via the adjugate
  const double q = (shape[2] * d.x1 * d.x1 - 2.0 * shape[1] * d.x1 * d.x2 + shape[0] * d.x2 * d.x2) / det;
  return q <= 1.0 + tol;
}

Ellipse Ellipse::cut(Vec2 g) const {
  const Vec2 pg{shape[0] * g.x1 + shape[1] * g.x2, shape[1] * g.x1 + shape[2] * g.x2};
  const double gpg = dot(g, pg);
  Ellipse out = *this;
  if (!(gpg > 0.0)) {
    out.shape = {std::numeric_limits<double>::quiet_NaN(), 0.0, 0.0};
    return out;
  }
  const Vec2 b = (1.0 / std::sqrt(gpg)) * pg;
  // d = 2: center moves b / (d + 1), shape scales by d^2 / (d^2 - 1)
  out.center = center - (1.0 / 3.0) * b;
  const double s = 4.0 / 3.0;
  const double c = 2.0 / 3.0;
  out.shape = {s * (shape[0] - c * b.x1 * b.x1), s * (shape[1] - c * b.x1 * b.x2), s * (shape[2] - c * b.x2 * b.x2)};
  return out;
}

int ellipsoid_iteration_bound(double initial_radius, double L, double eps) {
  const double ratio = initial_radius * L / eps;
  if (!(ratio > 1.0)) return 0;
  return static_cast<int>(std::ceil(2.0 * 2.0 * 3.0 * std::log(ratio)));
}

namespace {

Ellipse enclosing_disk(const AxisBox& square) {
  const double r2 = square.half_width * square.half_width + square.half_height * square.half_height;
  return Ellipse{square.center, {r2, 0.0, r2}};
}

AxisBox ellipse_bounds(const Ellipse& e) {
  return AxisBox{e.center, std::sqrt(e.shape[0]), std::sqrt(e.shape[2])};
}

RunTrace baseline_trace(const char* method, const Oracle& o, const AxisBox& square, double eps) {
  RunTrace tr;
  tr.method = method;
  tr.function = o.name;
  tr.eps = eps;
  tr.initial_region = square;
  tr.final_region = square;
  tr.delta_horizontal = tr.delta_vertical = 0.0;
  tr.small_gradient_stop_enabled = false;
  return tr;
}

}  // namespace

Solution ellipsoid_solve(const Oracle& o, const AxisBox& square, double eps, const BaselineOptions& opt) {
  if (!(eps > 0.0)) throw BudgetError("eps must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  OracleSession session(o, opt.noise);
  Solution sol;
  sol.trace = baseline_trace("ellipsoid", o, square, eps);
  RunTrace& tr = sol.trace;

  Ellipse e = enclosing_disk(square);
  const int bound = ellipsoid_iteration_bound(std::sqrt(e.shape[0]), o.lipschitz_L, eps);
  const int cap = opt.max_iter.value_or(opt.f_star ? 100000 : bound);
  tr.planned_iterations = opt.f_star ? cap : bound;

  Point2 best = square.center;
  double best_value = std::numeric_limits<double>::infinity();
  // feasibility cuts are bounded too, so a run cannot spin outside the square
  const long long total_cap = 64LL * cap + 64;
  for (long long cuts = 0; tr.executed_iterations < cap && cuts < total_cap; ++cuts) {
    Vec2 g;
    const bool inside = square.contains(e.center);
    if (inside) {
      const double v = session.value(e.center);
      if (v < best_value) {
        best_value = v;
        best = e.center;
      }
      if (opt.f_star && best_value - *opt.f_star <= eps) {
        tr.stop_reason = StopReason::tolerance_reached;
        break;
      }
      g = session.full_gradient(e.center);
      if (g.x1 == 0.0 && g.x2 == 0.0) {
        tr.stop_reason = StopReason::zero_gradient;
        break;
      }
    } else if (e.center.x1 > square.hi1()) {
      g = {1.0, 0.0};
    } else if (e.center.x1 < square.lo1()) {
      g = {-1.0, 0.0};
    } else if (e.center.x2 > square.hi2()) {
      g = {0.0, 1.0};
    } else {
      g = {0.0, -1.0};
    }
    e = e.cut(g);
    if (!e.is_spd()) e = enclosing_disk(square);  // numerical breakdown
    if (!inside) {
      ++tr.feasibility_cuts;
      continue;
    }
    ++tr.executed_iterations;
    if (opt.record_history) tr.history.push_back(best_value);
  }
  if (!std::isfinite(best_value)) best_value = o.value(best);
  tr.final_region = ellipse_bounds(e);
  tr.counters = session.counters();
  sol.point = best;
  sol.value = best_value;
  tr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

long long gradient_descent_iteration_bound(double M, double R, double eps) {
  const double d2 = 8.0 * R * R;  // (2 R sqrt2)^2 without the rounding of sqrt2
  return static_cast<long long>(std::ceil(M * d2 / (2.0 * eps)));
}

Solution gradient_descent_solve(const Oracle& o, const AxisBox& square, double eps, const BaselineOptions& opt) {
  if (!(eps > 0.0)) throw BudgetError("eps must be positive");
  if (!(o.grad_lipschitz_M > 0.0)) throw BudgetError("gradient descent needs M > 0");
  const auto t0 = std::chrono::steady_clock::now();
  OracleSession session(o, opt.noise);
  Solution sol;
  sol.trace = baseline_trace("gd", o, square, eps);
  RunTrace& tr = sol.trace;

  const long long bound = gradient_descent_iteration_bound(o.grad_lipschitz_M, square.width(), eps);
  const long long cap = opt.max_iter ? *opt.max_iter : (opt.f_star ? 5'000'000LL : std::min(bound, 5'000'000LL));
  tr.planned_iterations = static_cast<int>(std::min<long long>(opt.f_star ? cap : std::min(bound, cap),
                                                               std::numeric_limits<int>::max()));
  const double step = 1.0 / o.grad_lipschitz_M;

  Point2 x = square.clamp(opt.start.value_or(square.center));
  double fx = session.value(x);
  for (long long k = 0; k < cap; ++k) {
    if (opt.f_star && fx - *opt.f_star <= eps) {
      tr.stop_reason = StopReason::tolerance_reached;
      break;
    }
    const Vec2 g = session.full_gradient(x);
    if (g.x1 == 0.0 && g.x2 == 0.0) {
      tr.stop_reason = StopReason::zero_gradient;
      break;
    }
    x = square.clamp(x - step * g);
    fx = session.value(x);
    ++tr.executed_iterations;
    if (opt.record_history) tr.history.push_back(fx);
  }
  tr.counters = session.counters();
  sol.point = x;
  sol.value = fx;
  tr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace hopt

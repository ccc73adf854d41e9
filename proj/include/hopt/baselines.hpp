#ifndef HOPT_BASELINES_HPP
#define HOPT_BASELINES_HPP

#include <array>
#include <optional>

#include "hopt/halving.hpp"

namespace hopt {

/// {x : (x - center)^T shape^{-1} (x - center) <= 1}
struct Ellipse {
  Point2 center;
  std::array<double, 3> shape{1.0, 0.0, 1.0};  // (a11, a12, a22)

  double determinant() const { return shape[0] * shape[2] - shape[1] * shape[1]; }
  bool is_spd() const { return shape[0] > 0.0 && shape[2] > 0.0 && determinant() > 0.0; }
  /// Area up to the constant factor pi.
  double volume() const { return std::sqrt(std::max(determinant(), 0.0)); }
  bool contains(Point2 p, double tol = 0.0) const;
  /// Central cut with normal g: keeps {x : g.(x - center) <= 0}.
  Ellipse cut(Vec2 g) const;
};

/// Known optimum enables the gap stop; otherwise the theoretical bound applies.
struct BaselineOptions {
  std::optional<double> f_star;
  std::optional<int> max_iter;
  std::optional<Point2> start;   // gradient descent only; default is the square center
  std::optional<NoiseModel> noise;
  bool record_history = false;
};

/// Iteration bound 2 d (d + 1) ln(r0 L / eps) for d = 2.
int ellipsoid_iteration_bound(double initial_radius, double L, double eps);

/// Central-cut ellipsoid method from the disk circumscribing the square.
/// Centers outside the square get a feasibility cut along the violated box
/// normal; the best feasible center is returned.
Solution ellipsoid_solve(const Oracle& o, const AxisBox& square, double eps, const BaselineOptions& opt = {});

/// Iteration bound ceil(M (2 R sqrt2)^2 / (2 eps)).
long long gradient_descent_iteration_bound(double M, double R, double eps);

/// Projected gradient descent with step 1/M onto the square.
Solution gradient_descent_solve(const Oracle& o, const AxisBox& square, double eps, const BaselineOptions& opt = {});

}  // namespace hopt

#endif  // HOPT_BASELINES_HPP

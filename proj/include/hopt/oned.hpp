#ifndef HOPT_ONED_HPP
#define HOPT_ONED_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

#include "hopt/geometry.hpp"

namespace hopt {

class LineSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Golden ratio conjugate; each interior step keeps this fraction of the bracket.
inline const double kGoldenRho = (std::sqrt(5.0) - 1.0) / 2.0;

/// Restriction of an objective to a segment, parameterized by t in [0, 1].
struct LineProblem {
  Segment seg;
  std::function<double(Point2)> eval;
};

/// Golden-section bracket on [lo, lo + length]. The length after k steps is
/// recomputed as length0 * rho^k so it never drifts.
class GoldenBracket {
 public:
  GoldenBracket(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return lo_ + length(); }
  double length() const { return length0_ * std::pow(kGoldenRho, static_cast<double>(steps_)); }
  std::size_t steps() const { return steps_; }
  double inner_left() const { return lo_ + (1.0 - kGoldenRho) * length(); }
  double inner_right() const { return lo_ + kGoldenRho * length(); }

  /// Evaluates both interior probes; must be called once before step().
  template <class F>
  void warm_up(F&& f) {
    f_left_ = checked(f(inner_left()));
    f_right_ = checked(f(inner_right()));
    warmed_ = true;
  }

  /// One interior step: discards the outer part beyond the worse probe and
  /// evaluates exactly one new probe.
  template <class F>
  void step(F&& f) {
    if (!warmed_) throw LineSearchError("golden bracket stepped before warm-up");
    if (f_left_ <= f_right_) {
      ++steps_;
      f_right_ = f_left_;
      f_left_ = checked(f(inner_left()));
    } else {
      lo_ = inner_left();
      ++steps_;
      f_left_ = f_right_;
      f_right_ = checked(f(inner_right()));
    }
  }

 private:
  static double checked(double v) {
    if (!std::isfinite(v)) throw LineSearchError("non-finite objective value in line search");
    return v;
  }

  double lo_;
  double length0_;
  std::size_t steps_ = 0;
  double f_left_ = 0.0;
  double f_right_ = 0.0;
  bool warmed_ = false;
};

/// Bracket after a single interior step on (lo, hi) with the given probes.
std::pair<double, double> bracket_shrink_step(std::pair<double, double> interval,
                                              const std::function<double(double)>& probe);

struct LineResult {
  double t = 0.5;       // parameter on the segment
  Point2 point;         // x_delta
  std::size_t evals = 0;
};

/// Minimizes a unimodal restriction to argument accuracy `delta_arg` (in
/// length units): stops once the bracket is no longer than 2 * delta_arg and
/// returns its midpoint. A non-finite or oversized delta returns the segment
/// midpoint without evaluating anything.
LineResult golden_section(const LineProblem& p, double delta_arg);

/// Upper bound on evaluations used by golden_section for the given accuracy.
std::size_t golden_eval_bound(double length, double delta_arg);

}  // namespace hopt

#endif  // HOPT_ONED_HPP

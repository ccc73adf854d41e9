#include "hopt/oned.hpp"

namespace hopt {

GoldenBracket::GoldenBracket(double lo, double hi) : lo_(lo), length0_(hi - lo) {
  if (!(hi > lo)) throw LineSearchError("golden bracket needs lo < hi");
}

std::pair<double, double> bracket_shrink_step(std::pair<double, double> interval,
                                              const std::function<double(double)>& probe) {
  GoldenBracket b(interval.first, interval.second);
  b.warm_up(probe);
  b.step(probe);
  return {b.lo(), b.hi()};
}

LineResult golden_section(const LineProblem& p, double delta_arg) {
  if (!(delta_arg > 0.0)) throw LineSearchError("line search accuracy must be positive");
  const double len = p.seg.length();
  LineResult r;
  if (!std::isfinite(delta_arg) || 2.0 * delta_arg >= len) {
    r.point = p.seg.midpoint();
    return r;
  }
  const double tol = 2.0 * delta_arg / len;  // bracket length target in t units
  auto f = [&](double t) {
    ++r.evals;
    return p.eval(p.seg.at(t));
  };
  GoldenBracket b(0.0, 1.0);
  b.warm_up(f);
  while (b.length() > tol) b.step(f);
  r.t = b.lo() + 0.5 * b.length();
  r.point = p.seg.at(r.t);
  return r;
}

std::size_t golden_eval_bound(double length, double delta_arg) {
  if (!std::isfinite(delta_arg) || 2.0 * delta_arg >= length) return 0;
  const double k = std::ceil(std::log(length / (2.0 * delta_arg)) / std::log(1.0 / kGoldenRho));
  return static_cast<std::size_t>(k) + 2;
}

}  // namespace hopt

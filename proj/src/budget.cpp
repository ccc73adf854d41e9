#include "hopt/budget.hpp"

#include <cmath>
#include <limits>

namespace hopt {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);

void check_positive(double L, double R, double eps) {
  if (!(L > 0.0) || !std::isfinite(L)) throw BudgetError("Lipschitz constant L must be positive");
  if (!(R > 0.0) || !std::isfinite(R)) throw BudgetError("side R must be positive");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw BudgetError("eps must be positive");
}

}  // namespace

int required_iterations(double L, double R, double eps) {
  check_positive(L, R, eps);
  if (eps >= L * R * kSqrt2) return 0;
  const double ratio = 2.0 * L * R * kSqrt2 / eps;
  int n = static_cast<int>(std::ceil(std::log2(ratio)));
  // 2 * 2 sqrt2 * sqrt2 evaluates to 8.000000000000002; do not round that up
  if (n > 0 && std::ldexp(1.0, n - 1) >= ratio * (1.0 - 1e-14)) --n;
  return n;
}

double inexact_budget_rhs(double L, double R, double eps) {
  check_positive(L, R, eps);
  const double shrink = 1.0 - eps / (L * R * kSqrt2);
  if (!(shrink > 0.0)) throw BudgetError("eps >= L R sqrt(2): line-search budget undefined");
  return eps / (2.0 * R * (kSqrt2 + kSqrt5) * shrink);
}

double required_delta(double M, double L, double R, double eps) {
  if (!(M >= 0.0) || !std::isfinite(M)) throw BudgetError("gradient Lipschitz constant M must be >= 0");
  const double rhs = inexact_budget_rhs(L, R, eps);
  if (M == 0.0) return std::numeric_limits<double>::infinity();
  return rhs / M;
}

bool inexact_budget_ok(double M, double L, double R, double eps, double delta, double Delta) {
  if (!(M >= 0.0)) throw BudgetError("gradient Lipschitz constant M must be >= 0");
  if (!(delta >= 0.0) || !(Delta >= 0.0)) throw BudgetError("accuracies must be >= 0");
  const double rhs = inexact_budget_rhs(L, R, eps);
  const double used = 2.0 * Delta + (M == 0.0 ? 0.0 : M * delta);
  // rhs / M * M may land a few ulps above rhs
  return used <= rhs * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
}

double accumulated_error_bound(double M, double R, double delta, int n) {
  if (n <= 0) return 0.0;
  if (M == 0.0) return 0.0;
  return M * R * delta * (kSqrt2 + kSqrt5) * (1.0 - std::ldexp(1.0, -n));
}

}  // namespace hopt

#ifndef HOPT_BUDGET_HPP
#define HOPT_BUDGET_HPP

#include <stdexcept>

namespace hopt {

class BudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of halving iterations n with L R sqrt(2) / 2^n <= eps / 2, i.e.
/// ceil(log2(2 L R sqrt(2) / eps)). Zero when eps >= L R sqrt(2), where every
/// point of the square is already eps-optimal.
int required_iterations(double L, double R, double eps);

/// Right-hand side of the inexactness budget:
/// eps / (2 R (sqrt2 + sqrt5) (1 - eps / (L R sqrt2))).
/// Requires 0 < eps < L R sqrt(2).
double inexact_budget_rhs(double L, double R, double eps);

/// Line-search argument accuracy: inexact_budget_rhs / M; +infinity when M = 0.
double required_delta(double M, double L, double R, double eps);

/// True iff 2 Delta + M delta <= inexact_budget_rhs(L, R, eps).
bool inexact_budget_ok(double M, double L, double R, double eps, double delta, double Delta);

/// Largest accumulated loss of the minimum over the kept squares after n
/// iterations: M R delta (sqrt2 + sqrt5) (1 - 2^-n).
double accumulated_error_bound(double M, double R, double delta, int n);

}  // namespace hopt

#endif  // HOPT_BUDGET_HPP

#ifndef HOPT_DUAL_HPP
#define HOPT_DUAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopt/halving.hpp"
#include "hopt/terms.hpp"

namespace hopt {

class InnerSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// min f(x) over the box Q subject to g1(x) <= 0, g2(x) <= 0, with f
/// mu-strongly convex and g_i M_i-Lipschitz on Q.
struct DualProblem {
  Box q;
  TermSum f;
  double mu = 0.0;
  TermSum g1;
  TermSum g2;
  double M1 = 0.0;
  double M2 = 0.0;
  std::optional<std::vector<double>> slater_point;
  std::optional<double> A;  // bound on lambda1 + lambda2 at the dual optimum

  std::size_t dim() const { return q.dim(); }
  /// Checks dimensions and constants; fills M_i from gradient bounds when
  /// they are zero and mu from the quadratic terms when it is zero.
  void validate_and_complete();
};

struct DualPoint {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

struct InnerSolution {
  std::vector<double> x;
  double lagrangian = 0.0;  // at x
  double gap_bound = 0.0;   // certified Lagrangian suboptimality of x
  int iterations = 0;
};

/// Projected gradient on Q for the Lagrangian at `lam`, stopped once the
/// strong-convexity bound |G|^2 / (2 mu) on the gradient mapping certifies
/// suboptimality <= delta_fn.
InnerSolution inner_solve(const DualProblem& p, DualPoint lam, double delta_fn,
                          const std::vector<double>* warm_start = nullptr, int max_iterations = 1'000'000);

struct DualEval {
  double phi = 0.0;  // Lagrangian at x_delta(lambda): overestimates phi by <= delta_fn
  Vec2 grad;         // (g1, g2) at x_delta(lambda)
  InnerSolution inner;
};

DualEval dual_value_and_grad(const DualProblem& p, DualPoint lam, double delta_fn);

struct CertificateResidual {
  double complementarity = 0.0;  // |lambda1 g1 + lambda2 g2|
  double max_violation = 0.0;    // max(g1, g2)
};

CertificateResidual certificate_residual(const DualProblem& p, DualPoint lam, const std::vector<double>& x);

/// |lambda . g(x)| <= eps and max g_i(x) <= eps.
bool certificate(const DualProblem& p, DualPoint lam, const std::vector<double>& x, double eps);

/// Dual bound from a strictly feasible point: (f(xs) - min_Q f) / min_i(-g_i(xs)).
double dual_bound_from_slater(const DualProblem& p, const std::vector<double>& slater, double min_f_lower);

/// Inexact gradient error induced by inner accuracy delta_fn: M sqrt(2 delta_fn / mu).
double dual_gradient_error(const DualProblem& p, double delta_fn);

enum class DualDomain { square, triangle };

const char* to_string(DualDomain d);

struct DualOptions {
  DualDomain domain = DualDomain::square;
  std::optional<double> delta_fn;  // override of the inner accuracy
};

struct DualResult {
  std::vector<double> x;
  DualPoint lambda;
  bool certified = false;
  double f_value = 0.0;
  CertificateResidual residual;
  double A = 0.0;
  double delta_fn = 0.0;
  double grad_error = 0.0;     // Delta
  double dual_L = 0.0;         // Lipschitz bound of phi
  double dual_M = 0.0;         // M^2 / mu
  int inner_solves = 0;
  Solution outer;              // run of the 2D method on -phi
};

DualResult dual_solve(const DualProblem& p, double eps, const DualOptions& opt = {});

}  // namespace hopt

#endif  // HOPT_DUAL_HPP

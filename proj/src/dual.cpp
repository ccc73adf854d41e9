#include "hopt/dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "hopt/triangle.hpp"

namespace hopt {

void DualProblem::validate_and_complete() {
  const std::size_t n = q.dim();
  if (n == 0 || q.hi.size() != n) throw ProblemFormatError("box bounds must be non-empty and of equal length");
  for (std::size_t i = 0; i < n; ++i)
    if (!(q.lo[i] <= q.hi[i])) throw ProblemFormatError("box lower bound exceeds upper bound");
  if (f.dim() != n || g1.dim() != n || g2.dim() != n)
    throw ProblemFormatError("objective and constraints must match the box dimension");
  if (mu == 0.0) mu = f.strong_convexity();
  if (!(mu > 0.0)) throw ProblemFormatError("objective must be strongly convex (mu > 0)");
  if (M1 == 0.0) M1 = g1.gradient_norm_bound(q);
  if (M2 == 0.0) M2 = g2.gradient_norm_bound(q);
  if (!(M1 >= 0.0) || !(M2 >= 0.0)) throw ProblemFormatError("constraint Lipschitz constants must be >= 0");
  if (slater_point) {
    if (slater_point->size() != n) throw ProblemFormatError("Slater point has wrong dimension");
    if (!(g1.value(*slater_point) < 0.0) || !(g2.value(*slater_point) < 0.0))
      throw ProblemFormatError("Slater point is not strictly feasible");
  }
  if (A && !(*A > 0.0)) throw ProblemFormatError("dual bound A must be positive");
}

InnerSolution inner_solve(const DualProblem& p, DualPoint lam, double delta_fn, const std::vector<double>* warm_start,
                          int max_iterations) {
  if (!(delta_fn > 0.0)) throw InnerSolveError("inner accuracy must be positive");
  const std::size_t n = p.dim();
  const double smooth = p.f.smoothness_bound(p.q) + lam.lambda1 * p.g1.smoothness_bound(p.q) +
                        lam.lambda2 * p.g2.smoothness_bound(p.q);
  const double step = 1.0 / std::max(smooth, p.mu);

  std::vector<double> x = warm_start ? *warm_start : p.q.center();
  p.q.project(x);
  std::vector<double> g(n), tmp(n), y(n);
  auto lagrangian_grad = [&](const std::vector<double>& at, std::vector<double>& out) {
    p.f.gradient(at, out);
    p.g1.gradient(at, tmp);
    for (std::size_t i = 0; i < n; ++i) out[i] += lam.lambda1 * tmp[i];
    p.g2.gradient(at, tmp);
    for (std::size_t i = 0; i < n; ++i) out[i] += lam.lambda2 * tmp[i];
  };

  InnerSolution out;
  for (int k = 0; k < max_iterations; ++k) {
    lagrangian_grad(x, g);
    double mapping_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = x[i] - step * g[i];
    }
    p.q.project(y);
    for (std::size_t i = 0; i < n; ++i) {
      const double gi = (x[i] - y[i]) / step;
      mapping_sq += gi * gi;
    }
    const double gap = mapping_sq / (2.0 * p.mu);
    std::swap(x, y);
    if (gap <= delta_fn) {
      out.x = x;
      out.gap_bound = gap;
      out.iterations = k + 1;
      out.lagrangian = p.f.value(x) + lam.lambda1 * p.g1.value(x) + lam.lambda2 * p.g2.value(x);
      return out;
    }
  }
  throw InnerSolveError("inner solve hit its iteration cap before the accuracy certificate");
}

DualEval dual_value_and_grad(const DualProblem& p, DualPoint lam, double delta_fn) {
  DualEval e;
  e.inner = inner_solve(p, lam, delta_fn);
  e.phi = e.inner.lagrangian;
  e.grad = {p.g1.value(e.inner.x), p.g2.value(e.inner.x)};
  return e;
}

CertificateResidual certificate_residual(const DualProblem& p, DualPoint lam, const std::vector<double>& x) {
  const double a = p.g1.value(x);
  const double b = p.g2.value(x);
  return {std::abs(lam.lambda1 * a + lam.lambda2 * b), std::max(a, b)};
}

bool certificate(const DualProblem& p, DualPoint lam, const std::vector<double>& x, double eps) {
  const CertificateResidual r = certificate_residual(p, lam, x);
  return r.complementarity <= eps && r.max_violation <= eps;
}

double dual_bound_from_slater(const DualProblem& p, const std::vector<double>& slater, double min_f_lower) {
  const double slack = std::min(-p.g1.value(slater), -p.g2.value(slater));
  if (!(slack > 0.0)) throw ProblemFormatError("Slater point is not strictly feasible");
  return (p.f.value(slater) - min_f_lower) / slack;
}

double dual_gradient_error(const DualProblem& p, double delta_fn) {
  return std::hypot(p.M1, p.M2) * std::sqrt(2.0 * delta_fn / p.mu);
}

const char* to_string(DualDomain d) { return d == DualDomain::square ? "square" : "triangle"; }

namespace {

double residual_score(const CertificateResidual& r) { return std::max(r.complementarity, std::max(r.max_violation, 0.0)); }

struct Candidate {
  DualPoint lambda;
  std::vector<double> x;
  CertificateResidual residual;
};

/// -phi as a 2D objective. Every inner solution is checked against the
/// certificate; the first certified one is kept and raises `certified`.
class NegatedDual final : public Objective {
 public:
  NegatedDual(const DualProblem& p, double delta_fn, double eps) : p_(p), delta_fn_(delta_fn), eps_(eps) {}

  double value(Point2 lam) const override { return -evaluate(lam).phi; }
  Vec2 gradient(Point2 lam) const override {
    const DualEval& e = evaluate(lam);
    return {-e.grad.x1, -e.grad.x2};
  }

  bool certified() const { return certified_.has_value(); }
  const std::optional<Candidate>& certified_candidate() const { return certified_; }
  const std::optional<Candidate>& best_candidate() const { return best_; }
  int inner_solves() const { return inner_solves_; }

 private:
  const DualEval& evaluate(Point2 lam) const {
    if (cached_lambda_ && *cached_lambda_ == lam) return cached_;
    const DualPoint dp{lam.x1, lam.x2};
    cached_.inner = inner_solve(p_, dp, delta_fn_, warm_.empty() ? nullptr : &warm_);
    cached_.phi = cached_.inner.lagrangian;
    cached_.grad = {p_.g1.value(cached_.inner.x), p_.g2.value(cached_.inner.x)};
    cached_lambda_ = lam;
    warm_ = cached_.inner.x;
    ++inner_solves_;

    Candidate c{dp, cached_.inner.x, certificate_residual(p_, dp, cached_.inner.x)};
    if (!certified_ && c.residual.complementarity <= eps_ && c.residual.max_violation <= eps_) certified_ = c;
    if (!best_ || residual_score(c.residual) < residual_score(best_->residual)) best_ = std::move(c);
    return cached_;
  }

  const DualProblem& p_;
  double delta_fn_;
  double eps_;
  mutable std::optional<Point2> cached_lambda_;
  mutable DualEval cached_;
  mutable std::vector<double> warm_;
  mutable std::optional<Candidate> certified_;
  mutable std::optional<Candidate> best_;
  mutable int inner_solves_ = 0;
};

}  // namespace

DualResult dual_solve(const DualProblem& problem, double eps, const DualOptions& opt) {
  if (!(eps > 0.0)) throw BudgetError("eps must be positive");
  DualProblem p = problem;
  p.validate_and_complete();

  DualResult res;
  res.dual_M = (p.M1 * p.M1 + p.M2 * p.M2) / p.mu;
  const auto [r1lo, r1hi] = p.g1.range(p.q);
  const auto [r2lo, r2hi] = p.g2.range(p.q);
  res.dual_L = std::hypot(std::max(std::abs(r1lo), std::abs(r1hi)), std::max(std::abs(r2lo), std::abs(r2hi)));
  if (!(res.dual_L > 0.0)) res.dual_L = std::numeric_limits<double>::min();

  // lambda = 0: unconstrained minimum over Q, also the lower bound for A
  const double first_delta = opt.delta_fn.value_or(eps);
  const InnerSolution at_zero = inner_solve(p, {0.0, 0.0}, first_delta);
  res.inner_solves = 1;
  if (certificate(p, {0.0, 0.0}, at_zero.x, eps)) {
    res.x = at_zero.x;
    res.lambda = {0.0, 0.0};
    res.certified = true;
    res.residual = certificate_residual(p, res.lambda, res.x);
    res.f_value = p.f.value(res.x);
    res.delta_fn = first_delta;
    res.grad_error = dual_gradient_error(p, first_delta);
    res.A = p.A.value_or(0.0);
    res.outer.point = {0.0, 0.0};
    res.outer.value = -at_zero.lagrangian;
    res.outer.trace.method = std::string("dual-") + to_string(opt.domain);
    res.outer.trace.function = "dual";
    res.outer.trace.eps = eps;
    res.outer.trace.stop_reason = StopReason::certificate;
    return res;
  }

  if (p.A) {
    res.A = *p.A;
  } else if (p.slater_point) {
    res.A = dual_bound_from_slater(p, *p.slater_point, at_zero.lagrangian - at_zero.gap_bound);
  } else {
    throw ProblemFormatError("dual bound A needs either A or a Slater point");
  }

  // split the inexactness budget: 2 Delta = rhs / 2, the rest for the line searches
  double delta_fn = eps;
  if (opt.delta_fn) {
    delta_fn = *opt.delta_fn;
  } else if (eps < res.dual_L * res.A * std::sqrt(2.0)) {
    const double rhs = inexact_budget_rhs(res.dual_L, res.A, eps);
    const double M = std::hypot(p.M1, p.M2);
    if (M > 0.0) {
      const double arg = (rhs / 4.0) / M;
      delta_fn = std::min(eps, 0.5 * p.mu * arg * arg);
    }
  }
  res.delta_fn = delta_fn;
  res.grad_error = dual_gradient_error(p, delta_fn);

  auto objective = std::make_shared<NegatedDual>(p, delta_fn, eps);
  Oracle oracle{"dual", objective, res.dual_L, res.dual_M, std::nullopt};
  SolveOptions so;
  so.grad_error_cap = res.grad_error;
  so.stop_requested = [&objective] { return objective->certified(); };

  if (opt.domain == DualDomain::square) {
    res.outer = solve(oracle, AxisBox::square({0.5 * res.A, 0.5 * res.A}, 0.5 * res.A), eps, so);
  } else {
    res.outer = solve_triangle(oracle, RightTriangle::make({0.0, 0.0}, res.A), eps, so);
  }
  res.outer.trace.method = std::string("dual-") + to_string(opt.domain);

  if (objective->certified()) {
    const Candidate& c = *objective->certified_candidate();
    res.x = c.x;
    res.lambda = c.lambda;
    res.certified = true;
    res.outer.trace.stop_reason = StopReason::certificate;
  } else {
    // evaluate the returned dual point, then fall back to the best residual seen
    objective->gradient(res.outer.point);
    const Candidate& c = objective->certified() ? *objective->certified_candidate() : *objective->best_candidate();
    res.x = c.x;
    res.lambda = c.lambda;
    res.certified = objective->certified();
  }
  res.residual = certificate_residual(p, res.lambda, res.x);
  res.f_value = p.f.value(res.x);
  res.inner_solves += objective->inner_solves();
  return res;
}

}  // namespace hopt

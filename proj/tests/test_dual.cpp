#include <doctest.h>

#include <cmath>
#include <random>

#include "hopt/dual.hpp"
#include "referee.hpp"

using namespace hopt;

namespace {

TermSum quad(std::vector<double> w, std::vector<double> c) {
  const std::size_t n = c.size();
  return TermSum(n, {QuadraticTerm{std::move(w), std::move(c)}});
}

TermSum affine(std::vector<double> a, double b) {
  const std::size_t n = a.size();
  return TermSum(n, {AffineTerm{std::move(a), b}});
}

// min |x - c|^2 on [-1,1]^2 s.t. x1 <= 0.2, x1 + x2 <= 0.5
DualProblem toy(Point2 c = {1, 1}) {
  DualProblem p;
  p.q = Box{{-1, -1}, {1, 1}};
  p.f = quad({1, 1}, {c.x1, c.x2});
  p.g1 = affine({1, 0}, -0.2);
  p.g2 = affine({1, 1}, -0.5);
  p.slater_point = std::vector<double>{0, 0};
  p.validate_and_complete();
  return p;
}

// separable five-dimensional problem with disjoint constraint supports
DualProblem five() {
  DualProblem p;
  p.q = Box{std::vector<double>(5, -2.0), std::vector<double>(5, 2.0)};
  p.f = quad(std::vector<double>(5, 1.0), std::vector<double>(5, 1.0));
  p.g1 = affine({1, 1, 1, 0, 0}, -1.0);
  p.g2 = affine({0, 0, 0, 1, 1}, -0.5);
  p.slater_point = std::vector<double>(5, 0.0);
  p.validate_and_complete();
  return p;
}

const double kToyFStar = 1.13;

}  // namespace

TEST_CASE("toy optimum confirmed by a dense grid") {
  const DualProblem p = toy();
  double best = INFINITY;
  Point2 at;
  const int n = 2000;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const std::vector<double> x{-1.0 + 2.0 * i / n, -1.0 + 2.0 * j / n};
      if (p.g1.value(x) > 1e-12 || p.g2.value(x) > 1e-12) continue;
      const double v = p.f.value(x);
      if (v < best) best = v, at = {x[0], x[1]};
    }
  CHECK(best == doctest::Approx(kToyFStar).epsilon(1e-9));
  CHECK(at.x1 == doctest::Approx(0.2));
  CHECK(at.x2 == doctest::Approx(0.3));
  // stationarity: 2 (x* - c) + lambda1 (1, 0) + lambda2 (1, 1) = 0 at lambda* = (0.2, 1.4)
  CHECK(2 * (0.2 - 1) + 0.2 + 1.4 == doctest::Approx(0.0));
  CHECK(2 * (0.3 - 1) + 1.4 == doctest::Approx(0.0));
}

TEST_CASE("inner problem examples") {
  DualProblem p;
  p.q = Box{{-2, -2}, {2, 2}};
  p.f = quad({1, 1}, {0, 0});
  p.g1 = affine({1, 0}, -1);
  p.g2 = affine({0, 1}, -1);
  p.validate_and_complete();
  CHECK(p.mu == 2.0);
  const InnerSolution a = inner_solve(p, {0, 0}, 1e-12);
  CHECK(a.x[0] == 0.0);
  CHECK(a.x[1] == 0.0);
  const InnerSolution b = inner_solve(p, {2, 0}, 1e-12);
  CHECK(b.x[0] == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(std::abs(b.x[1]) <= 1e-6);
  CHECK_THROWS_AS(inner_solve(p, {0, 0}, 0.0), InnerSolveError);
}

TEST_CASE("inner solve against a grid referee") {
  const DualProblem p = toy();
  const double delta = 1e-6;
  const InnerSolution s = inner_solve(p, {1, 1}, delta);
  auto lag = [&](Point2 x) {
    const std::vector<double> v{x.x1, x.x2};
    return p.f.value(v) + p.g1.value(v) + p.g2.value(v);
  };
  const auto g = referee::grid_min(lag, AxisBox::from_bounds(-1, 1, -1, 1), 200);
  CHECK(std::hypot(s.x[0] - g.at.x1, s.x[1] - g.at.x2) <= std::sqrt(2 * delta / p.mu) + 2.0 / 200);
  CHECK(s.gap_bound <= delta);
}

TEST_CASE("dual value and gradient") {
  const DualProblem p = toy();
  const DualEval z = dual_value_and_grad(p, {0, 0}, 1e-12);
  CHECK(z.phi == doctest::Approx(0.0).epsilon(1e-9));  // c lies in Q
  const DualEval s = dual_value_and_grad(p, {0.2, 1.4}, 1e-12);
  CHECK(s.inner.x[0] == doctest::Approx(0.2).epsilon(1e-5));
  CHECK(s.inner.x[1] == doctest::Approx(0.3).epsilon(1e-5));
  CHECK(std::abs(s.grad.x1) <= 1e-5);
  CHECK(std::abs(s.grad.x2) <= 1e-5);
  CHECK(s.phi == doctest::Approx(kToyFStar).epsilon(1e-8));  // strong duality
  const CertificateResidual r = certificate_residual(p, {0.2, 1.4}, s.inner.x);
  CHECK(r.complementarity <= 1e-5);
}

TEST_CASE("finite-difference dual gradient") {
  const DualProblem p = toy();
  const double dfn = 1e-10, h = 1e-4;
  const double Delta = dual_gradient_error(p, dfn);
  for (DualPoint lam : {DualPoint{0.5, 0.5}, DualPoint{0.1, 2.0}, DualPoint{1.0, 0.3}}) {
    const DualEval e = dual_value_and_grad(p, lam, dfn);
    const double d1 = (dual_value_and_grad(p, {lam.lambda1 + h, lam.lambda2}, dfn).phi -
                       dual_value_and_grad(p, {lam.lambda1 - h, lam.lambda2}, dfn).phi) / (2 * h);
    const double d2 = (dual_value_and_grad(p, {lam.lambda1, lam.lambda2 + h}, dfn).phi -
                       dual_value_and_grad(p, {lam.lambda1, lam.lambda2 - h}, dfn).phi) / (2 * h);
    const double lipschitz = (p.M1 * p.M1 + p.M2 * p.M2) / p.mu;
    CHECK(std::hypot(d1 - e.grad.x1, d2 - e.grad.x2) <= 2 * Delta + 2 * dfn / h + lipschitz * h);
  }
}

TEST_CASE("dual constants of the toy problem") {
  const DualProblem p = toy();
  CHECK(p.M1 == doctest::Approx(1.0));
  CHECK(p.M2 == doctest::Approx(std::sqrt(2.0)));
  CHECK(dual_bound_from_slater(p, {0, 0}, 0.0) == doctest::Approx(10.0));
  CHECK(dual_gradient_error(p, 2e-2) == doctest::Approx(std::sqrt(3.0) * std::sqrt(2e-2)));
}

TEST_CASE("weak duality, concavity and gradient Lipschitz probes") {
  const DualProblem p = toy();
  const double dfn = 1e-9;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> lam(0.0, 5.0), u(-1.0, 1.0);
  // feasible points of the primal
  std::vector<std::vector<double>> feasible;
  while (feasible.size() < 200) {
    std::vector<double> x{u(rng), u(rng)};
    if (p.g1.value(x) <= 0 && p.g2.value(x) <= 0) feasible.push_back(x);
  }
  const double lipschitz = (p.M1 * p.M1 + p.M2 * p.M2) / p.mu;
  const double Delta = dual_gradient_error(p, dfn);
  for (int k = 0; k < 100; ++k) {
    const DualPoint a{lam(rng), lam(rng)}, b{lam(rng), lam(rng)};
    const DualPoint m{(a.lambda1 + b.lambda1) / 2, (a.lambda2 + b.lambda2) / 2};
    const DualEval ea = dual_value_and_grad(p, a, dfn), eb = dual_value_and_grad(p, b, dfn),
                   em = dual_value_and_grad(p, m, dfn);
    for (const auto& x : feasible) CHECK(ea.phi - ea.inner.gap_bound <= p.f.value(x) + 1e-12);
    CHECK(em.phi >= (ea.phi + eb.phi) / 2 - 2 * dfn);
    const double dist = std::hypot(a.lambda1 - b.lambda1, a.lambda2 - b.lambda2);
    CHECK(distance(ea.grad, eb.grad) <= lipschitz * dist + 2 * Delta);
  }
}

TEST_CASE("certificate examples") {
  const DualProblem p = toy();
  CHECK(certificate(p, {0, 0}, {0, 0}, 1e-9));
  CHECK(certificate_residual(p, {0, 0}, {0, 0}).complementarity == 0.0);
  const InnerSolution near = inner_solve(p, {0.2001, 1.3999}, 1e-12);
  CHECK(certificate(p, {0.2001, 1.3999}, near.x, 1e-3));
  CHECK_FALSE(certificate(p, {50, 50}, {-1, -1}, 1e-3));
  CHECK_FALSE(certificate(p, {0, 0}, {1, 1}, 1e-3));  // infeasible
}

TEST_CASE("toy problem through the dual") {
  const DualProblem p = toy();
  const double eps = 1e-3;
  const DualResult sq = dual_solve(p, eps);
  REQUIRE(sq.certified);
  CHECK(sq.A == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(sq.f_value - kToyFStar <= eps + sq.delta_fn);
  CHECK(sq.residual.max_violation <= eps);
  CHECK(sq.outer.trace.counters.full_grad_calls == 0);

  DualOptions tri_opt;
  tri_opt.domain = DualDomain::triangle;
  const DualResult tri = dual_solve(p, eps, tri_opt);
  REQUIRE(tri.certified);
  CHECK(tri.f_value - kToyFStar <= eps + tri.delta_fn);
  CHECK(std::abs(tri.f_value - sq.f_value) <= 2 * eps);
  CHECK(tri.outer.trace.method == "dual-triangle");
}

TEST_CASE("inactive constraints certify at zero") {
  const DualProblem p = toy({-0.5, -0.5});
  const DualResult r = dual_solve(p, 1e-3);
  CHECK(r.certified);
  CHECK(r.lambda.lambda1 == 0.0);
  CHECK(r.lambda.lambda2 == 0.0);
  CHECK(r.inner_solves == 1);
  CHECK(r.x[0] == doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("five-dimensional separable problem") {
  const DualProblem p = five();
  // projections onto x1 + x2 + x3 <= 1 and x4 + x5 <= 0.5
  const double f_star = 3 * (2.0 / 3) * (2.0 / 3) + 2 * 0.75 * 0.75;
  for (DualDomain d : {DualDomain::square, DualDomain::triangle}) {
    DualOptions opt;
    opt.domain = d;
    const DualResult r = dual_solve(p, 1e-3, opt);
    CAPTURE(to_string(d));
    REQUIRE(r.certified);
    CHECK(r.f_value - f_star <= 1e-3 + r.delta_fn);
    CHECK(r.residual.max_violation <= 1e-3);
    CHECK(r.lambda.lambda1 == doctest::Approx(4.0 / 3).epsilon(0.05));
    CHECK(r.lambda.lambda2 == doctest::Approx(1.5).epsilon(0.05));
  }
}

TEST_CASE("problem validation") {
  DualProblem flat = toy();
  flat.f = affine({1, 1}, 0);
  flat.mu = 0;
  CHECK_THROWS_AS(flat.validate_and_complete(), ProblemFormatError);
  DualProblem bad_slater = toy();
  bad_slater.slater_point = std::vector<double>{0.9, 0.9};
  CHECK_THROWS_AS(bad_slater.validate_and_complete(), ProblemFormatError);
  DualProblem no_bound = toy();
  no_bound.slater_point.reset();
  CHECK_THROWS_AS(dual_solve(no_bound, 1e-3), ProblemFormatError);
  CHECK_THROWS_AS(dual_solve(toy(), 0.0), BudgetError);
}

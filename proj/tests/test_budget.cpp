#include <doctest.h>

#include <cmath>

#include "hopt/budget.hpp"

using namespace hopt;

namespace {
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
}  // namespace

TEST_CASE("iteration count") {
  CHECK(required_iterations(2 * kSqrt2, 1, 1) == 3);
  CHECK(required_iterations(1, 1, 2 * kSqrt2) == 0);
  CHECK(required_iterations(10, 4, 5e-3) == 15);
  CHECK(required_iterations(1, 1, 10) == 0);
  CHECK(required_iterations(1, 1, 1e-9) == static_cast<int>(std::ceil(std::log2(2 * kSqrt2 / 1e-9))));
  CHECK_THROWS_AS(required_iterations(1, 1, 0), BudgetError);
  CHECK_THROWS_AS(required_iterations(-1, 1, 1), BudgetError);
}

TEST_CASE("iteration count meets the diagonal condition") {
  for (double eps : {1e-1, 3e-2, 1e-4, 7e-7}) {
    const double L = 3.3, R = 2.5;
    const int n = required_iterations(L, R, eps);
    CHECK(L * R * kSqrt2 / std::ldexp(1.0, n) <= eps / 2 * (1 + 1e-12));
    if (n > 0) CHECK(L * R * kSqrt2 / std::ldexp(1.0, n - 1) > eps / 2);
  }
}

TEST_CASE("line-search accuracy") {
  const double eps = kSqrt2 / 2;
  CHECK(required_delta(1, 1, 1, eps) == doctest::Approx(eps / (kSqrt2 + kSqrt5)).epsilon(1e-14));
  CHECK(required_delta(1, 1, 1, eps) == doctest::Approx(0.193713).epsilon(1e-5));
  CHECK(std::isinf(required_delta(0, 1, 1, 0.1)));
  const double d1 = required_delta(2, 3, 1, 1e-6);
  const double d2 = required_delta(2, 3, 1, 5e-7);
  CHECK(d2 / d1 == doctest::Approx(0.5).epsilon(1e-6));
  CHECK_THROWS_AS(required_delta(1, 1, 1, 2.0), BudgetError);
  CHECK_THROWS_AS(inexact_budget_rhs(1, 1, 0.0), BudgetError);
}

TEST_CASE("inexact budget trade-off") {
  const double M = 3, L = 5, R = 2, eps = 1e-3;
  const double rhs = inexact_budget_rhs(L, R, eps);
  const double delta = required_delta(M, L, R, eps);
  CHECK(M * delta == doctest::Approx(rhs).epsilon(1e-15));
  CHECK(inexact_budget_ok(M, L, R, eps, delta, 0.0));
  CHECK(inexact_budget_ok(M, L, R, eps, 0.0, rhs / 2));
  CHECK_FALSE(inexact_budget_ok(M, L, R, eps, 0.0, rhs / 2 + 1e-12));
  CHECK_FALSE(inexact_budget_ok(M, L, R, eps, 1.01 * delta, 0.0));
}

TEST_CASE("accumulated error bound") {
  CHECK(accumulated_error_bound(2, 1, 0.1, 0) == 0.0);
  CHECK(accumulated_error_bound(2, 1, 0.1, 1) == doctest::Approx(0.1 * (kSqrt2 + kSqrt5)));
  CHECK(accumulated_error_bound(2, 1, 0.1, 60) == doctest::Approx(0.2 * (kSqrt2 + kSqrt5)));
}

#ifndef HOPT_TRIANGLE_HPP
#define HOPT_TRIANGLE_HPP

#include "hopt/halving.hpp"

namespace hopt {

/// Halving on a right isosceles triangle. Each iteration cuts along the
/// x2-parallel midline and, if the trapezoid survives, along the
/// x1-parallel one; once a square survives after i iterations the square
/// method takes over for the remaining n - i iterations. The oracle
/// constants must hold on the triangle's bounding square.
Solution solve_triangle(const Oracle& o, const RightTriangle& t, double eps, const SolveOptions& opt = {});

}  // namespace hopt

#endif  // HOPT_TRIANGLE_HPP

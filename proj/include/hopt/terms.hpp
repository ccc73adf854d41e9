#ifndef HOPT_TERMS_HPP
#define HOPT_TERMS_HPP

#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace hopt {

class ProblemFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-coordinate bounds of a box in R^n.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const { return lo.size(); }
  void project(std::span<double> x) const;
  bool contains(std::span<const double> x, double tol = 0.0) const;
  std::vector<double> center() const;
};

/// sum_i w_i (x_i - c_i)^2 with w_i >= 0
struct QuadraticTerm {
  std::vector<double> weight;
  std::vector<double> center;
};

/// a . x + b
struct AffineTerm {
  std::vector<double> coef;
  double constant = 0.0;
};

/// s * exp(a . x + b) with s >= 0
struct ExpTerm {
  double scale = 1.0;
  std::vector<double> coef;
  double constant = 0.0;
};

using Term = std::variant<QuadraticTerm, AffineTerm, ExpTerm>;

/// Convex function given as a sum of separable quadratic, affine and
/// exponential-affine terms.
class TermSum {
 public:
  TermSum() = default;
  TermSum(std::size_t dim, std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }

  double value(std::span<const double> x) const;
  void gradient(std::span<const double> x, std::span<double> out) const;

  /// Interval enclosing the function's range over the box.
  std::pair<double, double> range(const Box& q) const;
  /// Upper bound on the gradient norm over the box (a Lipschitz constant).
  double gradient_norm_bound(const Box& q) const;
  /// Upper bound on the Hessian spectral norm over the box.
  double smoothness_bound(const Box& q) const;
  /// Strong convexity modulus contributed by the quadratic terms.
  double strong_convexity() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

}  // namespace hopt

#endif  // HOPT_TERMS_HPP

#include "hopt/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace hopt {
namespace {

// Root of a strictly increasing function on [lo, hi].
template <class F>
double bisect_increasing(F f, double lo, double hi) {
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Oracle make_oracle(std::string name, std::shared_ptr<const Objective> fn, double L, double M,
                   std::optional<std::array<double, 2>> per_axis = std::nullopt) {
  return Oracle{std::move(name), std::move(fn), L, M, per_axis};
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  const double e = std::exp(1.0);

  // (x1 - 1)^2 + x2^4 on [-3, 1]^2.
  // grad = (2(x1 - 1), 4 x2^3): |.| <= (8, 108) on the square, so L = hypot(8, 108).
  // Hessian diag(2, 12 x2^2): M = 108; along horizontal segments only the
  // x1 derivative moves (M_h = 2), along vertical ones M_v = 108.
  {
    auto fn = std::make_shared<LambdaObjective>(
        [](Point2 x) { return (x.x1 - 1.0) * (x.x1 - 1.0) + std::pow(x.x2, 4); },
        [](Point2 x) { return Vec2{2.0 * (x.x1 - 1.0), 4.0 * x.x2 * x.x2 * x.x2}; });
    out.push_back({"quartic", "(x1-1)^2 + x2^4",
                   make_oracle("quartic", fn, std::hypot(8.0, 108.0), 108.0, std::array{2.0, 108.0}),
                   AxisBox::from_bounds(-3, 1, -3, 1), true, Point2{1.0, 0.0}, 0.0});
  }

  // max{2x1 + 6, -x1, x2 + 3, -2x2} on [-3, 1]^2; all pieces equal 2 at (-2, -1).
  // L = largest slope norm = 2. Not smooth: M = 2 is nominal and only sizes
  // the line-search accuracy.
  {
    auto fn = std::make_shared<MaxAffine>(std::vector<AffinePiece>{
        {{2.0, 0.0}, 6.0}, {{-1.0, 0.0}, 0.0}, {{0.0, 1.0}, 3.0}, {{0.0, -2.0}, 0.0}});
    out.push_back({"maxaffine", "max{2x1+6, -x1, x2+3, -2x2}", make_oracle("maxaffine", fn, 2.0, 2.0),
                   AxisBox::from_bounds(-3, 1, -3, 1), false, Point2{-2.0, -1.0}, 2.0});
  }

  // x1 - 0.001 x2 on [0, 1]^2: constant gradient, M = 0 on both axes.
  {
    auto fn = std::make_shared<LambdaObjective>([](Point2 x) { return x.x1 - 0.001 * x.x2; },
                                                [](Point2) { return Vec2{1.0, -0.001}; });
    out.push_back({"tilted-linear", "x1 - 0.001 x2",
                   make_oracle("tilted-linear", fn, std::hypot(1.0, 0.001), 0.0, std::array{0.0, 0.0}),
                   AxisBox::from_bounds(0, 1, 0, 1), true, Point2{0.0, 1.0}, -0.001});
  }

  // |x1 - x2| + 0.9 x1 = max{1.9x1 - x2, -0.1x1 + x2} on [0, 1]^2.
  // The (1.9, -1) piece is declared first and pieces within 1e-3 of the max
  // count as active, so near the diagonal the selection points toward x2 < x1.
  // L = |(1.9, -1)|; M is nominal.
  {
    const double L = std::hypot(1.9, 1.0);
    auto fn = std::make_shared<MaxAffine>(
        std::vector<AffinePiece>{{{1.9, -1.0}, 0.0}, {{-0.1, 1.0}, 0.0}}, 1e-3);
    out.push_back({"absdiff", "|x1 - x2| + 0.9 x1", make_oracle("absdiff", fn, L, L),
                   AxisBox::from_bounds(0, 1, 0, 1), false, Point2{0.0, 0.0}, 0.0});
  }

  // (x1 + 1)^2 + x2^2 - x1 + e^x1 + e^(x2 + 1) on [-3, 1]^2.
  // grad = (2x1 + 1 + e^x1, 2x2 + e^(x2+1)); both components increase, so the
  // extremes sit at the corners: |.| <= (3 + e, 2 + e^2).
  // Hessian diag(2 + e^x1, 2 + e^(x2+1)): M = 2 + e^2, M_h = 2 + e, M_v = 2 + e^2.
  {
    auto fn = std::make_shared<LambdaObjective>(
        [](Point2 x) {
          return (x.x1 + 1.0) * (x.x1 + 1.0) + x.x2 * x.x2 - x.x1 + std::exp(x.x1) + std::exp(x.x2 + 1.0);
        },
        [](Point2 x) { return Vec2{2.0 * x.x1 + 1.0 + std::exp(x.x1), 2.0 * x.x2 + std::exp(x.x2 + 1.0)}; });
    const double a1 = bisect_increasing([](double t) { return 2.0 * t + 1.0 + std::exp(t); }, -3.0, 1.0);
    const double a2 = bisect_increasing([](double t) { return 2.0 * t + std::exp(t + 1.0); }, -3.0, 1.0);
    const Point2 xs{a1, a2};
    out.push_back({"exp-sum", "(x1+1)^2 + x2^2 - x1 + e^x1 + e^(x2+1)",
                   make_oracle("exp-sum", fn, std::hypot(3.0 + e, 2.0 + e * e), 2.0 + e * e,
                               std::array{2.0 + e, 2.0 + e * e}),
                   AxisBox::from_bounds(-3, 1, -3, 1), true, xs, fn->value(xs)});
  }

  // x1^2 + x2^2 on [-1, 1]^2: L = 2 sqrt(2), M = 2.
  {
    auto fn = std::make_shared<LambdaObjective>([](Point2 x) { return x.x1 * x.x1 + x.x2 * x.x2; },
                                                [](Point2 x) { return Vec2{2.0 * x.x1, 2.0 * x.x2}; });
    out.push_back({"sphere", "x1^2 + x2^2", make_oracle("sphere", fn, 2.0 * std::sqrt(2.0), 2.0, std::array{2.0, 2.0}),
                   AxisBox::from_bounds(-1, 1, -1, 1), true, Point2{0.0, 0.0}, 0.0});
  }

  // (x1 - 0.1)^2 + (x2 - 0.1)^2 on [0, 1]^2 (minimizer inside the unit triangle).
  // L = 2 |(0.9, 0.9)|, M = 2.
  {
    auto fn = std::make_shared<LambdaObjective>(
        [](Point2 x) { return (x.x1 - 0.1) * (x.x1 - 0.1) + (x.x2 - 0.1) * (x.x2 - 0.1); },
        [](Point2 x) { return Vec2{2.0 * (x.x1 - 0.1), 2.0 * (x.x2 - 0.1)}; });
    out.push_back({"shifted-bowl", "(x1-0.1)^2 + (x2-0.1)^2",
                   make_oracle("shifted-bowl", fn, 1.8 * std::sqrt(2.0), 2.0, std::array{2.0, 2.0}),
                   AxisBox::from_bounds(0, 1, 0, 1), true, Point2{0.1, 0.1}, 0.0});
  }

  // x1 + x2 on [0, 1]^2.
  {
    auto fn = std::make_shared<LambdaObjective>([](Point2 x) { return x.x1 + x.x2; },
                                                [](Point2) { return Vec2{1.0, 1.0}; });
    out.push_back({"plane", "x1 + x2", make_oracle("plane", fn, std::sqrt(2.0), 0.0, std::array{0.0, 0.0}),
                   AxisBox::from_bounds(0, 1, 0, 1), true, Point2{0.0, 0.0}, 0.0});
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
  for (const auto& e : corpus())
    if (e.id == id) return e;
  throw std::out_of_range("unknown function id: " + id);
}

}  // namespace hopt

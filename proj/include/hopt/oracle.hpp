#ifndef HOPT_ORACLE_HPP
#define HOPT_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopt/geometry.hpp"

namespace hopt {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A convex function of two variables with a (sub)gradient selection.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual double value(Point2 x) const = 0;
  virtual Vec2 gradient(Point2 x) const = 0;
};

/// Objective assembled from two callables.
class LambdaObjective final : public Objective {
 public:
  LambdaObjective(std::function<double(Point2)> f, std::function<Vec2(Point2)> g)
      : f_(std::move(f)), g_(std::move(g)) {}
  double value(Point2 x) const override { return f_(x); }
  Vec2 gradient(Point2 x) const override { return g_(x); }

 private:
  std::function<double(Point2)> f_;
  std::function<Vec2(Point2)> g_;
};

struct AffinePiece {
  Vec2 slope;
  double offset = 0.0;
  double operator()(Point2 x) const { return dot(slope, x) + offset; }
};

/// max_i (a_i . x + b_i). The subgradient is the slope of the first piece, in
/// declaration order, whose value is within `active_tol` of the maximum.
class MaxAffine final : public Objective {
 public:
  explicit MaxAffine(std::vector<AffinePiece> pieces, double active_tol = 0.0);
  double value(Point2 x) const override;
  Vec2 gradient(Point2 x) const override;
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  double active_tol() const { return active_tol_; }

 private:
  std::vector<AffinePiece> pieces_;
  double active_tol_;
};

/// Objective plus the constants the halving budget is computed from.
struct Oracle {
  std::string name;
  std::shared_ptr<const Objective> fn;
  double lipschitz_L = 0.0;        // |f(x) - f(y)| <= L |x - y|
  double grad_lipschitz_M = 0.0;   // |grad f(x) - grad f(y)| <= M |x - y|
  // Gradient Lipschitz constants along horizontal and vertical segments.
  std::optional<std::array<double, 2>> per_axis_M;

  double value(Point2 x) const { return fn->value(x); }
  Vec2 gradient(Point2 x) const { return fn->gradient(x); }
};

struct CallCounters {
  std::uint64_t value_calls = 0;
  std::uint64_t direction_calls = 0;
  std::uint64_t full_grad_calls = 0;

  friend bool operator==(const CallCounters&, const CallCounters&) = default;
};

enum class NoiseMode { none, random, adversarial };

const char* to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& s);

struct NoiseModel {
  NoiseMode mode = NoiseMode::none;
  double cap = 0.0;  // Delta
  std::uint64_t seed = 0;
};

/// Wraps an oracle so every reported gradient v satisfies |v - grad f| <= cap.
/// Random mode draws a direction and a magnitude in [0, cap] from a seeded
/// generator; adversarial mode spends the full cap pushing the component
/// normal to the current cut toward the opposite sign.
class PerturbedOracle {
 public:
  PerturbedOracle(const Oracle& inner, NoiseModel noise);

  const Oracle& inner() const { return inner_; }
  const NoiseModel& noise() const { return noise_; }

  /// Reported gradient at x; `cut_axis` is set for direction queries.
  Vec2 reported_gradient(Point2 x, std::optional<Axis> cut_axis);

 private:
  const Oracle& inner_;
  NoiseModel noise_;
  std::mt19937_64 rng_;
};

enum class Side { negative, positive, along, zero };

const char* to_string(Side side);

struct DirectionReading {
  Side side = Side::zero;
  double norm = 0.0;  // norm of the reported gradient
};

/// Per-run access to an oracle: counts calls and applies optional noise.
class OracleSession {
 public:
  explicit OracleSession(const Oracle& oracle, std::optional<NoiseModel> noise = std::nullopt);

  const Oracle& oracle() const { return oracle_; }
  const CallCounters& counters() const { return counters_; }
  double noise_cap() const { return perturbed_ ? perturbed_->noise().cap : 0.0; }

  double value(Point2 x);
  Vec2 full_gradient(Point2 x);
  DirectionReading direction(Point2 x, Axis cut_axis, double zero_tol);

 private:
  const Oracle& oracle_;
  std::optional<PerturbedOracle> perturbed_;
  CallCounters counters_;
};

/// Classifies the (possibly perturbed) gradient at x relative to the line
/// through `seg`: into the half-plane of smaller or larger normal coordinate,
/// parallel to it, or zero when its norm is at most `zero_tol`.
DirectionReading direction_side(OracleSession& session, Point2 x, const Segment& seg, double zero_tol);

/// Norm of the difference between the oracle gradient and a central-difference estimate.
double finite_difference_check(const Oracle& o, Point2 x, double h);

}  // namespace hopt

#endif  // HOPT_ORACLE_HPP

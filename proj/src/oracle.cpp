#include "hopt/oracle.hpp"

#include <cmath>
#include <numbers>

namespace hopt {

MaxAffine::MaxAffine(std::vector<AffinePiece> pieces, double active_tol)
    : pieces_(std::move(pieces)), active_tol_(active_tol) {
  if (pieces_.empty()) throw OracleError("max-affine objective needs at least one piece");
  if (!(active_tol_ >= 0.0)) throw OracleError("activity tolerance must be non-negative");
}

double MaxAffine::value(Point2 x) const {
  double best = pieces_.front()(x);
  for (const auto& p : pieces_) best = std::max(best, p(x));
  return best;
}

Vec2 MaxAffine::gradient(Point2 x) const {
  const double top = value(x);
  for (const auto& p : pieces_)
    if (p(x) >= top - active_tol_) return p.slope;
  return pieces_.front().slope;  // unreachable: the maximizer is always active
}

const char* to_string(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::none: return "none";
    case NoiseMode::random: return "random";
    case NoiseMode::adversarial: return "adversarial";
  }
  return "none";
}

NoiseMode noise_mode_from_string(const std::string& s) {
  if (s == "none") return NoiseMode::none;
  if (s == "random") return NoiseMode::random;
  if (s == "adversarial") return NoiseMode::adversarial;
  throw OracleError("unknown noise mode: " + s);
}

const char* to_string(Side side) {
  switch (side) {
    case Side::negative: return "negative";
    case Side::positive: return "positive";
    case Side::along: return "along";
    case Side::zero: return "zero";
  }
  return "zero";
}

PerturbedOracle::PerturbedOracle(const Oracle& inner, NoiseModel noise)
    : inner_(inner), noise_(noise), rng_(noise.seed) {
  if (!(noise_.cap >= 0.0) || !std::isfinite(noise_.cap)) throw OracleError("noise cap must be finite and >= 0");
}

Vec2 PerturbedOracle::reported_gradient(Point2 x, std::optional<Axis> cut_axis) {
  const Vec2 g = inner_.gradient(x);
  if (noise_.mode == NoiseMode::none || noise_.cap == 0.0) return g;
  if (noise_.mode == NoiseMode::random) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double a = angle(rng_);
    const double r = noise_.cap * unit(rng_);
    return g + Vec2{r * std::cos(a), r * std::sin(a)};
  }
  if (cut_axis) {
    // flip the normal component whenever the cap allows it
    const double gn = normal_component(g, *cut_axis);
    const double push = gn > 0.0 ? -noise_.cap : noise_.cap;
    return *cut_axis == Axis::horizontal ? Vec2{g.x1, g.x2 + push} : Vec2{g.x1 + push, g.x2};
  }
  const double n = norm(g);
  if (n == 0.0) return Vec2{noise_.cap, 0.0};
  return g - (noise_.cap / n) * g;
}

OracleSession::OracleSession(const Oracle& oracle, std::optional<NoiseModel> noise) : oracle_(oracle) {
  if (!oracle_.fn) throw OracleError("oracle has no objective");
  if (noise && noise->mode != NoiseMode::none) perturbed_.emplace(oracle_, *noise);
}

double OracleSession::value(Point2 x) {
  ++counters_.value_calls;
  return oracle_.value(x);
}

Vec2 OracleSession::full_gradient(Point2 x) {
  ++counters_.full_grad_calls;
  const Vec2 g = perturbed_ ? perturbed_->reported_gradient(x, std::nullopt) : oracle_.gradient(x);
  if (!std::isfinite(g.x1) || !std::isfinite(g.x2)) throw OracleError("non-finite gradient");
  return g;
}

DirectionReading OracleSession::direction(Point2 x, Axis cut_axis, double zero_tol) {
  ++counters_.direction_calls;
  const Vec2 v = perturbed_ ? perturbed_->reported_gradient(x, cut_axis) : oracle_.gradient(x);
  if (!std::isfinite(v.x1) || !std::isfinite(v.x2)) throw OracleError("non-finite gradient");
  DirectionReading r;
  r.norm = norm(v);
  if (r.norm <= zero_tol) {
    r.side = Side::zero;
  } else {
    const double vn = normal_component(v, cut_axis);
    r.side = vn > 0.0 ? Side::positive : vn < 0.0 ? Side::negative : Side::along;
  }
  return r;
}

DirectionReading direction_side(OracleSession& session, Point2 x, const Segment& seg, double zero_tol) {
  return session.direction(x, seg.axis, zero_tol);
}

double finite_difference_check(const Oracle& o, Point2 x, double h) {
  if (!(h > 0.0)) throw OracleError("finite-difference step must be positive");
  const Vec2 g = o.gradient(x);
  const double d1 = (o.value({x.x1 + h, x.x2}) - o.value({x.x1 - h, x.x2})) / (2.0 * h);
  const double d2 = (o.value({x.x1, x.x2 + h}) - o.value({x.x1, x.x2 - h})) / (2.0 * h);
  return norm(g - Vec2{d1, d2});
}

}  // namespace hopt

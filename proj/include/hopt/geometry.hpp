#ifndef HOPT_GEOMETRY_HPP
#define HOPT_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace hopt {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Gradients and displacements share the point representation.
using Vec2 = Point2;

inline Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x1, s * a.x2}; }
inline double dot(Vec2 a, Vec2 b) { return a.x1 * b.x1 + a.x2 * b.x2; }
inline double norm(Vec2 a) { return std::hypot(a.x1, a.x2); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

enum class Axis { horizontal, vertical };

const char* to_string(Axis axis);

/// Component of `v` normal to a segment with the given orientation.
inline double normal_component(Vec2 v, Axis axis) {
  return axis == Axis::horizontal ? v.x2 : v.x1;
}

/// Axis-aligned rectangle stored as center + half extents, so halving is exact.
struct AxisBox {
  Point2 center;
  double half_width = 0.0;
  double half_height = 0.0;

  static AxisBox make(Point2 center, double half_width, double half_height);
  static AxisBox square(Point2 center, double half_side) { return make(center, half_side, half_side); }
  static AxisBox from_bounds(double lo1, double hi1, double lo2, double hi2);

  bool is_square() const { return half_width == half_height; }
  double width() const { return 2.0 * half_width; }
  double height() const { return 2.0 * half_height; }
  double area() const { return 4.0 * half_width * half_height; }
  double diagonal() const { return 2.0 * std::hypot(half_width, half_height); }
  double lo1() const { return center.x1 - half_width; }
  double hi1() const { return center.x1 + half_width; }
  double lo2() const { return center.x2 - half_height; }
  double hi2() const { return center.x2 + half_height; }
  bool contains(Point2 p, double tol = 0.0) const;
  Point2 clamp(Point2 p) const;

  friend bool operator==(const AxisBox&, const AxisBox&) = default;
};

struct Segment {
  Point2 a;
  Point2 b;
  Axis axis = Axis::horizontal;

  double length() const { return distance(a, b); }
  Point2 at(double t) const { return a + t * (b - a); }
  Point2 midpoint() const { return at(0.5); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Sign pair telling in which direction each leg leaves the right-angle vertex.
struct Orientation {
  int s1 = 1;
  int s2 = 1;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Right isosceles triangle with legs parallel to the coordinate axes.
struct RightTriangle {
  Point2 vertex;  // right-angle vertex
  double leg = 0.0;
  Orientation orientation;

  static RightTriangle make(Point2 vertex, double leg, Orientation orientation = {});

  /// Right-angle vertex, end of the x1-leg, end of the x2-leg.
  std::array<Point2, 3> vertices() const;
  double area() const { return 0.5 * leg * leg; }
  Point2 centroid() const;
  bool contains(Point2 p, double tol = 0.0) const;
  /// Smallest axis box containing the triangle.
  AxisBox bounding_box() const;

  friend bool operator==(const RightTriangle&, const RightTriangle&) = default;
};

/// A right triangle with the half-leg corner at the end of its x1-leg removed
/// (what survives the first midline cut when the far triangle is discarded).
struct Trapezoid {
  RightTriangle parent;

  std::array<Point2, 4> vertices() const;
  double area() const { return 0.375 * parent.leg * parent.leg; }
  bool contains(Point2 p, double tol = 0.0) const;

  friend bool operator==(const Trapezoid&, const Trapezoid&) = default;
};

using Region = std::variant<AxisBox, RightTriangle, Trapezoid>;

const char* region_kind(const Region& r);
double area(const Region& r);
bool contains(const Region& r, Point2 p, double tol = 0.0);
/// Representative interior point (box center, triangle centroid, trapezoid vertex average).
Point2 representative_point(const Region& r);

Segment horizontal_cut(const AxisBox& box);
Segment vertical_cut(const AxisBox& box);

/// Halves of `box` split by its center cut: (lower, upper) or (left, right).
std::pair<AxisBox, AxisBox> split(const AxisBox& box, const Segment& seg);

/// Midline cuts of a right triangle: the x2-parallel one first, then the x1-parallel one.
std::pair<Segment, Segment> triangle_midline_cuts(const RightTriangle& t);

struct TrianglePieces {
  Region near;       // trapezoid after the first cut, square after the second
  RightTriangle far;  // homothetic triangle with half the leg
};

/// Splits a triangle (first midline) or a trapezoid (second midline).
TrianglePieces triangle_split(const Region& piece, const Segment& seg);

}  // namespace hopt

#endif  // HOPT_GEOMETRY_HPP

#include "hopt/geometry.hpp"

#include <algorithm>

namespace hopt {

const char* to_string(Axis axis) { return axis == Axis::horizontal ? "horizontal" : "vertical"; }

AxisBox AxisBox::make(Point2 center, double half_width, double half_height) {
  if (!std::isfinite(center.x1) || !std::isfinite(center.x2))
    throw GeometryError("box center must be finite");
  if (!(half_width > 0.0) || !(half_height > 0.0) || !std::isfinite(half_width) ||
      !std::isfinite(half_height))
    throw GeometryError("box half extents must be positive and finite");
  return AxisBox{center, half_width, half_height};
}

AxisBox AxisBox::from_bounds(double lo1, double hi1, double lo2, double hi2) {
  return make({0.5 * (lo1 + hi1), 0.5 * (lo2 + hi2)}, 0.5 * (hi1 - lo1), 0.5 * (hi2 - lo2));
}

bool AxisBox::contains(Point2 p, double tol) const {
  return std::abs(p.x1 - center.x1) <= half_width + tol && std::abs(p.x2 - center.x2) <= half_height + tol;
}

Point2 AxisBox::clamp(Point2 p) const {
  return {std::clamp(p.x1, lo1(), hi1()), std::clamp(p.x2, lo2(), hi2())};
}

RightTriangle RightTriangle::make(Point2 vertex, double leg, Orientation orientation) {
  if (!std::isfinite(vertex.x1) || !std::isfinite(vertex.x2))
    throw GeometryError("triangle vertex must be finite");
  if (!(leg > 0.0) || !std::isfinite(leg)) throw GeometryError("triangle leg must be positive and finite");
  if (std::abs(orientation.s1) != 1 || std::abs(orientation.s2) != 1)
    throw GeometryError("triangle orientation signs must be +1 or -1");
  return RightTriangle{vertex, leg, orientation};
}

std::array<Point2, 3> RightTriangle::vertices() const {
  return {vertex, Point2{vertex.x1 + orientation.s1 * leg, vertex.x2},
          Point2{vertex.x1, vertex.x2 + orientation.s2 * leg}};
}

Point2 RightTriangle::centroid() const {
  return {vertex.x1 + orientation.s1 * leg / 3.0, vertex.x2 + orientation.s2 * leg / 3.0};
}

bool RightTriangle::contains(Point2 p, double tol) const {
  // local coordinates along the legs
  const double u = orientation.s1 * (p.x1 - vertex.x1);
  const double v = orientation.s2 * (p.x2 - vertex.x2);
  return u >= -tol && v >= -tol && u + v <= leg + tol;
}

AxisBox RightTriangle::bounding_box() const {
  const double h = 0.5 * leg;
  return AxisBox::square({vertex.x1 + orientation.s1 * h, vertex.x2 + orientation.s2 * h}, h);
}

std::array<Point2, 4> Trapezoid::vertices() const {
  const auto& t = parent;
  const double h = 0.5 * t.leg;
  return {t.vertex, Point2{t.vertex.x1 + t.orientation.s1 * h, t.vertex.x2},
          Point2{t.vertex.x1 + t.orientation.s1 * h, t.vertex.x2 + t.orientation.s2 * h},
          Point2{t.vertex.x1, t.vertex.x2 + t.orientation.s2 * t.leg}};
}

bool Trapezoid::contains(Point2 p, double tol) const {
  const double u = parent.orientation.s1 * (p.x1 - parent.vertex.x1);
  return parent.contains(p, tol) && u <= 0.5 * parent.leg + tol;
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
}  // namespace

const char* region_kind(const Region& r) {
  return std::visit(overloaded{[](const AxisBox&) { return "box"; },
                               [](const RightTriangle&) { return "triangle"; },
                               [](const Trapezoid&) { return "trapezoid"; }},
                    r);
}

double area(const Region& r) {
  return std::visit([](const auto& shape) { return shape.area(); }, r);
}

bool contains(const Region& r, Point2 p, double tol) {
  return std::visit([&](const auto& shape) { return shape.contains(p, tol); }, r);
}

Point2 representative_point(const Region& r) {
  return std::visit(overloaded{[](const AxisBox& b) { return b.center; },
                               [](const RightTriangle& t) { return t.centroid(); },
                               [](const Trapezoid& z) {
                                 Point2 s{};
                                 for (const auto& v : z.vertices()) s = s + v;
                                 return 0.25 * s;
                               }},
                    r);
}

Segment horizontal_cut(const AxisBox& box) {
  return Segment{{box.lo1(), box.center.x2}, {box.hi1(), box.center.x2}, Axis::horizontal};
}

Segment vertical_cut(const AxisBox& box) {
  return Segment{{box.center.x1, box.lo2()}, {box.center.x1, box.hi2()}, Axis::vertical};
}

std::pair<AxisBox, AxisBox> split(const AxisBox& box, const Segment& seg) {
  if (seg.axis == Axis::horizontal) {
    if (!(seg == horizontal_cut(box))) throw GeometryError("segment is not the horizontal center cut of the box");
    const double q = 0.5 * box.half_height;
    return {AxisBox{{box.center.x1, box.center.x2 - q}, box.half_width, q},
            AxisBox{{box.center.x1, box.center.x2 + q}, box.half_width, q}};
  }
  if (!(seg == vertical_cut(box))) throw GeometryError("segment is not the vertical center cut of the box");
  const double q = 0.5 * box.half_width;
  return {AxisBox{{box.center.x1 - q, box.center.x2}, q, box.half_height},
          AxisBox{{box.center.x1 + q, box.center.x2}, q, box.half_height}};
}

std::pair<Segment, Segment> triangle_midline_cuts(const RightTriangle& t) {
  const double h = 0.5 * t.leg;
  const Point2 leg1_mid{t.vertex.x1 + t.orientation.s1 * h, t.vertex.x2};
  const Point2 leg2_mid{t.vertex.x1, t.vertex.x2 + t.orientation.s2 * h};
  const Point2 hyp_mid{leg1_mid.x1, leg2_mid.x2};
  return {Segment{leg1_mid, hyp_mid, Axis::vertical}, Segment{leg2_mid, hyp_mid, Axis::horizontal}};
}

TrianglePieces triangle_split(const Region& piece, const Segment& seg) {
  if (const auto* t = std::get_if<RightTriangle>(&piece)) {
    if (!(seg == triangle_midline_cuts(*t).first)) throw GeometryError("segment is not the first midline of the triangle");
    const double h = 0.5 * t->leg;
    RightTriangle far{seg.a, h, t->orientation};
    return {Trapezoid{*t}, far};
  }
  if (const auto* z = std::get_if<Trapezoid>(&piece)) {
    const auto& t = z->parent;
    if (!(seg == triangle_midline_cuts(t).second)) throw GeometryError("segment is not the second midline of the trapezoid");
    const double h = 0.5 * t.leg;
    const double q = 0.5 * h;
    AxisBox square{{t.vertex.x1 + t.orientation.s1 * q, t.vertex.x2 + t.orientation.s2 * q}, q, q};
    RightTriangle far{seg.a, h, t.orientation};
    return {square, far};
  }
  throw GeometryError("only triangles and trapezoids are split by midlines");
}

}  // namespace hopt

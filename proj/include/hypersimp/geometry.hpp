#pragma once

#include <span>
#include <vector>

namespace hypersimp::geometry {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
};

/// Sign of the orientation determinant of (a, b, c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact: a floating-point filter falls back to
/// rational arithmetic when the sign is not certified.
int orientation(const Point& a, const Point& b, const Point& c);

/// True iff the open segments cross at a single interior point. Touching at
/// an endpoint and collinear overlap are not crossings.
bool crosses_properly(const Segment& s, const Segment& t);

/// Convex hull, counterclockwise, no collinear points, starting from the
/// lowest-then-leftmost point. Fewer than 3 distinct points are returned as is
/// (deduplicated).
std::vector<Point> convex_hull(std::span<const Point> points);

/// Inside or on the boundary of a counterclockwise convex polygon.
bool in_convex_polygon(std::span<const Point> polygon, const Point& p);

/// Euclidean distance from p to the boundary of the polygon.
double boundary_distance(std::span<const Point> polygon, const Point& p);

double distance(const Point& a, const Point& b);

}  // namespace hypersimp::geometry

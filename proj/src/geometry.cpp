#include "hypersimp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypersimp::geometry {

namespace {

// (3 + 16 eps) eps, the forward error bound of the double-precision
// orientation determinant.
constexpr double kOrientErrBound = 3.3306690738754716e-16;

int exact_orientation(const Point& a, const Point& b, const Point& c) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const cpp_rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return det.sign();
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = kOrientErrBound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  if (left == 0.0 && right == 0.0) {
    // Both products vanish only if a factor is an exact zero difference.
    if ((b.x == a.x || c.y == a.y) && (b.y == a.y || c.x == a.x)) return 0;
  }
  return exact_orientation(a, b, c);
}

bool crosses_properly(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), [](const Point& l, const Point& r) {
    return l.x < r.x || (l.x == r.x && l.y < r.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;

  // Andrew's monotone chain.
  std::vector<Point> hull(2 * p.size());
  std::size_t k = 0;
  for (const auto& q : p) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], q) <= 0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    // All input points collinear: keep the two extremes.
    return {p.front(), p.back()};
  }
  auto start = std::min_element(hull.begin(), hull.end(), [](const Point& l, const Point& r) {
    return l.y < r.y || (l.y == r.y && l.x < r.x);
  });
  std::rotate(hull.begin(), start, hull.end());
  return hull;
}

bool in_convex_polygon(std::span<const Point> polygon, const Point& p) {
  const std::size_t n = polygon.size();
  if (n == 0) return false;
  if (n == 1) return polygon[0] == p;
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(polygon[i], polygon[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double boundary_distance(std::span<const Point> polygon, const Point& p) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, distance(p, {a.x + t * dx, a.y + t * dy}));
  }
  return best;
}

}  // namespace hypersimp::geometry

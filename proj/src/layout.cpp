#include "hypersimp/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hypersimp/kernels.hpp"

namespace hypersimp {

namespace {

// Uniform in [0, 1) from the raw engine output; std::uniform_real_distribution
// is not specified bit-exactly across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Layout bipartite_layout(const Hypergraph& h, std::uint64_t seed, int iterations) {
  const std::size_t nv = h.vertex_count();
  const std::size_t n = nv + h.edge_count();
  Layout out;
  out.seed = seed;
  out.iterations = iterations;
  if (n == 0) return out;

  std::vector<std::pair<std::size_t, std::size_t>> springs;
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (VertexId v : h.edges()[e].members) springs.emplace_back(v.value, nv + e);

  const double side = std::sqrt(static_cast<double>(n));
  std::mt19937_64 rng(seed);
  std::vector<Point> pos(n);
  for (auto& p : pos) {
    p.x = (unit(rng) - 0.5) * side;
    p.y = (unit(rng) - 0.5) * side;
  }

  constexpr double k = 1.0;
  const double t0 = side / 10.0;
  std::vector<Point> disp(n);
  for (int it = 0; it < iterations; ++it) {
    kernels::repulsion(pos, k, disp);
    for (auto [u, v] : springs) {
      const double dx = pos[u].x - pos[v].x;
      const double dy = pos[u].y - pos[v].y;
      const double d = std::hypot(dx, dy);
      const double f = d / k;  // |force| = d^2 / k, along the unit vector
      disp[u].x -= dx * f;
      disp[u].y -= dy * f;
      disp[v].x += dx * f;
      disp[v].y += dy * f;
    }
    const double t = t0 * (1.0 - static_cast<double>(it) / iterations);
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::hypot(disp[i].x, disp[i].y);
      if (d > 0) {
        const double step = std::min(d, t) / d;
        pos[i].x += disp[i].x * step;
        pos[i].y += disp[i].y * step;
      }
    }
  }

  Point centroid{};
  for (const auto& p : pos) {
    centroid.x += p.x;
    centroid.y += p.y;
  }
  centroid.x /= static_cast<double>(n);
  centroid.y /= static_cast<double>(n);
  for (auto& p : pos) {
    p.x -= centroid.x;
    p.y -= centroid.y;
  }
  out.vertices.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(nv));
  out.edges.assign(pos.begin() + static_cast<std::ptrdiff_t>(nv), pos.end());
  return out;
}

std::vector<HullPolygon> venn_hulls(const Hypergraph& h, const Layout& layout, double margin) {
  constexpr int segments = 2 * kArcSegmentsPerSemicircle;
  // Circumradius of the regular polygon whose inscribed circle has radius margin.
  const double radius = margin / std::cos(std::numbers::pi / segments);

  std::vector<HullPolygon> out;
  for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
    const auto& members = h.edges()[e].members;
    if (members.empty()) continue;
    std::vector<Point> points;
    for (VertexId v : members) {
      const Point& c = layout.vertices.at(v.value);
      if (margin <= 0) {
        points.push_back(c);
        continue;
      }
      for (int s = 0; s < segments; ++s) {
        const double a = 2.0 * std::numbers::pi * (s + 0.5) / segments;
        points.push_back({c.x + radius * std::cos(a), c.y + radius * std::sin(a)});
      }
    }
    out.push_back({e, geometry::convex_hull(points), margin});
  }
  return out;
}

}  // namespace hypersimp

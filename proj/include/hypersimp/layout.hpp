#pragma once

#include <cstdint>
#include <vector>

#include "hypersimp/geometry.hpp"
#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

using geometry::Point;

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultIterations = 300;
inline constexpr double kDefaultHullMargin = 0.25;
inline constexpr int kArcSegmentsPerSemicircle = 16;

/// Positions of the bipartite incidence drawing: one point per vertex and
/// one per hyperedge node, in abstract canvas units centred on the origin.
struct Layout {
  std::vector<Point> vertices;
  std::vector<Point> edges;
  std::uint64_t seed = kDefaultSeed;
  int iterations = kDefaultIterations;

  friend bool operator==(const Layout&, const Layout&) = default;
};

struct HullPolygon {
  std::uint32_t edge = 0;
  std::vector<Point> points;  // counterclockwise
  double margin = 0.0;

  friend bool operator==(const HullPolygon&, const HullPolygon&) = default;
};

/// Fruchterman-Reingold spring embedder over the incidence graph (ideal
/// edge length 1, linear cooling). Same (h, seed, iterations) gives the same
/// positions bit for bit.
Layout bipartite_layout(const Hypergraph& h, std::uint64_t seed = kDefaultSeed, int iterations = kDefaultIterations);

/// One polygon per non-empty hyperedge: the convex hull of its members
/// dilated by `margin`. Arcs are polygonized with `kArcSegmentsPerSemicircle`
/// segments per half turn and circumscribe the true arc, so every member is at
/// least `margin` away from the boundary. With margin 0, hyperedges with
/// fewer than 3 distinct member positions yield their degenerate hull.
std::vector<HullPolygon> venn_hulls(const Hypergraph& h, const Layout& layout, double margin = kDefaultHullMargin);

}  // namespace hypersimp

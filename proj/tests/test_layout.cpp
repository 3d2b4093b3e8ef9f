#include <doctest.h>

#include <cmath>

#include "hypersimp/geometry.hpp"
#include "hypersimp/layout.hpp"
#include "oracles.hpp"

using namespace hypersimp;

TEST_SUITE_BEGIN("layout");

TEST_CASE("orientation and proper crossings") {
  using geometry::crosses_properly;
  CHECK(geometry::orientation({0, 0}, {1, 0}, {0, 1}) > 0);
  CHECK(geometry::orientation({0, 0}, {1, 0}, {2, 0}) == 0);
  // Tiny but nonzero: the filter must defer to the exact fallback.
  CHECK(geometry::orientation({0.5, 0.5}, {12, 12}, {24, 24 + 1e-14}) > 0);
  CHECK(crosses_properly({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  CHECK_FALSE(crosses_properly({{0, 0}, {2, 2}}, {{2, 2}, {3, 0}}));  // shared endpoint
  CHECK_FALSE(crosses_properly({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}));  // collinear overlap
  CHECK_FALSE(crosses_properly({{0, 0}, {2, 0}}, {{1, 0}, {1, 5}}));  // T-junction
}

TEST_CASE("convex hull") {
  using geometry::convex_hull;
  const auto sq = convex_hull(std::vector<Point>{{0, 0}, {1, 1}, {1, 0}, {0, 1}, {0.5, 0.5}, {0.5, 0}});
  CHECK(sq == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(convex_hull(std::vector<Point>{{0, 0}, {0, 0}}) == std::vector<Point>{{0, 0}});
  CHECK(convex_hull(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}) == std::vector<Point>{{0, 0}, {2, 2}});
}

TEST_CASE("bipartite layout is deterministic and centred") {
  const auto h = oracle::example();
  const auto a = bipartite_layout(h);
  const auto b = bipartite_layout(h);
  CHECK(a == b);
  CHECK(a.vertices.size() == 5);
  CHECK(a.edges.size() == 3);
  CHECK(bipartite_layout(h, 7) != a);
  double sx = 0, sy = 0;
  for (const auto& p : a.vertices) sx += p.x, sy += p.y;
  for (const auto& p : a.edges) sx += p.x, sy += p.y;
  CHECK(std::abs(sx) < 1e-9);
  CHECK(std::abs(sy) < 1e-9);
  for (const auto& p : a.vertices) {
    CHECK(std::isfinite(p.x));
    CHECK(std::isfinite(p.y));
  }
  CHECK(bipartite_layout(Hypergraph{}).vertices.empty());
}

TEST_CASE("connected nodes end up near each other") {
  // Incident pairs should sit closer than the canvas diagonal on average.
  const auto h = oracle::make(8, {{0, 1, 2}, {2, 3}, {3, 4, 5}, {5, 6, 7}});
  const auto l = bipartite_layout(h);
  double incident = 0, all = 0;
  std::size_t ni = 0, na = 0;
  for (std::uint32_t e = 0; e < h.edge_count(); ++e)
    for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
      const double d = geometry::distance(l.edges[e], l.vertices[v]);
      all += d, ++na;
      if (h.contains(EdgeId{e}, VertexId{v})) incident += d, ++ni;
    }
  CHECK(incident / ni < all / na);
}

TEST_CASE("venn hulls contain members with the margin") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 10, 6);
    const auto l = bipartite_layout(h, trial, 50);
    const auto hulls = venn_hulls(h, l, 0.3);
    std::size_t nonempty = 0;
    for (const auto& e : h.edges()) nonempty += !e.members.empty();
    REQUIRE(hulls.size() == nonempty);
    for (const auto& hull : hulls) {
      CHECK(hull.points.size() >= 3);
      for (auto v : h.members(EdgeId{hull.edge})) {
        const Point& p = l.vertices[v.value];
        CHECK(geometry::in_convex_polygon(hull.points, p));
        CHECK(geometry::boundary_distance(hull.points, p) >= 0.3 - 1e-9);
      }
    }
  }
}

TEST_CASE("zero margin gives the degenerate hull") {
  const auto h = oracle::make(3, {{0}, {0, 1}});
  Layout l;
  l.vertices = {{0, 0}, {1, 0}, {5, 5}};
  l.edges = {{0, 1}, {1, 1}};
  const auto hulls = venn_hulls(h, l, 0.0);
  REQUIRE(hulls.size() == 2);
  CHECK(hulls[0].points == std::vector<Point>{{0, 0}});
  CHECK(hulls[1].points == std::vector<Point>{{0, 0}, {1, 0}});
  // A single member with a margin becomes a 32-gon.
  CHECK(venn_hulls(h, l, 1.0)[0].points.size() == 2 * kArcSegmentsPerSemicircle);
}

TEST_SUITE_END();

#include "hypersimp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypersimp/kernels.hpp"

namespace hypersimp {

Drawing incidence_drawing(const Hypergraph& h, const Layout& layout) {
  Drawing g;
  g.nodes = layout.vertices;
  g.nodes.insert(g.nodes.end(), layout.edges.begin(), layout.edges.end());
  for (std::size_t e = 0; e < h.edge_count(); ++e)
    for (VertexId v : h.edges()[e].members) g.edges.emplace_back(v.value, h.vertex_count() + e);
  return g;
}

std::uint64_t contour_intersections(std::span<const HullPolygon> hulls) {
  std::vector<geometry::Segment> segments;
  std::vector<std::uint32_t> owner;
  for (std::uint32_t i = 0; i < hulls.size(); ++i) {
    const auto& p = hulls[i].points;
    if (p.size() < 2) continue;
    // A 2-point hull is a single segment, not a closed loop.
    const std::size_t count = p.size() == 2 ? 1 : p.size();
    for (std::size_t k = 0; k < count; ++k) {
      segments.push_back({p[k], p[(k + 1) % p.size()]});
      owner.push_back(i);
    }
  }
  return kernels::count_group_crossings(segments, owner);
}

CrossingStats edge_crossings(const Drawing& g) {
  std::vector<geometry::Segment> segments;
  segments.reserve(g.edges.size());
  std::vector<double> degree(g.nodes.size(), 0.0);
  for (auto [u, v] : g.edges) {
    segments.push_back({g.nodes[u], g.nodes[v]});
    ++degree[u];
    ++degree[v];
  }
  CrossingStats out;
  out.crossings = kernels::count_crossings(segments);
  const double m = static_cast<double>(g.edges.size());
  double adjacent = 0.0;
  for (double d : degree) adjacent += d * (d - 1.0);
  out.max_crossings = m * (m - 1.0) / 2.0 - adjacent / 2.0;
  out.value = out.max_crossings > 0 ? 1.0 - static_cast<double>(out.crossings) / out.max_crossings : 1.0;
  return out;
}

double edge_crossings_metric(const Drawing& g) { return edge_crossings(g).value; }

double edge_length_variation(const Drawing& g) {
  const std::size_t m = g.edges.size();
  if (m < 2) return 0.0;
  std::vector<double> lengths;
  lengths.reserve(m);
  for (auto [u, v] : g.edges) lengths.push_back(geometry::distance(g.nodes[u], g.nodes[v]));
  double mean = 0.0;
  for (double l : lengths) mean += l;
  mean /= static_cast<double>(m);
  if (mean == 0.0) return 0.0;
  double squares = 0.0;
  for (double l : lengths) squares += (l - mean) * (l - mean);
  const double sigma = std::sqrt(squares / (static_cast<double>(m) * mean * mean));
  return sigma / std::sqrt(static_cast<double>(m - 1));
}

double minimum_angle_metric(const Drawing& g) {
  std::vector<std::vector<double>> directions(g.nodes.size());
  for (auto [u, v] : g.edges) {
    const Point& a = g.nodes[u];
    const Point& b = g.nodes[v];
    directions[u].push_back(std::atan2(b.y - a.y, b.x - a.x));
    directions[v].push_back(std::atan2(a.y - b.y, a.x - b.x));
  }
  double deviation = 0.0;
  std::size_t counted = 0;
  for (auto& dirs : directions) {
    if (dirs.size() < 2) continue;
    std::sort(dirs.begin(), dirs.end());
    double smallest = dirs.front() + 2.0 * std::numbers::pi - dirs.back();
    for (std::size_t i = 1; i < dirs.size(); ++i) smallest = std::min(smallest, dirs[i] - dirs[i - 1]);
    const double ideal = 2.0 * std::numbers::pi / static_cast<double>(dirs.size());
    deviation += std::abs((ideal - smallest) / ideal);
    ++counted;
  }
  return counted == 0 ? 1.0 : 1.0 - deviation / static_cast<double>(counted);
}

MetricsReport evaluate(const Hypergraph& h, const Layout& layout, double margin) {
  const auto hulls = venn_hulls(h, layout, margin);
  const Drawing g = incidence_drawing(h, layout);
  return {contour_intersections(hulls), edge_crossings_metric(g), edge_length_variation(g), minimum_angle_metric(g)};
}

}  // namespace hypersimp

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypersimp/geometry.hpp"
#include "hypersimp/hypergraph.hpp"
#include "hypersimp/layout.hpp"

namespace hypersimp {

/// A straight-line drawing of a simple graph.
struct Drawing {
  std::vector<Point> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// The bipartite incidence graph of h drawn with `layout`: vertices are nodes
/// 0..|V|-1, hyperedge e is node |V| + e.
Drawing incidence_drawing(const Hypergraph& h, const Layout& layout);

struct MetricsReport {
  std::uint64_t m_i = 0;
  double m_c = 1.0;
  double m_l = 0.0;
  double m_a = 1.0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// m_i: number of proper crossings between boundary segments of different hulls.
std::uint64_t contour_intersections(std::span<const HullPolygon> hulls);

struct CrossingStats {
  std::uint64_t crossings = 0;
  double max_crossings = 0.0;  // |E|(|E|-1)/2 - sum_v deg(v)(deg(v)-1)/2
  double value = 1.0;          // m_c
};

CrossingStats edge_crossings(const Drawing& g);

/// m_c = 1 - c / c_max, or 1 when c_max is 0.
double edge_crossings_metric(const Drawing& g);

/// m_l = sigma_l / sqrt(|E| - 1) with sigma_l the normalized standard
/// deviation of edge lengths; 0 when |E| < 2.
double edge_length_variation(const Drawing& g);

/// m_a = 1 - mean over nodes of degree >= 2 of |theta - theta_min| / theta,
/// theta = 360 deg / degree. 1 when no node has degree >= 2.
double minimum_angle_metric(const Drawing& g);

/// All four metrics for h drawn with `layout` and hull margin `margin`.
MetricsReport evaluate(const Hypergraph& h, const Layout& layout, double margin = kDefaultHullMargin);

}  // namespace hypersimp

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hypersimp/graph_repr.hpp"

namespace hypersimp {

/// A 0-dimensional bar born at 0. Finite bars come from minimum spanning
/// tree edges under inverted weights; essential bars (one per connected
/// component) never die and have no edge.
struct Bar {
  std::size_t id = 0;
  double length = std::numeric_limits<double>::infinity();
  std::optional<std::pair<std::size_t, std::size_t>> mst_edge;

  bool essential() const noexcept { return !mst_edge.has_value(); }

  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Finite bars first, ascending by (length, min endpoint, max endpoint); then
/// one essential bar per component.
struct Barcode {
  std::vector<Bar> bars;
  std::size_t node_count = 0;
  std::size_t component_count = 0;

  std::size_t finite_count() const noexcept { return node_count - component_count; }
  std::vector<double> finite_lengths() const;

  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// One Kruskal merge. Cluster ids below node_count are leaves (graph
/// nodes); merge k creates cluster node_count + k. Merge k is finite bar k.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;
  std::pair<std::size_t, std::size_t> mst_edge;

  friend bool operator==(const Merge&, const Merge&) = default;
};

/// Single-linkage merge forest, one binary tree per connected component.
struct Dendrogram {
  std::size_t node_count = 0;
  std::vector<Merge> merges;

  /// Cluster ids of the tree roots, ordered by smallest leaf.
  std::vector<std::size_t> roots() const;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

struct EpsilonPartition {
  double epsilon = 0.0;
  std::set<std::size_t> expanded_bars;
  std::vector<std::vector<std::size_t>> classes;  // ascending, ordered by smallest node
  std::vector<std::size_t> class_of;              // node -> class index

  friend bool operator==(const EpsilonPartition&, const EpsilonPartition&) = default;
};

struct BarcodeResult {
  Barcode barcode;
  Dendrogram dendrogram;
};

/// Kruskal over lengths 1/w with ties broken by (min node, max node).
BarcodeResult compute_barcode(const WeightedGraph& g);

/// Classes = components of the graph on the MST edges of the finite bars
/// with length <= epsilon that are not in `expanded`. Throws ParameterError
/// for negative/NaN epsilon or an expanded id that is not a finite bar.
EpsilonPartition epsilon_partition(const Dendrogram& d, double epsilon, const std::set<std::size_t>& expanded = {});

/// Right-continuous step function (breakpoint, component count), starting at
/// (0, node_count) with one step per distinct bar length.
std::vector<std::pair<double, std::size_t>> persistence_graph(const Dendrogram& d);

/// Drops finite bars of length <= epsilon; ids are renumbered densely.
Barcode simplified_barcode(const Barcode& b, double epsilon);

/// Exact bottleneck distance between barcodes of 0-born bars. A finite bar
/// may be matched to the diagonal at cost length / 2. Returns +inf when the
/// essential bar counts differ.
double bottleneck_distance(const Barcode& b1, const Barcode& b2);

}  // namespace hypersimp

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

enum class WeightScheme { Jaccard, Overlap };
enum class SingletonMode { GreyOut, Filter };

/// Undirected weighted edge between graph nodes a < b. `weight` is the
/// similarity, `length` its inverse (the distance used by the barcode).
/// Edges derived from a hypergraph also carry the exact intersection and
/// union sizes; for them `length` is computed from the integers directly so
/// that e.g. a Jaccard weight of 2/3 yields a length of exactly 1.5.
struct GraphEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;
  double length = 0.0;
  std::uint32_t shared = 0;
  std::uint32_t united = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// A simple positively weighted graph. Node i stands for hypergraph element
/// `elements[i]` (a hyperedge for line graphs, a vertex for clique expansions).
struct WeightedGraph {
  std::vector<std::uint32_t> elements;
  std::vector<std::string> labels;
  std::vector<GraphEdge> edges;  // sorted by (a, b)
  std::vector<bool> singleton;   // true for nodes without incident edges

  std::size_t node_count() const noexcept { return elements.size(); }

  /// Builds a graph from explicit similarity weights (lengths = 1 / w).
  /// Nodes are 0..n-1, labelled by index. Throws ParameterError on
  /// self-loops, parallel edges, out-of-range nodes or weights <= 0.
  static WeightedGraph from_weights(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges);

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

/// s-line graph: one node per hyperedge, nodes adjacent iff their hyperedges
/// share at least s vertices. Throws ParameterError if s < 1.
WeightedGraph line_graph(const Hypergraph& h, int s, WeightScheme scheme);

/// s-clique expansion: one node per vertex, adjacent iff the two vertices
/// co-occur in at least s hyperedges. Computed by expanding each hyperedge
/// into a clique, which agrees exactly with line_graph(dual(h), s, scheme).
WeightedGraph clique_expansion(const Hypergraph& h, int s, WeightScheme scheme);

/// Connected components of the unweighted s-line graph, as ascending
/// hyperedge lists ordered by their smallest member.
std::vector<std::vector<EdgeId>> s_connected_components(const Hypergraph& h, int s);

/// GreyOut returns g unchanged; Filter drops singleton nodes and renumbers.
WeightedGraph apply_singleton_mode(const WeightedGraph& g, SingletonMode mode);

std::string_view to_string(WeightScheme scheme);
std::string_view to_string(SingletonMode mode);
WeightScheme parse_weight_scheme(std::string_view text);
SingletonMode parse_singleton_mode(std::string_view text);

}  // namespace hypersimp

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hypersimp/graph_repr.hpp"
#include "hypersimp/hypergraph.hpp"
#include "hypersimp/persistence.hpp"

namespace hypersimp {

/// Which hypergraph elements get merged: Vertex simplification works on the
/// clique expansion, Hyperedge simplification on the line graph.
enum class Side { Vertex, Hyperedge };

std::string_view to_string(Side side);
Side parse_side(std::string_view text);

struct SimplificationParams {
  Side side = Side::Hyperedge;
  int s = 1;
  WeightScheme scheme = WeightScheme::Jaccard;
  double epsilon = 0.0;
  bool collapse_vertices = false;
  bool collapse_edges = false;
  SingletonMode singletons = SingletonMode::GreyOut;
  std::set<std::size_t> expanded_bars;

  friend bool operator==(const SimplificationParams&, const SimplificationParams&) = default;
};

/// Everything that depends on the parameters other than epsilon and the
/// expanded bars: the pre-collapsed hypergraph, its graph representation and
/// that graph's barcode.
struct GraphStage {
  Hypergraph original;
  Hypergraph collapsed;
  std::vector<MergeRecord> vertex_records;
  std::vector<MergeRecord> edge_records;
  std::vector<std::uint32_t> vertex_to_collapsed;  // original vertex -> collapsed vertex
  std::vector<std::uint32_t> edge_to_collapsed;    // original edge -> collapsed edge
  WeightedGraph graph;                             // after the singleton mode
  std::vector<std::optional<std::size_t>> element_to_node;  // collapsed element -> node, nullopt if filtered
  Barcode barcode;
  Dendrogram dendrogram;

  friend bool operator==(const GraphStage&, const GraphStage&) = default;
};

/// Maps from the partition into the simplified hypergraph. Elements of the
/// simplified side are classes; the other side keeps collapsed ids.
struct Correspondence {
  std::vector<std::optional<std::uint32_t>> vertex_to_simplified;  // original vertex ->
  std::vector<std::optional<std::uint32_t>> edge_to_simplified;    // original edge ->

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

struct SimplificationResult {
  SimplificationParams params;
  GraphStage stage;
  EpsilonPartition partition;  // over stage.graph nodes; class i is simplified element i
  Hypergraph simplified_hypergraph;
  WeightedGraph simplified_graph;
  Correspondence correspondence;

  const Hypergraph& original() const noexcept { return stage.original; }
  const Barcode& barcode() const noexcept { return stage.barcode; }

  friend bool operator==(const SimplificationResult&, const SimplificationResult&) = default;
};

/// Pre-collapse (vertices, then edges), build the graph for the side, apply
/// the singleton mode and compute the barcode. Epsilon and expanded bars in
/// `params` are ignored.
GraphStage prepare(const Hypergraph& h, const SimplificationParams& params);

/// Cut the dendrogram at params.epsilon minus params.expanded_bars and induce
/// the simplified hypergraph and graph.
SimplificationResult induce(GraphStage stage, const SimplificationParams& params);

/// The full pipeline: induce(prepare(h, p), p).
SimplificationResult simplify(const Hypergraph& h, const SimplificationParams& params);

/// Same result with a different threshold/expansion set; the barcode is reused.
SimplificationResult rethreshold(const SimplificationResult& r, double epsilon, std::set<std::size_t> expanded);

/// Undo the merge of one active bar (finite, length <= epsilon, not yet
/// expanded). Throws ParameterError otherwise.
SimplificationResult expand_bar(const SimplificationResult& r, std::size_t bar_id);

/// Inverse of expand_bar. Throws ParameterError if the bar is not expanded.
SimplificationResult collapse_bar(const SimplificationResult& r, std::size_t bar_id);

/// Original ids (of the simplified side) merged into simplified element
/// `simplified_id`, in declaration order. Throws NotFoundError.
std::vector<std::uint32_t> class_members(const SimplificationResult& r, std::uint32_t simplified_id);

/// Labels of class_members.
std::vector<std::string> class_labels(const SimplificationResult& r, std::uint32_t simplified_id);

}  // namespace hypersimp

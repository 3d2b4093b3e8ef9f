#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hypersimp {

/// Dense 0-based identifier, tagged so vertex and hyperedge ids cannot mix.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(Id, Id) = default;
};

using VertexId = Id<struct VertexTag>;
using EdgeId = Id<struct EdgeTag>;

/// External identity of a vertex or hyperedge: `name` is the unique key used
/// by file formats, `label` is what gets displayed.
struct Element {
  std::string name;
  std::string label;

  friend bool operator==(const Element&, const Element&) = default;
};

struct Hyperedge {
  std::string name;
  std::string label;
  std::vector<VertexId> members;

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// A vertex set together with a family (list, duplicates allowed) of vertex
/// subsets. Members are kept sorted and deduplicated. The vertex-to-edge
/// incidence index is rebuilt on construction and is the exact transpose of
/// the edge list, ignoring members that do not name a declared vertex (those
/// are reported by validate()).
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::vector<Element> vertices, std::vector<Hyperedge> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t incidence_count() const noexcept;

  const std::vector<Element>& vertices() const noexcept { return vertices_; }
  const std::vector<Hyperedge>& edges() const noexcept { return edges_; }

  const Element& vertex(VertexId v) const { return vertices_.at(v.value); }
  const Hyperedge& edge(EdgeId e) const { return edges_.at(e.value); }
  const std::vector<VertexId>& members(EdgeId e) const { return edges_.at(e.value).members; }

  /// The set v* of hyperedges incident to v, ascending.
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return member_index_.at(v.value); }

  bool contains(EdgeId e, VertexId v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Element> vertices_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<EdgeId>> member_index_;
};

/// Human-readable invariant violations; empty iff `h` is valid.
std::vector<std::string> validate(const Hypergraph& h);

/// Throws ValidationError listing every violation.
void require_valid(const Hypergraph& h);

/// Vertices become the hyperedges' ids, each vertex v becomes the hyperedge v*.
/// Degree-0 vertices become empty hyperedges, so dual(dual(h)) == h.
Hypergraph dual(const Hypergraph& h);

enum class ElementKind { Vertex, Edge };

struct MergeRecord {
  ElementKind kind = ElementKind::Vertex;
  std::uint32_t new_id = 0;
  std::vector<std::uint32_t> constituents;  // original ids, ascending

  friend bool operator==(const MergeRecord&, const MergeRecord&) = default;
};

struct CollapseResult {
  Hypergraph hypergraph;
  std::vector<MergeRecord> records;     // only groups of size >= 2
  std::vector<std::uint32_t> mapping;   // original id -> collapsed id
};

/// Merges vertices with identical incident-edge sets. Groups are numbered by
/// their smallest constituent, so collapsed ids preserve declaration order.
CollapseResult collapse_vertices(const Hypergraph& h);

/// Merges hyperedges with identical member sets.
CollapseResult collapse_edges(const Hypergraph& h);

/// Label of a merged element: smallest constituent label plus a count suffix,
/// or the sole constituent's label unchanged.
std::string merged_label(const std::vector<std::string>& constituent_labels);

/// Name (file-format key) of a merged element, built the same way.
std::string merged_name(const std::vector<std::string>& constituent_names);

}  // namespace hypersimp

template <class Tag>
struct std::hash<hypersimp::Id<Tag>> {
  std::size_t operator()(hypersimp::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

#include "hypersimp/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hypersimp/error.hpp"

namespace hypersimp {

Hypergraph::Hypergraph(std::vector<Element> vertices, std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), member_index_(vertices_.size()) {
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    auto& m = edges_[e].members;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    for (VertexId v : m) {
      if (v.value < member_index_.size()) member_index_[v.value].push_back(EdgeId{e});
    }
  }
}

std::size_t Hypergraph::incidence_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.members.size();
  return n;
}

bool Hypergraph::contains(EdgeId e, VertexId v) const {
  const auto& m = members(e);
  return std::binary_search(m.begin(), m.end(), v);
}

std::vector<std::string> validate(const Hypergraph& h) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    if (!seen.insert(h.vertices()[v].name).second)
      out.push_back("duplicate vertex name '" + h.vertices()[v].name + "'");
  }
  seen.clear();
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edges()[e];
    if (!seen.insert(edge.name).second) out.push_back("duplicate hyperedge name '" + edge.name + "'");
    for (VertexId v : edge.members) {
      if (v.value >= h.vertex_count()) {
        out.push_back("hyperedge '" + edge.name + "' references undeclared vertex #" + std::to_string(v.value));
      }
    }
  }
  return out;
}

void require_valid(const Hypergraph& h) {
  auto violations = validate(h);
  if (violations.empty()) return;
  std::string msg = "invalid hypergraph:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw ValidationError(msg);
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<Element> vertices;
  vertices.reserve(h.edge_count());
  for (const auto& e : h.edges()) vertices.push_back({e.name, e.label});

  std::vector<Hyperedge> edges;
  edges.reserve(h.vertex_count());
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
    Hyperedge star{h.vertices()[v].name, h.vertices()[v].label, {}};
    for (EdgeId e : h.incident_edges(VertexId{v})) star.members.push_back(VertexId{e.value});
    edges.push_back(std::move(star));
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

std::string merged_label(const std::vector<std::string>& labels) {
  if (labels.size() == 1) return labels.front();
  return *std::min_element(labels.begin(), labels.end()) + " (" + std::to_string(labels.size()) + ")";
}

std::string merged_name(const std::vector<std::string>& names) {
  if (names.size() == 1) return names.front();
  return *std::min_element(names.begin(), names.end()) + "*" + std::to_string(names.size());
}

namespace {

// Groups ids 0..n-1 by signature; groups come out ordered by first member.
std::vector<std::vector<std::uint32_t>> group_by_signature(
    const std::vector<std::vector<std::uint32_t>>& signatures) {
  std::map<std::vector<std::uint32_t>, std::size_t> slot;
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::uint32_t i = 0; i < signatures.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(signatures[i], groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(i);
  }
  return groups;
}

std::vector<MergeRecord> records_for(const std::vector<std::vector<std::uint32_t>>& groups, ElementKind kind) {
  std::vector<MergeRecord> out;
  for (std::uint32_t g = 0; g < groups.size(); ++g) {
    if (groups[g].size() >= 2) out.push_back({kind, g, groups[g]});
  }
  return out;
}

template <class Named>
Element merged_element(const std::vector<std::uint32_t>& group, const std::vector<Named>& source) {
  std::vector<std::string> names, labels;
  for (auto i : group) {
    names.push_back(source[i].name);
    labels.push_back(source[i].label);
  }
  return {merged_name(names), merged_label(labels)};
}

}  // namespace

CollapseResult collapse_vertices(const Hypergraph& h) {
  require_valid(h);
  std::vector<std::vector<std::uint32_t>> signatures(h.vertex_count());
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
    for (EdgeId e : h.incident_edges(VertexId{v})) signatures[v].push_back(e.value);
  }
  auto groups = group_by_signature(signatures);

  CollapseResult out;
  out.mapping.resize(h.vertex_count());
  std::vector<Element> vertices;
  for (std::uint32_t g = 0; g < groups.size(); ++g) {
    for (auto v : groups[g]) out.mapping[v] = g;
    vertices.push_back(merged_element(groups[g], h.vertices()));
  }
  std::vector<Hyperedge> edges;
  for (const auto& e : h.edges()) {
    Hyperedge copy{e.name, e.label, {}};
    for (VertexId v : e.members) copy.members.push_back(VertexId{out.mapping[v.value]});
    edges.push_back(std::move(copy));
  }
  out.hypergraph = Hypergraph(std::move(vertices), std::move(edges));
  out.records = records_for(groups, ElementKind::Vertex);
  return out;
}

CollapseResult collapse_edges(const Hypergraph& h) {
  require_valid(h);
  std::vector<std::vector<std::uint32_t>> signatures(h.edge_count());
  for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edges()[e].members) signatures[e].push_back(v.value);
  }
  auto groups = group_by_signature(signatures);

  CollapseResult out;
  out.mapping.resize(h.edge_count());
  std::vector<Hyperedge> edges;
  for (std::uint32_t g = 0; g < groups.size(); ++g) {
    for (auto e : groups[g]) out.mapping[e] = g;
    auto el = merged_element(groups[g], h.edges());
    edges.push_back({std::move(el.name), std::move(el.label), h.edges()[groups[g].front()].members});
  }
  out.hypergraph = Hypergraph(h.vertices(), std::move(edges));
  out.records = records_for(groups, ElementKind::Edge);
  return out;
}

}  // namespace hypersimp

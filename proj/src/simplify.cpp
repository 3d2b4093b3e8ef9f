#include "hypersimp/simplify.hpp"

#include <algorithm>
#include <numeric>

#include "hypersimp/error.hpp"

namespace hypersimp {

std::string_view to_string(Side side) { return side == Side::Vertex ? "vertex" : "edge"; }

Side parse_side(std::string_view text) {
  if (text == "vertex") return Side::Vertex;
  if (text == "edge" || text == "hyperedge") return Side::Hyperedge;
  throw ParameterError("unknown side '" + std::string(text) + "'");
}

GraphStage prepare(const Hypergraph& h, const SimplificationParams& params) {
  require_valid(h);
  if (params.s < 1) throw ParameterError("s must be a positive integer, got " + std::to_string(params.s));

  GraphStage st;
  st.original = h;
  st.collapsed = h;
  st.vertex_to_collapsed.resize(h.vertex_count());
  std::iota(st.vertex_to_collapsed.begin(), st.vertex_to_collapsed.end(), 0u);
  st.edge_to_collapsed.resize(h.edge_count());
  std::iota(st.edge_to_collapsed.begin(), st.edge_to_collapsed.end(), 0u);

  if (params.collapse_vertices) {
    auto c = collapse_vertices(st.collapsed);
    st.collapsed = std::move(c.hypergraph);
    st.vertex_records = std::move(c.records);
    st.vertex_to_collapsed = std::move(c.mapping);
  }
  if (params.collapse_edges) {
    auto c = collapse_edges(st.collapsed);
    st.collapsed = std::move(c.hypergraph);
    st.edge_records = std::move(c.records);
    st.edge_to_collapsed = std::move(c.mapping);
  }

  const WeightedGraph full = params.side == Side::Hyperedge ? line_graph(st.collapsed, params.s, params.scheme)
                                                            : clique_expansion(st.collapsed, params.s, params.scheme);
  st.graph = apply_singleton_mode(full, params.singletons);
  st.element_to_node.assign(full.node_count(), std::nullopt);
  for (std::size_t node = 0; node < st.graph.node_count(); ++node) st.element_to_node[st.graph.elements[node]] = node;

  auto bc = compute_barcode(st.graph);
  st.barcode = std::move(bc.barcode);
  st.dendrogram = std::move(bc.dendrogram);
  return st;
}

namespace {

// Simplified id of every original element on the simplified side.
std::vector<std::optional<std::uint32_t>> classes_of_originals(const GraphStage& st,
                                                               const std::vector<std::uint32_t>& to_collapsed,
                                                               const EpsilonPartition& partition) {
  std::vector<std::optional<std::uint32_t>> out(to_collapsed.size());
  for (std::size_t u = 0; u < to_collapsed.size(); ++u) {
    if (auto node = st.element_to_node[to_collapsed[u]])
      out[u] = static_cast<std::uint32_t>(partition.class_of[*node]);
  }
  return out;
}

template <class Named>
std::vector<Element> class_elements(const std::vector<std::optional<std::uint32_t>>& to_simplified,
                                    std::size_t class_count, const std::vector<Named>& originals) {
  std::vector<std::vector<std::string>> names(class_count), labels(class_count);
  for (std::size_t u = 0; u < to_simplified.size(); ++u) {
    if (!to_simplified[u]) continue;
    names[*to_simplified[u]].push_back(originals[u].name);
    labels[*to_simplified[u]].push_back(originals[u].label);
  }
  std::vector<Element> out;
  for (std::size_t c = 0; c < class_count; ++c) out.push_back({merged_name(names[c]), merged_label(labels[c])});
  return out;
}

}  // namespace

SimplificationResult induce(GraphStage stage, const SimplificationParams& params) {
  SimplificationResult r;
  r.params = params;
  r.partition = epsilon_partition(stage.dendrogram, params.epsilon, params.expanded_bars);
  r.stage = std::move(stage);
  const GraphStage& st = r.stage;
  const Hypergraph& h = st.original;
  const Hypergraph& collapsed = st.collapsed;
  const std::size_t class_count = r.partition.classes.size();

  auto& corr = r.correspondence;
  if (params.side == Side::Vertex) {
    corr.vertex_to_simplified = classes_of_originals(st, st.vertex_to_collapsed, r.partition);
    for (auto e : st.edge_to_collapsed) corr.edge_to_simplified.emplace_back(e);

    auto vertices = class_elements(corr.vertex_to_simplified, class_count, h.vertices());
    std::vector<Hyperedge> edges;
    for (const auto& e : collapsed.edges()) {
      Hyperedge out{e.name, e.label, {}};
      for (VertexId v : e.members) {
        if (auto node = st.element_to_node[v.value])
          out.members.push_back(VertexId{static_cast<std::uint32_t>(r.partition.class_of[*node])});
      }
      edges.push_back(std::move(out));
    }
    r.simplified_hypergraph = Hypergraph(std::move(vertices), std::move(edges));
  } else {
    for (auto v : st.vertex_to_collapsed) corr.vertex_to_simplified.emplace_back(v);
    corr.edge_to_simplified = classes_of_originals(st, st.edge_to_collapsed, r.partition);

    auto elements = class_elements(corr.edge_to_simplified, class_count, h.edges());
    std::vector<Hyperedge> edges;
    for (std::size_t c = 0; c < class_count; ++c) edges.push_back({elements[c].name, elements[c].label, {}});
    for (std::size_t node = 0; node < st.graph.node_count(); ++node) {
      auto& members = edges[r.partition.class_of[node]].members;
      const auto& source = collapsed.members(EdgeId{st.graph.elements[node]});
      members.insert(members.end(), source.begin(), source.end());
    }
    r.simplified_hypergraph = Hypergraph(collapsed.vertices(), std::move(edges));
  }

  r.simplified_graph = params.side == Side::Hyperedge
                           ? line_graph(r.simplified_hypergraph, params.s, params.scheme)
                           : clique_expansion(r.simplified_hypergraph, params.s, params.scheme);
  return r;
}

SimplificationResult simplify(const Hypergraph& h, const SimplificationParams& params) {
  return induce(prepare(h, params), params);
}

SimplificationResult rethreshold(const SimplificationResult& r, double epsilon, std::set<std::size_t> expanded) {
  SimplificationParams p = r.params;
  p.epsilon = epsilon;
  p.expanded_bars = std::move(expanded);
  return induce(r.stage, p);
}

SimplificationResult expand_bar(const SimplificationResult& r, std::size_t bar_id) {
  const auto& bars = r.barcode().bars;
  if (bar_id >= bars.size() || bars[bar_id].essential())
    throw ParameterError("bar " + std::to_string(bar_id) + " is not a finite bar");
  if (bars[bar_id].length > r.params.epsilon)
    throw ParameterError("bar " + std::to_string(bar_id) + " is above the current threshold");
  if (r.params.expanded_bars.contains(bar_id))
    throw ParameterError("bar " + std::to_string(bar_id) + " is already expanded");
  auto expanded = r.params.expanded_bars;
  expanded.insert(bar_id);
  return rethreshold(r, r.params.epsilon, std::move(expanded));
}

SimplificationResult collapse_bar(const SimplificationResult& r, std::size_t bar_id) {
  if (!r.params.expanded_bars.contains(bar_id))
    throw ParameterError("bar " + std::to_string(bar_id) + " is not expanded");
  auto expanded = r.params.expanded_bars;
  expanded.erase(bar_id);
  return rethreshold(r, r.params.epsilon, std::move(expanded));
}

std::vector<std::uint32_t> class_members(const SimplificationResult& r, std::uint32_t simplified_id) {
  const bool vertex_side = r.params.side == Side::Vertex;
  const std::size_t count =
      vertex_side ? r.simplified_hypergraph.vertex_count() : r.simplified_hypergraph.edge_count();
  if (simplified_id >= count) throw NotFoundError("no simplified element " + std::to_string(simplified_id));
  const auto& map = vertex_side ? r.correspondence.vertex_to_simplified : r.correspondence.edge_to_simplified;
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < map.size(); ++u)
    if (map[u] == simplified_id) out.push_back(u);
  return out;
}

std::vector<std::string> class_labels(const SimplificationResult& r, std::uint32_t simplified_id) {
  std::vector<std::string> out;
  for (auto u : class_members(r, simplified_id)) {
    out.push_back(r.params.side == Side::Vertex ? r.original().vertices()[u].label
                                                : r.original().edges()[u].label);
  }
  return out;
}

}  // namespace hypersimp

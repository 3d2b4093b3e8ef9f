#include "hypersimp/graph_repr.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypersimp/error.hpp"
#include "hypersimp/kernels.hpp"

namespace hypersimp {

namespace {

void require_s(int s) {
  if (s < 1) throw ParameterError("s must be a positive integer, got " + std::to_string(s));
}

GraphEdge weighted_edge(std::size_t a, std::size_t b, std::uint32_t shared, std::uint32_t united,
                        WeightScheme scheme) {
  GraphEdge e{a, b, 0.0, 0.0, shared, united};
  if (scheme == WeightScheme::Jaccard) {
    e.weight = static_cast<double>(shared) / static_cast<double>(united);
    e.length = static_cast<double>(united) / static_cast<double>(shared);
  } else {
    e.weight = static_cast<double>(shared);
    e.length = 1.0 / static_cast<double>(shared);
  }
  return e;
}

void flag_singletons(WeightedGraph& g) {
  g.singleton.assign(g.node_count(), true);
  for (const auto& e : g.edges) g.singleton[e.a] = g.singleton[e.b] = false;
}

}  // namespace

WeightedGraph WeightedGraph::from_weights(std::size_t n,
                                          const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
  WeightedGraph g;
  g.elements.resize(n);
  std::iota(g.elements.begin(), g.elements.end(), 0u);
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
  for (auto [a, b, w] : edges) {
    if (a >= n || b >= n || a == b) throw ParameterError("edge endpoints must be distinct nodes below n");
    if (!(w > 0.0)) throw ParameterError("edge weights must be positive");
    if (a > b) std::swap(a, b);
    g.edges.push_back({a, b, w, 1.0 / w, 0, 0});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& l, const GraphEdge& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  for (std::size_t i = 1; i < g.edges.size(); ++i) {
    if (g.edges[i].a == g.edges[i - 1].a && g.edges[i].b == g.edges[i - 1].b)
      throw ParameterError("parallel edges are not allowed");
  }
  flag_singletons(g);
  return g;
}

WeightedGraph line_graph(const Hypergraph& h, int s, WeightScheme scheme) {
  require_s(s);
  require_valid(h);
  std::vector<std::vector<std::uint32_t>> sets(h.edge_count());
  WeightedGraph g;
  for (std::uint32_t e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edges()[e].members) sets[e].push_back(v.value);
    g.elements.push_back(e);
    g.labels.push_back(h.edges()[e].label);
  }
  const auto pairs = kernels::pairwise_overlaps(sets, static_cast<std::uint32_t>(h.vertex_count()),
                                                static_cast<std::uint32_t>(s));
  g.edges.reserve(pairs.size());
  for (const auto& p : pairs) g.edges.push_back(weighted_edge(p.i, p.j, p.shared, p.united, scheme));
  flag_singletons(g);
  return g;
}

WeightedGraph clique_expansion(const Hypergraph& h, int s, WeightScheme scheme) {
  require_s(s);
  require_valid(h);
  WeightedGraph g;
  for (std::uint32_t v = 0; v < h.vertex_count(); ++v) {
    g.elements.push_back(v);
    g.labels.push_back(h.vertices()[v].label);
  }
  // Every hyperedge contributes a clique; a vertex pair's multiplicity is
  // the number of hyperedges containing both.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> together;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.members.size(); ++i)
      for (std::size_t j = i + 1; j < e.members.size(); ++j) ++together[{e.members[i].value, e.members[j].value}];
  }
  for (const auto& [pair, shared] : together) {
    if (shared < static_cast<std::uint32_t>(s)) continue;
    const auto united = static_cast<std::uint32_t>(h.incident_edges(VertexId{pair.first}).size() +
                                                   h.incident_edges(VertexId{pair.second}).size() - shared);
    g.edges.push_back(weighted_edge(pair.first, pair.second, shared, united, scheme));
  }
  flag_singletons(g);
  return g;
}

std::vector<std::vector<EdgeId>> s_connected_components(const Hypergraph& h, int s) {
  require_s(s);
  const WeightedGraph g = line_graph(h, s, WeightScheme::Overlap);
  std::vector<std::size_t> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    auto ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::vector<EdgeId>> out;
  std::vector<std::size_t> slot(g.node_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const auto r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(EdgeId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

WeightedGraph apply_singleton_mode(const WeightedGraph& g, SingletonMode mode) {
  if (mode == SingletonMode::GreyOut) return g;
  WeightedGraph out;
  std::vector<std::size_t> renumber(g.node_count(), SIZE_MAX);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.singleton[i]) continue;
    renumber[i] = out.elements.size();
    out.elements.push_back(g.elements[i]);
    out.labels.push_back(g.labels[i]);
    out.singleton.push_back(false);
  }
  for (auto e : g.edges) {
    e.a = renumber[e.a];
    e.b = renumber[e.b];
    out.edges.push_back(e);
  }
  return out;
}

std::string_view to_string(WeightScheme scheme) { return scheme == WeightScheme::Jaccard ? "jaccard" : "overlap"; }
std::string_view to_string(SingletonMode mode) { return mode == SingletonMode::GreyOut ? "greyout" : "filter"; }

WeightScheme parse_weight_scheme(std::string_view text) {
  if (text == "jaccard") return WeightScheme::Jaccard;
  if (text == "overlap") return WeightScheme::Overlap;
  throw ParameterError("unknown weight scheme '" + std::string(text) + "'");
}

SingletonMode parse_singleton_mode(std::string_view text) {
  if (text == "greyout") return SingletonMode::GreyOut;
  if (text == "filter") return SingletonMode::Filter;
  throw ParameterError("unknown singleton mode '" + std::string(text) + "'");
}

}  // namespace hypersimp

#include <doctest.h>

#include "hypersimp/error.hpp"
#include "hypersimp/graph_repr.hpp"
#include "hypersimp/io_formats.hpp"
#include "oracles.hpp"

using namespace hypersimp;
using oracle::Rational;

namespace {

std::vector<oracle::PairWeight> as_pair_weights(const WeightedGraph& g) {
  std::vector<oracle::PairWeight> out;
  for (const auto& e : g.edges)
    out.push_back({e.a, e.b, static_cast<long long>(e.shared), Rational(e.shared, e.united)});
  return out;
}

const GraphEdge* find_edge(const WeightedGraph& g, std::size_t a, std::size_t b) {
  for (const auto& e : g.edges)
    if (e.a == a && e.b == b) return &e;
  return nullptr;
}

}  // namespace

TEST_SUITE_BEGIN("graph_repr");

TEST_CASE("line graph of the example hypergraph") {
  const auto g = line_graph(oracle::example(), 1, WeightScheme::Jaccard);
  REQUIRE(g.node_count() == 3);
  REQUIRE(g.edges.size() == 3);
  const auto* e12 = find_edge(g, 0, 1);
  REQUIRE(e12);
  CHECK(e12->weight == 2.0 / 3.0);
  CHECK(e12->length == 1.5);
  CHECK(Rational(e12->shared, e12->united) == Rational(2, 3));
  CHECK(Rational(find_edge(g, 0, 2)->shared, find_edge(g, 0, 2)->united) == Rational(1, 5));
  CHECK(Rational(find_edge(g, 1, 2)->shared, find_edge(g, 1, 2)->united) == Rational(1, 4));
  CHECK(as_pair_weights(g) == oracle::brute_pair_weights(oracle::edge_sets(oracle::example()), 1));
}

TEST_CASE("clique expansion of the example hypergraph") {
  const auto h = oracle::example();
  const auto g = clique_expansion(h, 1, WeightScheme::Jaccard);
  const auto* e = find_edge(g, 0, 1);
  REQUIRE(e);
  CHECK(e->weight == 0.5);
  // All 10 vertex pairs against |vi* ∩ vj*| / |vi* ∪ vj*|.
  CHECK(as_pair_weights(g) == oracle::brute_pair_weights(oracle::vertex_sets(h), 1));
  CHECK(g.edges.size() == 6);  // v1,v2 never co-occur with v4,v5

  const auto single = clique_expansion(oracle::make(2, {{0, 1}}), 1, WeightScheme::Jaccard);
  REQUIRE(single.edges.size() == 1);
  CHECK(single.edges[0].weight == 1.0);
}

TEST_CASE("disjoint hyperedges give an edgeless graph") {
  const auto h = oracle::make(6, {{0, 1}, {2, 3}, {4, 5}});
  for (int s : {1, 2, 5}) {
    const auto g = line_graph(h, s, WeightScheme::Overlap);
    CHECK(g.edges.empty());
    CHECK(std::all_of(g.singleton.begin(), g.singleton.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("s must be positive") {
  CHECK_THROWS_AS(line_graph(oracle::example(), 0, WeightScheme::Jaccard), ParameterError);
  CHECK_THROWS_AS(clique_expansion(oracle::example(), -1, WeightScheme::Jaccard), ParameterError);
  CHECK_THROWS_AS(s_connected_components(oracle::example(), 0), ParameterError);
}

TEST_CASE("empty hyperedges never intersect") {
  const auto g = line_graph(oracle::make(2, {{}, {}, {0}}), 1, WeightScheme::Jaccard);
  CHECK(g.edges.empty());
}

TEST_CASE("s-connected components") {
  const auto h = oracle::example();
  using Comps = std::vector<std::vector<EdgeId>>;
  CHECK(s_connected_components(h, 1) == Comps{{EdgeId{0}, EdgeId{1}, EdgeId{2}}});
  CHECK(s_connected_components(h, 2) == Comps{{EdgeId{0}, EdgeId{1}}, {EdgeId{2}}});
  CHECK(s_connected_components(h, 4) == Comps{{EdgeId{0}}, {EdgeId{1}}, {EdgeId{2}}});

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = oracle::random_hypergraph(rng, 10, 8);
    const int s = 1 + trial % 3;
    const auto sets = oracle::edge_sets(r);
    const auto expected = oracle::closure_components(r.edge_count(), [&](std::size_t a, std::size_t b) {
      std::size_t k = 0;
      for (auto x : sets[a]) k += sets[b].count(x);
      return static_cast<int>(k) >= s;
    });
    std::vector<std::set<std::size_t>> got;
    for (const auto& c : s_connected_components(r, s)) {
      got.emplace_back();
      for (auto e : c) got.back().insert(e.value);
    }
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("apply_singleton_mode") {
  const auto g = WeightedGraph::from_weights(3, {{0, 1, 0.5}});
  CHECK(apply_singleton_mode(g, SingletonMode::GreyOut) == g);
  const auto f = apply_singleton_mode(g, SingletonMode::Filter);
  CHECK(f.node_count() == 2);
  CHECK(f.edges.size() == 1);

  const auto full = WeightedGraph::from_weights(2, {{0, 1, 0.5}});
  CHECK(apply_singleton_mode(full, SingletonMode::Filter) == full);
}

TEST_CASE("southern women s=4 filter removes the four secondary members") {
  const auto h = io::parse_hypergraph(oracle::read_file(oracle::data_path("southern_women.csv")), io::Format::Csv);
  const auto g = clique_expansion(h, 4, WeightScheme::Jaccard);
  const auto f = apply_singleton_mode(g, SingletonMode::Filter);
  std::set<std::string> removed;
  for (std::size_t i = 0; i < g.node_count(); ++i)
    if (g.singleton[i]) removed.insert(g.labels[i]);
  CHECK(removed == std::set<std::string>{"Dorothy Murchison", "Olivia Carleton", "Flora Price", "Pearl Oglethorpe"});
  CHECK(f.node_count() == 14);
}

TEST_CASE("weight invariants on random hypergraphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = oracle::random_hypergraph(rng, 12, 8);
    for (int s = 1; s <= 3; ++s) {
      const auto jac = line_graph(h, s, WeightScheme::Jaccard);
      const auto ovl = line_graph(h, s, WeightScheme::Overlap);
      for (const auto& e : jac.edges) {
        CHECK(e.weight > 0.0);
        CHECK(e.weight <= 1.0);
        CHECK(e.a < e.b);
      }
      for (const auto& e : ovl.edges) {
        CHECK(e.weight == static_cast<double>(e.shared));
        CHECK(e.weight >= s);
      }
      CHECK(as_pair_weights(jac) == oracle::brute_pair_weights(oracle::edge_sets(h), s));

      // Monotone in s: the (s+1)-graph keeps a subset of edges with unchanged weights.
      const auto next = line_graph(h, s + 1, WeightScheme::Jaccard);
      for (const auto& e : next.edges) {
        const auto* prev = find_edge(jac, e.a, e.b);
        REQUIRE(prev);
        CHECK(prev->weight == e.weight);
      }
    }
  }
}

TEST_CASE("collapsed overlap weight counts super-vertices") {
  // e0 and e1 share {0,1,2}; 0 and 1 have identical memberships, so after
  // collapse the shared part is 2 super-vertices.
  const auto h = oracle::make(4, {{0, 1, 2}, {0, 1, 2, 3}, {2}});
  const auto before = line_graph(h, 1, WeightScheme::Overlap);
  CHECK(find_edge(before, 0, 1)->weight == 3.0);

  const auto collapsed = collapse_vertices(h).hypergraph;
  const auto explicit_quotient = oracle::make(3, {{0, 1}, {0, 1, 2}, {1}});
  const auto after = line_graph(collapsed, 1, WeightScheme::Overlap);
  CHECK(find_edge(after, 0, 1)->weight == 2.0);
  CHECK(after.edges == line_graph(explicit_quotient, 1, WeightScheme::Overlap).edges);
}

TEST_SUITE_END();

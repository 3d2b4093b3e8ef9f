#include <doctest.h>

#include <cmath>

#include "hypersimp/error.hpp"
#include "hypersimp/persistence.hpp"
#include "oracles.hpp"

using namespace hypersimp;

namespace {

WeightedGraph path3() { return WeightedGraph::from_weights(3, {{0, 1, 1.0}, {1, 2, 0.5}}); }

double tree_length(const Barcode& b) {
  double total = 0;
  for (double l : b.finite_lengths()) total += l;
  return total;
}

}  // namespace

TEST_SUITE_BEGIN("persistence");

TEST_CASE("compute_barcode") {
  SUBCASE("five-node graph") {
    const auto [bc, dendro] = compute_barcode(oracle::five_node_graph());
    CHECK(bc.finite_count() == 4);
    CHECK(bc.component_count == 1);
    CHECK(bc.bars.front().length == 1.5);
    CHECK(*bc.bars.front().mst_edge == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(bc.bars.back().essential());
    CHECK(dendro.roots().size() == 1);
  }
  SUBCASE("single node") {
    const auto [bc, dendro] = compute_barcode(WeightedGraph::from_weights(1, {}));
    CHECK(bc.bars.size() == 1);
    CHECK(bc.bars[0].essential());
    CHECK(bc.finite_count() == 0);
  }
  SUBCASE("path a-b (1), b-c (1/2)") {
    const auto [bc, dendro] = compute_barcode(path3());
    CHECK(bc.finite_lengths() == std::vector<double>{1.0, 2.0});
    CHECK(bc.component_count == 1);
    REQUIRE(dendro.merges.size() == 2);
    CHECK(dendro.merges[0].left == 0);
    CHECK(dendro.merges[0].right == 1);
    CHECK(dendro.merges[1].left == 2);  // leaf c
    CHECK(dendro.merges[1].right == 3);  // cluster {a,b}
  }
  SUBCASE("ties break by node ids") {
    const auto [bc, dendro] = compute_barcode(WeightedGraph::from_weights(3, {{1, 2, 1.0}, {0, 2, 1.0}, {0, 1, 1.0}}));
    REQUIRE(bc.finite_count() == 2);
    CHECK(*bc.bars[0].mst_edge == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(*bc.bars[1].mst_edge == std::pair<std::size_t, std::size_t>{0, 2});
  }
}

TEST_CASE("MST total length matches spanning-forest enumeration") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 7, 0.5);
    if (g.edges.size() > 16) continue;
    const auto [bc, dendro] = compute_barcode(g);
    CHECK(tree_length(bc) == doctest::Approx(oracle::brute_force_msf_length(g)).epsilon(1e-12));
    // Count identity.
    CHECK(bc.finite_count() == g.node_count() - oracle::naive_single_linkage(g, INFINITY).size());
    CHECK(bc.bars.size() == g.node_count());
    // Heights nondecreasing from leaves to root.
    for (const auto& m : dendro.merges) {
      for (auto child : {m.left, m.right})
        if (child >= g.node_count()) CHECK(dendro.merges[child - g.node_count()].height <= m.height);
    }
  }
}

TEST_CASE("epsilon_partition") {
  const auto [bc, dendro] = compute_barcode(oracle::five_node_graph());
  SUBCASE("first bar merges nodes 0 and 1") {
    const auto p = epsilon_partition(dendro, 1.5);
    CHECK(p.classes.size() == 4);
    CHECK(p.class_of[0] == p.class_of[1]);
    CHECK(epsilon_partition(dendro, 1.4999).classes.size() == 5);
  }
  SUBCASE("extremes") {
    CHECK(epsilon_partition(dendro, 0.0).classes.size() == 5);
    CHECK(epsilon_partition(dendro, INFINITY).classes.size() == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(epsilon_partition(dendro, -1.0), ParameterError);
    CHECK_THROWS_AS(epsilon_partition(dendro, NAN), ParameterError);
    CHECK_THROWS_AS(epsilon_partition(dendro, 1.0, {4}), ParameterError);  // essential bar
  }
}

TEST_CASE("epsilon_partition equals naive single linkage") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 12);
    const auto [bc, dendro] = compute_barcode(g);
    for (double eps : {0.0, 1.0, 1.5, 2.4, 4.0, 12.0}) {
      CHECK(oracle::as_sets(epsilon_partition(dendro, eps).classes) == oracle::naive_single_linkage(g, eps));
    }
  }
}

TEST_CASE("refinement and expansion") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, 10, 0.5);
    const auto [bc, dendro] = compute_barcode(g);
    const auto fine = epsilon_partition(dendro, 1.5);
    const auto coarse = epsilon_partition(dendro, 3.0);
    for (const auto& c : fine.classes)
      for (auto node : c) CHECK(coarse.class_of[node] == coarse.class_of[c.front()]);

    // Expanding an active bar splits exactly its class, into exactly two.
    for (std::size_t bar = 0; bar < bc.finite_count(); ++bar) {
      if (bc.bars[bar].length > 3.0) continue;
      const auto split = epsilon_partition(dendro, 3.0, {bar});
      CHECK(split.classes.size() == coarse.classes.size() + 1);
      const auto [u, v] = *bc.bars[bar].mst_edge;
      CHECK(split.class_of[u] != split.class_of[v]);
      for (const auto& c : split.classes)
        for (auto node : c) CHECK(coarse.class_of[node] == coarse.class_of[c.front()]);
    }
  }
}

TEST_CASE("expanding a bar already separated by other expansions") {
  // Path 0-1-2-3 with all bars active; brute-force enumeration of the
  // partitions for every expansion set.
  const auto g = WeightedGraph::from_weights(4, {{0, 1, 1.0}, {1, 2, 0.9}, {2, 3, 0.8}});
  const auto [bc, dendro] = compute_barcode(g);
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::set<std::size_t> expanded;
    for (std::size_t b = 0; b < 3; ++b)
      if (mask & (1u << b)) expanded.insert(b);
    std::size_t expected_classes = 1 + expanded.size();
    CHECK(epsilon_partition(dendro, 10.0, expanded).classes.size() == expected_classes);
  }
}

TEST_CASE("persistence_graph") {
  {
    const auto [bc, dendro] = compute_barcode(path3());
    using Steps = std::vector<std::pair<double, std::size_t>>;
    CHECK(persistence_graph(dendro) == Steps{{0.0, 3}, {1.0, 2}, {2.0, 1}});
  }
  {
    const auto [bc, dendro] = compute_barcode(WeightedGraph::from_weights(4, {}));
    CHECK(persistence_graph(dendro) == std::vector<std::pair<double, std::size_t>>{{0.0, 4}});
  }
  {
    const auto [bc, dendro] = compute_barcode(oracle::five_node_graph());
    const auto steps = persistence_graph(dendro);
    CHECK(steps.front().second == 5);
    CHECK(steps.back().second == 1);
    for (std::size_t i = 1; i < steps.size(); ++i) CHECK(steps[i].second < steps[i - 1].second);
  }
  {
    // Three equal bars merge simultaneously.
    const auto [bc, dendro] = compute_barcode(WeightedGraph::from_weights(4, {{0, 1, 0.5}, {1, 2, 0.5}, {2, 3, 0.5}}));
    CHECK(persistence_graph(dendro) == std::vector<std::pair<double, std::size_t>>{{0.0, 4}, {2.0, 1}});
  }
}

TEST_CASE("simplified_barcode") {
  const auto [bc, dendro] = compute_barcode(path3());
  CHECK(simplified_barcode(bc, 0.0) == bc);
  CHECK(simplified_barcode(bc, 1.0).finite_lengths() == std::vector<double>{2.0});
  const auto empty = simplified_barcode(bc, 5.0);
  CHECK(empty.finite_lengths().empty());
  CHECK(empty.bars.size() == 1);
  CHECK(empty.finite_count() == 0);
}

TEST_CASE("bottleneck distance") {
  const auto bars = [](std::vector<double> lengths, std::size_t essential) {
    Barcode b;
    for (double l : lengths) b.bars.push_back({b.bars.size(), l, std::pair<std::size_t, std::size_t>{0, 1}});
    for (std::size_t i = 0; i < essential; ++i) b.bars.push_back({b.bars.size(), INFINITY, std::nullopt});
    b.component_count = essential;
    b.node_count = lengths.size() + essential;
    return b;
  };
  CHECK(bottleneck_distance(bars({1, 2}, 1), bars({1, 2}, 1)) == 0.0);
  CHECK(bottleneck_distance(bars({2}, 1), bars({3}, 1)) == 1.0);
  CHECK(bottleneck_distance(bars({2}, 1), bars({3}, 2)) == INFINITY);
  CHECK(bottleneck_distance(bars({}, 1), bars({4}, 1)) == 2.0);
  CHECK(bottleneck_distance(bars({1, 10}, 1), bars({10}, 1)) == 0.5);

  std::mt19937 rng(53);
  std::uniform_int_distribution<int> count(0, 3), len(1, 20);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> a(count(rng)), b(count(rng));
    for (auto& x : a) x = len(rng) / 4.0;
    for (auto& x : b) x = len(rng) / 4.0;
    const double d = bottleneck_distance(bars(a, 1), bars(b, 1));
    CHECK(d == oracle::brute_bottleneck(a, b));
    CHECK(d == bottleneck_distance(bars(b, 1), bars(a, 1)));
  }
}

TEST_CASE("stability of simplification") {
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> eps(0.0, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, 20);
    const auto bc = compute_barcode(g).barcode;
    const double e = eps(rng);
    CHECK(bottleneck_distance(bc, simplified_barcode(bc, e)) <= e);
  }
}

TEST_SUITE_END();

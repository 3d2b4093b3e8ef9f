#include "hypersimp/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "hypersimp/error.hpp"

namespace hypersimp {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// Classes of the union-find, each ascending, ordered by smallest member.
std::pair<std::vector<std::vector<std::size_t>>, std::vector<std::size_t>> classes_of(DisjointSets& sets,
                                                                                   std::size_t n) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = sets.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = classes.size();
      classes.emplace_back();
    }
    class_of[i] = slot[r];
    classes[slot[r]].push_back(i);
  }
  return {std::move(classes), std::move(class_of)};
}

}  // namespace

std::vector<double> Barcode::finite_lengths() const {
  std::vector<double> out;
  for (const auto& b : bars)
    if (!b.essential()) out.push_back(b.length);
  return out;
}

std::vector<std::size_t> Dendrogram::roots() const {
  std::vector<std::size_t> top(node_count);
  std::iota(top.begin(), top.end(), 0);
  DisjointSets sets(node_count);
  for (std::size_t k = 0; k < merges.size(); ++k) {
    const auto [u, v] = merges[k].mst_edge;
    sets.unite(u, v);
    top[sets.find(u)] = node_count + k;
  }
  std::vector<std::size_t> out;
  std::vector<bool> seen(node_count, false);
  for (std::size_t i = 0; i < node_count; ++i) {
    const auto r = sets.find(i);
    if (!seen[r]) {
      seen[r] = true;
      out.push_back(top[r]);
    }
  }
  return out;
}

BarcodeResult compute_barcode(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<const GraphEdge*> order;
  order.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (!(e.weight > 0.0)) throw ParameterError("barcode requires positive edge weights");
    order.push_back(&e);
  }
  std::sort(order.begin(), order.end(), [](const GraphEdge* l, const GraphEdge* r) {
    return std::tie(l->length, l->a, l->b) < std::tie(r->length, r->a, r->b);
  });

  BarcodeResult out;
  out.dendrogram.node_count = n;
  DisjointSets sets(n);
  std::vector<std::size_t> cluster(n);
  std::iota(cluster.begin(), cluster.end(), 0);
  for (const GraphEdge* e : order) {
    const auto ra = sets.find(e->a), rb = sets.find(e->b);
    if (ra == rb) continue;
    const std::size_t k = out.dendrogram.merges.size();
    out.dendrogram.merges.push_back({std::min(cluster[ra], cluster[rb]), std::max(cluster[ra], cluster[rb]),
                                     e->length, {e->a, e->b}});
    out.barcode.bars.push_back({k, e->length, std::pair{e->a, e->b}});
    sets.unite(ra, rb);
    cluster[sets.find(ra)] = n + k;
  }

  out.barcode.node_count = n;
  out.barcode.component_count = n - out.dendrogram.merges.size();
  for (std::size_t c = 0; c < out.barcode.component_count; ++c) {
    out.barcode.bars.push_back({out.barcode.bars.size(), std::numeric_limits<double>::infinity(), std::nullopt});
  }
  return out;
}

EpsilonPartition epsilon_partition(const Dendrogram& d, double epsilon, const std::set<std::size_t>& expanded) {
  if (!(epsilon >= 0.0)) throw ParameterError("epsilon must be a nonnegative number");
  for (auto id : expanded) {
    if (id >= d.merges.size()) throw ParameterError("bar " + std::to_string(id) + " is not a finite bar");
  }
  DisjointSets sets(d.node_count);
  for (std::size_t k = 0; k < d.merges.size(); ++k) {
    if (d.merges[k].height <= epsilon && !expanded.contains(k)) sets.unite(d.merges[k].mst_edge.first, d.merges[k].mst_edge.second);
  }
  EpsilonPartition out;
  out.epsilon = epsilon;
  out.expanded_bars = expanded;
  std::tie(out.classes, out.class_of) = classes_of(sets, d.node_count);
  return out;
}

std::vector<std::pair<double, std::size_t>> persistence_graph(const Dendrogram& d) {
  std::vector<std::pair<double, std::size_t>> out{{0.0, d.node_count}};
  std::size_t count = d.node_count;
  for (const auto& m : d.merges) {
    --count;
    if (out.back().first == m.height)
      out.back().second = count;
    else
      out.emplace_back(m.height, count);
  }
  return out;
}

Barcode simplified_barcode(const Barcode& b, double epsilon) {
  if (!(epsilon >= 0.0)) throw ParameterError("epsilon must be a nonnegative number");
  Barcode out;
  out.node_count = b.node_count;
  out.component_count = b.component_count;
  for (const auto& bar : b.bars) {
    if (!bar.essential() && bar.length <= epsilon) {
      --out.node_count;  // one contraction per removed bar
      continue;
    }
    Bar kept = bar;
    kept.id = out.bars.size();
    out.bars.push_back(kept);
  }
  return out;
}

namespace {

// Hopcroft-Karp maximum matching on a bipartite graph given by adjacency of
// the left side.
std::size_t maximum_matching(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count) {
  const std::size_t left_count = adj.size();
  constexpr std::size_t kFree = SIZE_MAX;
  std::vector<std::size_t> match_left(left_count, kFree), match_right(right_count, kFree), dist(left_count);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < left_count; ++u) {
      dist[u] = match_left[u] == kFree ? 0 : kFree;
      if (dist[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        const auto w = match_right[v];
        if (w == kFree)
          reachable_free = true;
        else if (dist[w] == kFree) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (auto v : adj[u]) {
      const auto w = match_right[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kFree;
    return false;
  };

  std::size_t size = 0;
  while (bfs()) {
    for (std::size_t u = 0; u < left_count; ++u)
      if (match_left[u] == kFree && dfs(dfs, u)) ++size;
  }
  return size;
}

// Left: bars of a, then diagonal slots for bars of b. Right: bars of b, then
// diagonal slots for bars of a.
bool perfect_matching_within(const std::vector<double>& a, const std::vector<double>& b, double delta) {
  const std::size_t p = a.size(), q = b.size();
  std::vector<std::vector<std::size_t>> adj(p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j)
      if (std::abs(a[i] - b[j]) <= delta) adj[i].push_back(j);
    if (a[i] / 2 <= delta) adj[i].push_back(q + i);
  }
  for (std::size_t j = 0; j < q; ++j) {
    if (b[j] / 2 <= delta) adj[p + j].push_back(j);
    for (std::size_t i = 0; i < p; ++i) adj[p + j].push_back(q + i);
  }
  return maximum_matching(adj, p + q) == p + q;
}

}  // namespace

double bottleneck_distance(const Barcode& b1, const Barcode& b2) {
  const auto essential = [](const Barcode& b) {
    return std::count_if(b.bars.begin(), b.bars.end(), [](const Bar& x) { return x.essential(); });
  };
  if (essential(b1) != essential(b2)) return std::numeric_limits<double>::infinity();

  const auto a = b1.finite_lengths();
  const auto b = b2.finite_lengths();
  std::vector<double> candidates{0.0};
  for (double x : a) candidates.push_back(x / 2);
  for (double y : b) candidates.push_back(y / 2);
  for (double x : a)
    for (double y : b) candidates.push_back(std::abs(x - y));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The optimum is attained at one of the candidate costs, and feasibility
  // is monotone in delta.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfect_matching_within(a, b, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace hypersimp

// Serial reference vs OpenMP kernels on synthetic inputs.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hypersimp/kernels.hpp"

using namespace hypersimp;
using geometry::Point;
using geometry::Segment;

namespace {

std::vector<std::vector<std::uint32_t>> random_sets(std::size_t count, std::uint32_t universe, double density) {
  std::mt19937 rng(1);
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<std::uint32_t>> sets(count);
  for (auto& s : sets)
    for (std::uint32_t v = 0; v < universe; ++v)
      if (coin(rng)) s.push_back(v);
  return sets;
}

std::vector<Segment> random_segments(std::size_t count) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> coord(0, 100);
  std::vector<Segment> out(count);
  for (auto& s : out) s = {{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
  return out;
}

std::vector<Point> random_points(std::size_t count) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coord(-20, 20);
  std::vector<Point> out(count);
  for (auto& p : out) p = {coord(rng), coord(rng)};
  return out;
}

constexpr std::uint32_t kUniverse = 2000;

void BM_Overlaps(benchmark::State& state) {
  const auto sets = random_sets(static_cast<std::size_t>(state.range(0)), kUniverse, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_overlaps(sets, kUniverse, 1));
}

void BM_OverlapsReference(benchmark::State& state) {
  const auto sets = random_sets(static_cast<std::size_t>(state.range(0)), kUniverse, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_overlaps_reference(sets, 1));
}

void BM_Crossings(benchmark::State& state) {
  const auto segs = random_segments(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_crossings(segs));
}

void BM_CrossingsReference(benchmark::State& state) {
  const auto segs = random_segments(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_crossings_reference(segs));
}

void BM_Repulsion(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)));
  std::vector<Point> disp(pts.size());
  for (auto _ : state) {
    kernels::repulsion(pts, 1.0, disp);
    benchmark::DoNotOptimize(disp.data());
  }
}

void BM_RepulsionReference(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)));
  std::vector<Point> disp(pts.size());
  for (auto _ : state) {
    kernels::repulsion_reference(pts, 1.0, disp);
    benchmark::DoNotOptimize(disp.data());
  }
}

}  // namespace

BENCHMARK(BM_Overlaps)->Arg(500)->Arg(2000);
BENCHMARK(BM_OverlapsReference)->Arg(500)->Arg(2000);
BENCHMARK(BM_Crossings)->Arg(500)->Arg(2000);
BENCHMARK(BM_CrossingsReference)->Arg(500)->Arg(2000);
BENCHMARK(BM_Repulsion)->Arg(500)->Arg(2000);
BENCHMARK(BM_RepulsionReference)->Arg(500)->Arg(2000);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_threads", std::to_string(kernels::thread_count()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}

#pragma once

// Data-parallel inner loops. Every kernel has an OpenMP version and a serial
// reference with the same contract; the reference is kept for tests and for
// the benchmark. Results are identical regardless of thread count.

#include <cstdint>
#include <span>
#include <vector>

#include "hypersimp/geometry.hpp"

namespace hypersimp::kernels {

/// Pair (i, j), i < j, of sets from one family with their intersection and
/// union sizes.
struct PairOverlap {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t shared = 0;
  std::uint32_t united = 0;

  friend bool operator==(const PairOverlap&, const PairOverlap&) = default;
};

/// Sets are sorted ascending and drawn from [0, universe). Returns every pair
/// sharing at least `min_shared` (>= 1) elements, ordered by (i, j).
std::vector<PairOverlap> pairwise_overlaps(std::span<const std::vector<std::uint32_t>> sets,
                                           std::uint32_t universe, std::uint32_t min_shared);

/// Direct pairwise sorted-set intersection; O(m^2 * set size).
std::vector<PairOverlap> pairwise_overlaps_reference(std::span<const std::vector<std::uint32_t>> sets,
                                                     std::uint32_t min_shared);

/// Number of unordered segment pairs that cross properly.
std::uint64_t count_crossings(std::span<const geometry::Segment> segments);
std::uint64_t count_crossings_reference(std::span<const geometry::Segment> segments);

/// Like count_crossings but only pairs whose group ids differ are tested.
std::uint64_t count_group_crossings(std::span<const geometry::Segment> segments,
                                    std::span<const std::uint32_t> group);
std::uint64_t count_group_crossings_reference(std::span<const geometry::Segment> segments,
                                              std::span<const std::uint32_t> group);

/// Fruchterman-Reingold repulsion: displacement[i] = sum over j != i of
/// (p_i - p_j) / |p_i - p_j| * k^2 / |p_i - p_j|. Coincident points push
/// apart along a direction fixed by their indices.
void repulsion(std::span<const geometry::Point> positions, double k, std::span<geometry::Point> displacement);
void repulsion_reference(std::span<const geometry::Point> positions, double k,
                         std::span<geometry::Point> displacement);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace hypersimp::kernels

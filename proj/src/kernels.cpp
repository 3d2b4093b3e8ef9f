#include "hypersimp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypersimp::kernels {

using geometry::Point;
using geometry::Segment;

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<PairOverlap> pairwise_overlaps(std::span<const std::vector<std::uint32_t>> sets,
                                           std::uint32_t universe, std::uint32_t min_shared) {
  const auto m = static_cast<std::int64_t>(sets.size());

  // Transpose: element -> ascending list of sets containing it.
  std::vector<std::vector<std::uint32_t>> containing(universe);
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    for (auto x : sets[i]) containing[x].push_back(i);
  }

  std::vector<std::vector<PairOverlap>> rows(sets.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> count(sets.size(), 0);
    std::vector<std::uint32_t> touched;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ii = 0; ii < m; ++ii) {
      const auto i = static_cast<std::uint32_t>(ii);
      for (auto x : sets[i]) {
        const auto& owners = containing[x];
        for (auto it = std::upper_bound(owners.begin(), owners.end(), i); it != owners.end(); ++it) {
          if (count[*it]++ == 0) touched.push_back(*it);
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = rows[i];
      for (auto j : touched) {
        const std::uint32_t shared = count[j];
        if (shared >= min_shared) {
          const auto united = static_cast<std::uint32_t>(sets[i].size() + sets[j].size() - shared);
          row.push_back({i, j, shared, united});
        }
        count[j] = 0;
      }
      touched.clear();
    }
  }

  std::vector<PairOverlap> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<PairOverlap> pairwise_overlaps_reference(std::span<const std::vector<std::uint32_t>> sets,
                                                     std::uint32_t min_shared) {
  std::vector<PairOverlap> out;
  std::vector<std::uint32_t> common;
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    for (std::uint32_t j = i + 1; j < sets.size(); ++j) {
      common.clear();
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      const auto shared = static_cast<std::uint32_t>(common.size());
      if (shared == 0 || shared < min_shared) continue;
      out.push_back({i, j, shared, static_cast<std::uint32_t>(sets[i].size() + sets[j].size() - shared)});
    }
  }
  return out;
}

std::uint64_t count_crossings(std::span<const Segment> segments) {
  const auto n = static_cast<std::int64_t>(segments.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (geometry::crosses_properly(segments[i], segments[j])) ++total;
    }
  }
  return total;
}

std::uint64_t count_crossings_reference(std::span<const Segment> segments) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      if (geometry::crosses_properly(segments[i], segments[j])) ++total;
  return total;
}

std::uint64_t count_group_crossings(std::span<const Segment> segments, std::span<const std::uint32_t> group) {
  const auto n = static_cast<std::int64_t>(segments.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (group[i] != group[j] && geometry::crosses_properly(segments[i], segments[j])) ++total;
    }
  }
  return total;
}

std::uint64_t count_group_crossings_reference(std::span<const Segment> segments,
                                              std::span<const std::uint32_t> group) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      if (group[i] != group[j] && geometry::crosses_properly(segments[i], segments[j])) ++total;
  return total;
}

namespace {

// Force on i from j. Both kernels sum j in ascending order, so the floating
// point results agree bit for bit.
inline Point push(const Point& pi, const Point& pj, std::size_t i, std::size_t j, double k2) {
  double dx = pi.x - pj.x;
  double dy = pi.y - pj.y;
  double d2 = dx * dx + dy * dy;
  if (d2 < 1e-18) {
    const double angle = 2.399963229728653 * static_cast<double>(std::min(i, j) + 1);
    const double sign = i < j ? 1.0 : -1.0;
    dx = sign * std::cos(angle) * 1e-9;
    dy = sign * std::sin(angle) * 1e-9;
    d2 = 1e-18;
  }
  const double f = k2 / d2;
  return {dx * f, dy * f};
}

}  // namespace

void repulsion(std::span<const Point> positions, double k, std::span<Point> displacement) {
  const auto n = static_cast<std::int64_t>(positions.size());
  const double k2 = k * k;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    Point acc{};
    for (std::int64_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Point f = push(positions[i], positions[j], static_cast<std::size_t>(i), static_cast<std::size_t>(j), k2);
      acc.x += f.x;
      acc.y += f.y;
    }
    displacement[i] = acc;
  }
}

void repulsion_reference(std::span<const Point> positions, double k, std::span<Point> displacement) {
  const double k2 = k * k;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    Point acc{};
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (j == i) continue;
      const Point f = push(positions[i], positions[j], i, j, k2);
      acc.x += f.x;
      acc.y += f.y;
    }
    displacement[i] = acc;
  }
}

}  // namespace hypersimp::kernels

#pragma once

#include <string>
#include <vector>

#include "hypersimp/hypergraph.hpp"
#include "hypersimp/layout.hpp"

namespace hypersimp {

/// Hybrid view: translucent hyperedge hulls, bipartite incidence edges,
/// vertex dots and hyperedge squares, all labelled.
std::string render_svg(const Hypergraph& h, const Layout& layout, const std::vector<HullPolygon>& hulls);

}  // namespace hypersimp

#include "hypersimp/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

namespace hypersimp {

namespace {

constexpr double kScale = 60.0;
constexpr double kPad = 40.0;
constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string render_svg(const Hypergraph& h, const Layout& layout, const std::vector<HullPolygon>& hulls) {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  auto extend = [&](const Point& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  };
  for (const auto& p : layout.vertices) extend(p);
  for (const auto& p : layout.edges) extend(p);
  for (const auto& hull : hulls)
    for (const auto& p : hull.points) extend(p);
  if (!(min_x <= max_x)) min_x = min_y = max_x = max_y = 0.0;

  auto sx = [&](double x) { return num((x - min_x) * kScale + kPad); };
  auto sy = [&](double y) { return num((max_y - y) * kScale + kPad); };
  const double width = (max_x - min_x) * kScale + 2 * kPad;
  const double height = (max_y - min_y) * kScale + 2 * kPad;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
                    num(height) + "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (const auto& hull : hulls) {
    const char* color = kPalette[hull.edge % kPalette.size()];
    out += "  <polygon points=\"";
    for (const auto& p : hull.points) out += sx(p.x) + "," + sy(p.y) + " ";
    out += "\" fill=\"" + std::string(color) + "\" fill-opacity=\"0.15\" stroke=\"" + color + "\"/>\n";
  }
  const std::size_t nv = h.vertex_count();
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edges()[e].members) {
      const Point& a = layout.vertices[v.value];
      const Point& b = layout.edges[e];
      out += "  <line x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) + "\" x2=\"" + sx(b.x) + "\" y2=\"" + sy(b.y) +
             "\" stroke=\"#999\"/>\n";
    }
  }
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const Point& p = layout.edges[e];
    out += "  <rect x=\"" + num((p.x - min_x) * kScale + kPad - 4) + "\" y=\"" + num((max_y - p.y) * kScale + kPad - 4) +
           "\" width=\"8\" height=\"8\" fill=\"" + kPalette[e % kPalette.size()] + "\"><title>" +
           escape(h.edges()[e].label) + "</title></rect>\n";
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const Point& p = layout.vertices[v];
    out += "  <circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"4\" fill=\"#222\"/>\n";
    out += "  <text x=\"" + num((p.x - min_x) * kScale + kPad + 6) + "\" y=\"" + sy(p.y) + "\">" +
           escape(h.vertices()[v].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hypersimp

#include "hypersimp/io_formats.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "hypersimp/error.hpp"

namespace hypersimp::io {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw ParameterError("unknown format '" + std::string(text) + "'");
}

Format format_for_path(std::string_view path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv" ? Format::Csv : Format::Json;
}

// ---------------------------------------------------------------------------
// Hypergraph documents

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view bytes, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, bytes.size()); ++i) {
    if (bytes[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string id_text(const json& id, const std::string& where) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  throw ValidationError(where + ": id must be a string or an integer");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

}  // namespace

Hypergraph hypergraph_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("hypergraph document must be a JSON object");
  const json empty = json::array();
  const json& vs = doc.contains("vertices") ? doc.at("vertices") : empty;
  const json& es = doc.contains("hyperedges") ? doc.at("hyperedges") : empty;
  if (!vs.is_array() || !es.is_array()) throw ValidationError("\"vertices\" and \"hyperedges\" must be arrays");

  std::vector<std::string> problems;
  std::vector<Element> vertices;
  std::map<std::string, std::uint32_t> vertex_index;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    std::string name = id_text(field(vs[i], "id", where), where);
    std::string label = vs[i].contains("label") ? vs[i].at("label").get<std::string>() : name;
    if (!vertex_index.emplace(name, static_cast<std::uint32_t>(vertices.size())).second)
      problems.push_back("duplicate vertex id '" + name + "'");
    vertices.push_back({std::move(name), std::move(label)});
  }

  std::vector<Hyperedge> edges;
  std::set<std::string> edge_names;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "hyperedges[" + std::to_string(i) + "]";
    Hyperedge e;
    e.name = id_text(field(es[i], "id", where), where);
    e.label = es[i].contains("label") ? es[i].at("label").get<std::string>() : e.name;
    if (!edge_names.insert(e.name).second) problems.push_back("duplicate hyperedge id '" + e.name + "'");
    const json& members = field(es[i], "members", where);
    if (!members.is_array()) throw ValidationError(where + ": \"members\" must be an array");
    for (const auto& m : members) {
      const std::string ref = id_text(m, where);
      auto it = vertex_index.find(ref);
      if (it == vertex_index.end())
        problems.push_back("hyperedge '" + e.name + "' references undeclared vertex '" + ref + "'");
      else
        e.members.push_back(VertexId{it->second});
    }
    edges.push_back(std::move(e));
  }
  if (!problems.empty()) {
    std::string msg = "invalid hypergraph document:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw ValidationError(msg);
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

json hypergraph_to_json(const Hypergraph& h) {
  json vs = json::array();
  for (const auto& v : h.vertices()) vs.push_back({{"id", v.name}, {"label", v.label}});
  json es = json::array();
  for (const auto& e : h.edges()) {
    json members = json::array();
    for (VertexId v : e.members) members.push_back(h.vertex(v).name);
    es.push_back({{"id", e.name}, {"label", e.label}, {"members", std::move(members)}});
  }
  return {{"vertices", std::move(vs)}, {"hyperedges", std::move(es)}};
}

namespace {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC 4180: comma separated, optional double quotes with "" escapes, quoted
// fields may span lines, CRLF or LF terminators.
std::vector<CsvRow> read_csv(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string cell;
  std::size_t line = 1, column = 1;
  row.line = 1;
  bool quoted = false, after_quote = false, any = false;

  auto end_cell = [&] {
    row.fields.push_back(std::move(cell));
    cell.clear();
    after_quote = false;
  };
  auto end_row = [&] {
    end_cell();
    const bool blank = row.fields.size() == 1 && row.fields[0].empty() && !any;
    if (!blank) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line + 1;
    any = false;
  };

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const char c = bytes[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          cell.push_back('"');
          ++i;
          ++column;
        } else {
          quoted = false;
          after_quote = true;
        }
      } else {
        cell.push_back(c);
        if (c == '\n') {
          ++line;
          column = 0;
        }
      }
    } else if (c == '"') {
      if (!cell.empty() || after_quote) throw ParseError("unexpected quote inside unquoted field", line, column);
      quoted = true;
      any = true;
    } else if (c == ',') {
      end_cell();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < bytes.size() && bytes[i + 1] == '\n') ++i;
      end_row();
      ++line;
      column = 0;
    } else {
      if (after_quote) throw ParseError("characters after closing quote", line, column);
      cell.push_back(c);
      any = true;
    }
    ++column;
  }
  if (quoted) throw ParseError("unterminated quoted field", line, column);
  if (any || !cell.empty()) end_row();
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

Hypergraph hypergraph_from_csv(std::string_view bytes, std::vector<std::string>* warnings) {
  const auto rows = read_csv(bytes);
  if (rows.empty()) throw ParseError("missing header 'edge,vertex'", 1, 1);
  const auto& header = rows.front();
  if (header.fields.size() != 2 || header.fields[0] != "edge" || header.fields[1] != "vertex")
    throw ParseError("header must be 'edge,vertex'", header.line, 1);

  std::vector<Element> vertices;
  std::vector<Hyperedge> edges;
  std::map<std::string, std::uint32_t> vertex_index, edge_index;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != 2 || row.fields[0].empty() || row.fields[1].empty())
      throw ParseError("row must have exactly two non-empty fields 'edge,vertex'", row.line, 1);
    const auto& [edge_name, vertex_name] = std::pair{row.fields[0], row.fields[1]};
    auto [eit, new_edge] = edge_index.try_emplace(edge_name, static_cast<std::uint32_t>(edges.size()));
    if (new_edge) edges.push_back({edge_name, edge_name, {}});
    auto [vit, new_vertex] = vertex_index.try_emplace(vertex_name, static_cast<std::uint32_t>(vertices.size()));
    if (new_vertex) vertices.push_back({vertex_name, vertex_name});
    if (!seen.emplace(eit->second, vit->second).second) {
      if (warnings)
        warnings->push_back("line " + std::to_string(row.line) + ": duplicate incidence (" + edge_name + ", " +
                            vertex_name + ") ignored");
      continue;
    }
    edges[eit->second].members.push_back(VertexId{vit->second});
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view bytes, Format format, std::vector<std::string>* warnings) {
  if (format == Format::Csv) return hypergraph_from_csv(bytes, warnings);
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(bytes, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
  try {
    return hypergraph_from_json(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("hypergraph document: ") + e.what());
  }
}

std::string serialize_hypergraph(const Hypergraph& h, Format format) {
  if (format == Format::Json) return dump(hypergraph_to_json(h));
  std::string out = "edge,vertex\n";
  for (const auto& e : h.edges())
    for (VertexId v : e.members) out += csv_field(e.name) + "," + csv_field(h.vertex(v).name) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline pieces

namespace {

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
double number_or_inf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

template <class T>
json optional_array(const std::vector<std::optional<T>>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v ? json(*v) : json(nullptr));
  return out;
}

template <class T>
std::vector<std::optional<T>> optional_vector(const json& j) {
  std::vector<std::optional<T>> out;
  for (const auto& v : j) out.push_back(v.is_null() ? std::nullopt : std::optional<T>(v.get<T>()));
  return out;
}

json records_to_json(const std::vector<MergeRecord>& records) {
  json out = json::array();
  for (const auto& r : records) out.push_back({{"new_id", r.new_id}, {"constituents", r.constituents}});
  return out;
}

std::vector<MergeRecord> records_from_json(const json& j, ElementKind kind) {
  std::vector<MergeRecord> out;
  for (const auto& r : j)
    out.push_back({kind, r.at("new_id").get<std::uint32_t>(), r.at("constituents").get<std::vector<std::uint32_t>>()});
  return out;
}

json dendrogram_tree(const Dendrogram& d, std::size_t cluster) {
  if (cluster < d.node_count) return cluster;
  const Merge& m = d.merges[cluster - d.node_count];
  return json::array({dendrogram_tree(d, m.left), dendrogram_tree(d, m.right)});
}

WeightedGraph graph_from_json(const json& j) {
  WeightedGraph g;
  for (const auto& n : j.at("nodes")) {
    g.elements.push_back(n.at("element").get<std::uint32_t>());
    g.labels.push_back(n.at("label").get<std::string>());
    g.singleton.push_back(n.at("singleton").get<bool>());
  }
  for (const auto& e : j.at("edges")) {
    g.edges.push_back({e.at("a").get<std::size_t>(), e.at("b").get<std::size_t>(), e.at("weight").get<double>(),
                       e.at("length").get<double>(), e.at("shared").get<std::uint32_t>(),
                       e.at("united").get<std::uint32_t>()});
  }
  return g;
}

Barcode barcode_from_json(const json& j) {
  Barcode b;
  b.node_count = j.at("node_count").get<std::size_t>();
  b.component_count = j.at("component_count").get<std::size_t>();
  for (const auto& bar : j.at("bars")) {
    Bar x;
    x.id = bar.at("id").get<std::size_t>();
    x.length = number_or_inf(bar.at("length"));
    if (!bar.at("mst_edge").is_null()) x.mst_edge = bar.at("mst_edge").get<std::pair<std::size_t, std::size_t>>();
    b.bars.push_back(x);
  }
  return b;
}

Dendrogram dendrogram_from_json(const json& j) {
  Dendrogram d;
  d.node_count = j.at("node_count").get<std::size_t>();
  for (const auto& m : j.at("merges")) {
    d.merges.push_back({m.at("left").get<std::size_t>(), m.at("right").get<std::size_t>(), m.at("height").get<double>(),
                        m.at("mst_edge").get<std::pair<std::size_t, std::size_t>>()});
  }
  return d;
}

EpsilonPartition partition_from_json(const json& j) {
  EpsilonPartition p;
  p.epsilon = number_or_inf(j.at("epsilon"));
  p.expanded_bars = j.at("expanded_bars").get<std::set<std::size_t>>();
  p.classes = j.at("classes").get<std::vector<std::vector<std::size_t>>>();
  p.class_of = j.at("class_of").get<std::vector<std::size_t>>();
  return p;
}

Layout layout_from_json(const json& j) {
  Layout l;
  l.seed = j.at("seed").get<std::uint64_t>();
  l.iterations = j.at("iterations").get<int>();
  for (const auto& p : j.at("vertices")) l.vertices.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  for (const auto& p : j.at("edges")) l.edges.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return l;
}

std::vector<HullPolygon> hulls_from_json(const json& j) {
  std::vector<HullPolygon> out;
  for (const auto& h : j) {
    HullPolygon poly{h.at("edge").get<std::uint32_t>(), {}, h.at("margin").get<double>()};
    for (const auto& p : h.at("points")) poly.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    out.push_back(std::move(poly));
  }
  return out;
}

MetricsReport metrics_from_json(const json& j) {
  return {j.at("m_i").get<std::uint64_t>(), j.at("m_c").get<double>(), j.at("m_l").get<double>(),
          j.at("m_a").get<double>()};
}

json points_json(const std::vector<Point>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(json::array({p.x, p.y}));
  return out;
}

}  // namespace

json params_to_json(const SimplificationParams& p) {
  return {{"side", to_string(p.side)},
          {"s", p.s},
          {"weight", to_string(p.scheme)},
          {"epsilon", finite_or_null(p.epsilon)},
          {"collapse_vertices", p.collapse_vertices},
          {"collapse_edges", p.collapse_edges},
          {"singletons", to_string(p.singletons)},
          {"expanded_bars", p.expanded_bars}};
}

SimplificationParams params_from_json(const json& doc, SimplificationParams p) {
  if (!doc.is_object()) throw ParameterError("parameters must be a JSON object");
  try {
    if (doc.contains("side")) p.side = parse_side(doc.at("side").get<std::string>());
    if (doc.contains("s")) p.s = doc.at("s").get<int>();
    if (doc.contains("weight")) p.scheme = parse_weight_scheme(doc.at("weight").get<std::string>());
    if (doc.contains("epsilon")) p.epsilon = number_or_inf(doc.at("epsilon"));
    if (doc.contains("collapse_vertices")) p.collapse_vertices = doc.at("collapse_vertices").get<bool>();
    if (doc.contains("collapse_edges")) p.collapse_edges = doc.at("collapse_edges").get<bool>();
    if (doc.contains("singletons")) p.singletons = parse_singleton_mode(doc.at("singletons").get<std::string>());
    if (doc.contains("expanded_bars")) p.expanded_bars = doc.at("expanded_bars").get<std::set<std::size_t>>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("bad parameter value: ") + e.what());
  }
  if (p.s < 1) throw ParameterError("s must be a positive integer");
  if (!(p.epsilon >= 0.0)) throw ParameterError("epsilon must be a nonnegative number");
  return p;
}

json graph_to_json(const WeightedGraph& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.node_count(); ++i)
    nodes.push_back({{"element", g.elements[i]}, {"label", g.labels[i]}, {"singleton", static_cast<bool>(g.singleton[i])}});
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}, {"length", e.length}, {"shared", e.shared},
                     {"united", e.united}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

json barcode_to_json(const Barcode& b) {
  json bars = json::array();
  for (const auto& bar : b.bars) {
    bars.push_back({{"id", bar.id},
                    {"length", finite_or_null(bar.length)},
                    {"essential", bar.essential()},
                    {"mst_edge", bar.mst_edge ? json::array({bar.mst_edge->first, bar.mst_edge->second}) : json(nullptr)}});
  }
  return {{"node_count", b.node_count}, {"component_count", b.component_count}, {"bars", std::move(bars)}};
}

json dendrogram_to_json(const Dendrogram& d) {
  json merges = json::array();
  for (const auto& m : d.merges) {
    merges.push_back({{"left", m.left},
                      {"right", m.right},
                      {"height", m.height},
                      {"mst_edge", json::array({m.mst_edge.first, m.mst_edge.second})}});
  }
  json trees = json::array();
  for (auto root : d.roots()) trees.push_back(dendrogram_tree(d, root));
  return {{"node_count", d.node_count}, {"merges", std::move(merges)}, {"trees", std::move(trees)}};
}

json partition_to_json(const EpsilonPartition& p) {
  return {{"epsilon", finite_or_null(p.epsilon)}, {"expanded_bars", p.expanded_bars}, {"classes", p.classes}, {"class_of", p.class_of}};
}

json persistence_graph_to_json(const std::vector<std::pair<double, std::size_t>>& steps) {
  json out = json::array();
  for (auto [eps, count] : steps) out.push_back({{"epsilon", eps}, {"components", count}});
  return out;
}

json correspondence_to_json(const SimplificationResult& r) {
  return {{"vertex_to_collapsed", r.stage.vertex_to_collapsed},
          {"edge_to_collapsed", r.stage.edge_to_collapsed},
          {"element_to_node", optional_array(r.stage.element_to_node)},
          {"node_to_class", r.partition.class_of},
          {"vertex_to_simplified", optional_array(r.correspondence.vertex_to_simplified)},
          {"edge_to_simplified", optional_array(r.correspondence.edge_to_simplified)}};
}

json layout_to_json(const Layout& layout, const std::vector<HullPolygon>& hulls) {
  json hull_array = json::array();
  for (const auto& h : hulls) hull_array.push_back({{"edge", h.edge}, {"margin", h.margin}, {"points", points_json(h.points)}});
  return {{"seed", layout.seed},
          {"iterations", layout.iterations},
          {"vertices", points_json(layout.vertices)},
          {"edges", points_json(layout.edges)},
          {"hulls", std::move(hull_array)}};
}

json metrics_to_json(const MetricsReport& m) {
  return {{"m_i", m.m_i}, {"m_c", m.m_c}, {"m_l", m.m_l}, {"m_a", m.m_a}};
}

json result_to_json(const SimplificationResult& r, const ResultExtras& extras) {
  json doc = {{"params", params_to_json(r.params)},
              {"original", hypergraph_to_json(r.stage.original)},
              {"collapsed", hypergraph_to_json(r.stage.collapsed)},
              {"merge_records",
               {{"vertices", records_to_json(r.stage.vertex_records)}, {"edges", records_to_json(r.stage.edge_records)}}},
              {"graph", graph_to_json(r.stage.graph)},
              {"barcode", barcode_to_json(r.stage.barcode)},
              {"dendrogram", dendrogram_to_json(r.stage.dendrogram)},
              {"persistence_graph", persistence_graph_to_json(persistence_graph(r.stage.dendrogram))},
              {"partition", partition_to_json(r.partition)},
              {"simplified_hypergraph", hypergraph_to_json(r.simplified_hypergraph)},
              {"simplified_graph", graph_to_json(r.simplified_graph)},
              {"correspondence", correspondence_to_json(r)}};
  if (extras.layout) doc["layout"] = layout_to_json(*extras.layout, extras.hulls.value_or(std::vector<HullPolygon>{}));
  if (extras.metrics_before || extras.metrics_after) {
    json m = json::object();
    if (extras.metrics_before) m["before"] = metrics_to_json(*extras.metrics_before);
    if (extras.metrics_after) m["after"] = metrics_to_json(*extras.metrics_after);
    doc["metrics"] = std::move(m);
  }
  return doc;
}

std::string serialize_result(const SimplificationResult& r, const ResultExtras& extras) {
  return dump(result_to_json(r, extras));
}

std::pair<SimplificationResult, ResultExtras> parse_result(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(bytes, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
  try {
    SimplificationResult r;
    ResultExtras extras;
    r.params = params_from_json(doc.at("params"));
    auto& st = r.stage;
    st.original = hypergraph_from_json(doc.at("original"));
    st.collapsed = hypergraph_from_json(doc.at("collapsed"));
    st.vertex_records = records_from_json(doc.at("merge_records").at("vertices"), ElementKind::Vertex);
    st.edge_records = records_from_json(doc.at("merge_records").at("edges"), ElementKind::Edge);
    const json& corr = doc.at("correspondence");
    st.vertex_to_collapsed = corr.at("vertex_to_collapsed").get<std::vector<std::uint32_t>>();
    st.edge_to_collapsed = corr.at("edge_to_collapsed").get<std::vector<std::uint32_t>>();
    st.element_to_node = optional_vector<std::size_t>(corr.at("element_to_node"));
    st.graph = graph_from_json(doc.at("graph"));
    st.barcode = barcode_from_json(doc.at("barcode"));
    st.dendrogram = dendrogram_from_json(doc.at("dendrogram"));
    r.partition = partition_from_json(doc.at("partition"));
    r.simplified_hypergraph = hypergraph_from_json(doc.at("simplified_hypergraph"));
    r.simplified_graph = graph_from_json(doc.at("simplified_graph"));
    r.correspondence.vertex_to_simplified = optional_vector<std::uint32_t>(corr.at("vertex_to_simplified"));
    r.correspondence.edge_to_simplified = optional_vector<std::uint32_t>(corr.at("edge_to_simplified"));
    if (doc.contains("layout")) {
      extras.layout = layout_from_json(doc.at("layout"));
      extras.hulls = hulls_from_json(doc.at("layout").at("hulls"));
    }
    if (doc.contains("metrics")) {
      const json& m = doc.at("metrics");
      if (m.contains("before")) extras.metrics_before = metrics_from_json(m.at("before"));
      if (m.contains("after")) extras.metrics_after = metrics_from_json(m.at("after"));
    }
    return {std::move(r), std::move(extras)};
  } catch (const json::exception& e) {
    throw ValidationError(std::string("result document: ") + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hypersimp::io

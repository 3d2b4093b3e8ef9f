#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hypersimp/hypergraph.hpp"
#include "hypersimp/layout.hpp"
#include "hypersimp/metrics.hpp"
#include "hypersimp/simplify.hpp"

namespace hypersimp::io {

enum class Format { Json, Csv };

Format parse_format(std::string_view text);

/// Guess from a file extension (".csv" -> Csv, anything else -> Json).
Format format_for_path(std::string_view path);

/// Reads a hypergraph document. Dense ids follow declaration order (for CSV,
/// first appearance). Duplicate CSV incidences are dropped and reported in
/// `warnings` when given. Throws ParseError or ValidationError.
Hypergraph parse_hypergraph(std::string_view bytes, Format format, std::vector<std::string>* warnings = nullptr);

Hypergraph hypergraph_from_json(const nlohmann::json& doc);
nlohmann::json hypergraph_to_json(const Hypergraph& h);

/// CSV cannot represent isolated vertices or empty hyperedges; those are lost.
std::string serialize_hypergraph(const Hypergraph& h, Format format);

nlohmann::json params_to_json(const SimplificationParams& p);
/// Fields absent from `doc` keep their value from `base`.
SimplificationParams params_from_json(const nlohmann::json& doc, SimplificationParams base = {});

nlohmann::json graph_to_json(const WeightedGraph& g);
nlohmann::json barcode_to_json(const Barcode& b);
nlohmann::json dendrogram_to_json(const Dendrogram& d);
nlohmann::json partition_to_json(const EpsilonPartition& p);
nlohmann::json persistence_graph_to_json(const std::vector<std::pair<double, std::size_t>>& steps);
nlohmann::json correspondence_to_json(const SimplificationResult& r);
nlohmann::json layout_to_json(const Layout& layout, const std::vector<HullPolygon>& hulls);
nlohmann::json metrics_to_json(const MetricsReport& m);

/// Optional blocks carried alongside a result document.
struct ResultExtras {
  std::optional<Layout> layout;
  std::optional<std::vector<HullPolygon>> hulls;
  std::optional<MetricsReport> metrics_before;
  std::optional<MetricsReport> metrics_after;

  friend bool operator==(const ResultExtras&, const ResultExtras&) = default;
};

nlohmann::json result_to_json(const SimplificationResult& r, const ResultExtras& extras = {});
std::string serialize_result(const SimplificationResult& r, const ResultExtras& extras = {});

/// Inverse of serialize_result.
std::pair<SimplificationResult, ResultExtras> parse_result(std::string_view bytes);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace hypersimp::io

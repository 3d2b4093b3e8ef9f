#include "hypersimp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hypersimp/error.hpp"
#include "hypersimp/io_formats.hpp"
#include "hypersimp/layout.hpp"
#include "hypersimp/metrics.hpp"
#include "hypersimp/service.hpp"
#include "hypersimp/simplify.hpp"
#include "hypersimp/svg.hpp"

namespace hypersimp::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::string input;
  std::string format;
  std::string side = "edge";
  int s = 1;
  std::string weight = "jaccard";
  double epsilon = 0.0;
  bool collapse_vertices = false;
  bool collapse_edges = false;
  std::string singletons = "greyout";
  std::vector<std::size_t> expand;
  std::uint64_t seed = kDefaultSeed;
  int iterations = kDefaultIterations;
  double margin = kDefaultHullMargin;
  std::string output;
  std::string emit;

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::string snapshot_dir;
};

void add_pipeline_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--input", f.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", f.format, "Input format (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--side", f.side, "Elements to simplify")->check(CLI::IsMember({"vertex", "edge"}));
  cmd->add_option("--s", f.s, "Minimum overlap for adjacency")->check(CLI::PositiveNumber);
  cmd->add_option("--weight", f.weight, "Similarity weight")->check(CLI::IsMember({"jaccard", "overlap"}));
  cmd->add_option("--epsilon", f.epsilon, "Simplification threshold")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--collapse-vertices", f.collapse_vertices, "Merge vertices with identical memberships first");
  cmd->add_flag("--collapse-edges", f.collapse_edges, "Merge identical hyperedges first");
  cmd->add_option("--singletons", f.singletons, "Isolated nodes")->check(CLI::IsMember({"greyout", "filter"}));
  cmd->add_option("--expand", f.expand, "Bar id whose merge is undone (repeatable)");
  cmd->add_option("--seed", f.seed, "Layout seed");
  cmd->add_option("--iterations", f.iterations, "Layout iterations")->check(CLI::NonNegativeNumber);
  cmd->add_option("--margin", f.margin, "Hull margin in canvas units")->check(CLI::NonNegativeNumber);
  cmd->add_option("--output", f.output, "Write the artifact here instead of stdout");
  cmd->add_option("--emit", f.emit, "Artifact to write")->check(CLI::IsMember({"result", "barcode", "metrics", "svg"}));
}

Hypergraph load(const Flags& f, std::ostream& err) {
  std::ifstream in(f.input, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + f.input);
  std::stringstream buf;
  buf << in.rdbuf();
  const io::Format format = f.format.empty() ? io::format_for_path(f.input) : io::parse_format(f.format);
  std::vector<std::string> warnings;
  Hypergraph h = io::parse_hypergraph(buf.str(), format, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return h;
}

SimplificationParams params_of(const Flags& f) {
  SimplificationParams p;
  p.side = parse_side(f.side);
  p.s = f.s;
  p.scheme = parse_weight_scheme(f.weight);
  p.epsilon = f.epsilon;
  p.collapse_vertices = f.collapse_vertices;
  p.collapse_edges = f.collapse_edges;
  p.singletons = parse_singleton_mode(f.singletons);
  p.expanded_bars.insert(f.expand.begin(), f.expand.end());
  return p;
}

void write(const Flags& f, const std::string& artifact, std::ostream& out) {
  if (f.output.empty()) {
    out << artifact;
    return;
  }
  std::ofstream file(f.output, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + f.output);
  file << artifact;
}

json metrics_document(const SimplificationResult& r, const Flags& f) {
  const Layout before_layout = bipartite_layout(r.original(), f.seed, f.iterations);
  const Layout after_layout = bipartite_layout(r.simplified_hypergraph, f.seed, f.iterations);
  return {{"seed", f.seed},
          {"iterations", f.iterations},
          {"margin", f.margin},
          {"before", io::metrics_to_json(evaluate(r.original(), before_layout, f.margin))},
          {"after", io::metrics_to_json(evaluate(r.simplified_hypergraph, after_layout, f.margin))}};
}

std::string emit(const SimplificationResult& r, const Flags& f, const std::string& what) {
  if (what == "result") return io::serialize_result(r);
  if (what == "barcode") {
    return io::dump({{"barcode", io::barcode_to_json(r.stage.barcode)},
                     {"dendrogram", io::dendrogram_to_json(r.stage.dendrogram)},
                     {"persistence_graph", io::persistence_graph_to_json(persistence_graph(r.stage.dendrogram))}});
  }
  if (what == "metrics") return io::dump(metrics_document(r, f));
  const Layout layout = bipartite_layout(r.simplified_hypergraph, f.seed, f.iterations);
  return render_svg(r.simplified_hypergraph, layout, venn_hulls(r.simplified_hypergraph, layout, f.margin));
}

std::string components_document(const Hypergraph& h, const Flags& f) {
  const bool vertex_side = parse_side(f.side) == Side::Vertex;
  const Hypergraph target = vertex_side ? dual(h) : h;
  json comps = json::array();
  for (const auto& comp : s_connected_components(target, f.s)) {
    json labels = json::array();
    for (EdgeId e : comp) labels.push_back(target.edges()[e.value].label);
    comps.push_back(std::move(labels));
  }
  return io::dump({{"side", f.side}, {"s", f.s}, {"components", std::move(comps)}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Barcode-guided hypergraph simplification"};
  app.require_subcommand(1);
  auto* simplify_cmd = app.add_subcommand("simplify", "Run the simplification pipeline");
  auto* barcode_cmd = app.add_subcommand("barcode", "Barcode, dendrogram and persistence graph");
  auto* metrics_cmd = app.add_subcommand("metrics", "Aesthetic metrics before and after simplification");
  auto* components_cmd = app.add_subcommand("components", "s-connected components");
  for (auto* cmd : {simplify_cmd, barcode_cmd, metrics_cmd, components_cmd}) add_pipeline_flags(cmd, f);

  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP session service");
  serve_cmd->add_option("--host", f.host, "Bind address");
  serve_cmd->add_option("--port", f.port, "Port")->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--static", f.static_dir, "Directory served at /")->check(CLI::ExistingDirectory);
  serve_cmd->add_option("--snapshot-dir", f.snapshot_dir, "Write session results here");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (serve_cmd->parsed()) {
      service::Options options;
      if (!f.snapshot_dir.empty()) options.snapshot_dir = f.snapshot_dir;
      std::optional<std::filesystem::path> static_dir;
      if (!f.static_dir.empty()) static_dir = f.static_dir;
      err << "listening on http://" << f.host << ":" << f.port << "\n";
      if (!service::serve(f.host, f.port, options, static_dir)) {
        err << "error: cannot listen on " << f.host << ":" << f.port << "\n";
        return kExitDataError;
      }
      return kExitOk;
    }

    const Hypergraph h = load(f, err);
    if (components_cmd->parsed()) {
      write(f, components_document(h, f), out);
      return kExitOk;
    }
    const SimplificationResult r = simplify(h, params_of(f));
    std::string what = f.emit;
    if (what.empty()) what = barcode_cmd->parsed() ? "barcode" : metrics_cmd->parsed() ? "metrics" : "result";
    write(f, emit(r, f, what), out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace hypersimp::cli

#include "hypersimp/service.hpp"

#include <fstream>
#include <vector>

#include <httplib.h>

#include "hypersimp/error.hpp"
#include "hypersimp/io_formats.hpp"
#include "hypersimp/layout.hpp"
#include "hypersimp/metrics.hpp"

namespace hypersimp::service {

using nlohmann::json;

struct SessionService::Session {
  std::mutex mutex;
  std::chrono::steady_clock::time_point last_used;
  SimplificationResult result;  // always computed from the current params
  std::map<std::pair<std::string, std::uint64_t>, Layout> layouts;
};

namespace {

Response error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= path.size()) {
    const auto end = path.find('/', start);
    const auto piece = path.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!piece.empty()) out.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body.begin(), body.end());
  } catch (const json::parse_error&) {
    throw ParameterError("request body is not valid JSON");
  }
}

std::size_t parse_index(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') throw NotFoundError("'" + text + "' is not an id");
  return static_cast<std::size_t>(value);
}

json partition_response(const SimplificationResult& r) {
  return {{"partition", io::partition_to_json(r.partition)},
          {"simplified_hypergraph", io::hypergraph_to_json(r.simplified_hypergraph)},
          {"correspondence", io::correspondence_to_json(r)}};
}

std::uint64_t seed_of(const std::map<std::string, std::string>& query) {
  auto it = query.find("seed");
  if (it == query.end()) return kDefaultSeed;
  try {
    return std::stoull(it->second);
  } catch (const std::exception&) {
    throw ParameterError("seed must be a nonnegative integer");
  }
}

}  // namespace

SessionService::SessionService(Options options, Clock clock) : options_(std::move(options)), clock_(std::move(clock)) {}

SessionService::~SessionService() = default;

std::size_t SessionService::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::size_t SessionService::expire_idle() {
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
    if (session_lock.owns_lock() && now - it->second->last_used > options_.idle_timeout) {
      session_lock.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFoundError("unknown session '" + id + "'");
  return it->second;
}

void SessionService::snapshot(const std::string& id, const Session& s) const {
  if (!options_.snapshot_dir) return;
  std::filesystem::create_directories(*options_.snapshot_dir);
  std::ofstream out(*options_.snapshot_dir / (id + ".json"), std::ios::binary);
  out << io::serialize_result(s.result);
}

Response SessionService::create(std::string_view body) {
  Hypergraph h;
  try {
    h = io::parse_hypergraph(body, io::Format::Json);
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const ValidationError& e) {
    return error(400, e.what());
  }
  auto session = std::make_shared<Session>();
  session->result = simplify(h, SimplificationParams{});
  session->last_used = clock_();
  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = "s" + std::to_string(next_id_++);
    sessions_.emplace(id, session);
  }
  snapshot(id, *session);
  return {201, json{{"session_id", id}}};
}

Response SessionService::handle(std::string_view method, std::string_view path,
                                const std::map<std::string, std::string>& query, std::string_view body) {
  expire_idle();
  const auto seg = split_path(path);
  try {
    if (seg.empty() || seg[0] != "sessions") return error(404, "no such route");
    if (seg.size() == 1) {
      if (method == "POST") return create(body);
      return error(405, "method not allowed");
    }

    auto session = find(seg[1]);
    std::lock_guard lock(session->mutex);
    session->last_used = clock_();
    SimplificationResult& r = session->result;
    const std::string action = seg.size() > 2 ? seg[2] : "";

    if (seg.size() == 2 && method == "GET") return {200, io::result_to_json(r)};

    if (action == "params" && seg.size() == 3 && method == "PUT") {
      json doc = parse_body(body);
      if (doc.is_object()) {
        doc.erase("epsilon");
        doc.erase("expanded_bars");
      }
      SimplificationParams p = io::params_from_json(doc, r.params);
      const bool cleared = !p.expanded_bars.empty();
      p.expanded_bars.clear();
      r = simplify(r.original(), p);
      session->layouts.clear();
      snapshot(seg[1], *session);
      return {200, json{{"params", io::params_to_json(r.params)},
                        {"barcode", io::barcode_to_json(r.stage.barcode)},
                        {"dendrogram", io::dendrogram_to_json(r.stage.dendrogram)},
                        {"persistence_graph", io::persistence_graph_to_json(persistence_graph(r.stage.dendrogram))},
                        {"cleared", cleared}}};
    }

    if (action == "threshold" && seg.size() == 3 && method == "PUT") {
      const json doc = parse_body(body);
      if (!doc.is_object() || !doc.contains("epsilon") || !doc.at("epsilon").is_number())
        throw ParameterError("body must be {\"epsilon\": number}");
      const double eps = doc.at("epsilon").get<double>();
      if (!(eps >= 0.0)) throw ParameterError("epsilon must be a nonnegative number");
      r = rethreshold(r, eps, r.params.expanded_bars);
      std::erase_if(session->layouts, [](const auto& kv) { return kv.first.first == "simplified"; });
      snapshot(seg[1], *session);
      return {200, partition_response(r)};
    }

    if (action == "expand" && seg.size() == 3 && method == "POST") {
      const json doc = parse_body(body);
      if (!doc.is_object() || !doc.contains("bar_id") || !doc.at("bar_id").is_number_unsigned())
        throw ParameterError("body must be {\"bar_id\": nonnegative integer}");
      try {
        r = expand_bar(r, doc.at("bar_id").get<std::size_t>());
      } catch (const ParameterError& e) {
        return error(409, e.what());
      }
      std::erase_if(session->layouts, [](const auto& kv) { return kv.first.first == "simplified"; });
      snapshot(seg[1], *session);
      return {200, partition_response(r)};
    }

    if (action == "expand" && seg.size() == 4 && method == "DELETE") {
      const std::size_t bar = parse_index(seg[3]);
      try {
        r = collapse_bar(r, bar);
      } catch (const ParameterError& e) {
        return error(409, e.what());
      }
      std::erase_if(session->layouts, [](const auto& kv) { return kv.first.first == "simplified"; });
      snapshot(seg[1], *session);
      return {200, partition_response(r)};
    }

    if (action == "layout" && seg.size() == 3 && method == "GET") {
      auto it = query.find("view");
      const std::string view = it == query.end() ? "original" : it->second;
      if (view != "original" && view != "simplified") throw ParameterError("view must be original or simplified");
      const Hypergraph& h = view == "original" ? r.original() : r.simplified_hypergraph;
      const std::uint64_t seed = seed_of(query);
      auto [slot, fresh] = session->layouts.try_emplace({view, seed});
      if (fresh) slot->second = bipartite_layout(h, seed);
      return {200, io::layout_to_json(slot->second, venn_hulls(h, slot->second))};
    }

    if (action == "metrics" && seg.size() == 3 && method == "GET") {
      const std::uint64_t seed = seed_of(query);
      const MetricsReport before = evaluate(r.original(), bipartite_layout(r.original(), seed));
      const MetricsReport after = evaluate(r.simplified_hypergraph, bipartite_layout(r.simplified_hypergraph, seed));
      return {200, json{{"before", io::metrics_to_json(before)}, {"after", io::metrics_to_json(after)}}};
    }

    if (action == "class" && seg.size() == 4 && method == "GET") {
      const auto sid = static_cast<std::uint32_t>(parse_index(seg[3]));
      return {200, json{{"id", sid}, {"members", class_members(r, sid)}, {"labels", class_labels(r, sid)}}};
    }

    return error(404, "no such route");
  } catch (const NotFoundError& e) {
    return error(404, e.what());
  } catch (const ParameterError& e) {
    return error(400, e.what());
  } catch (const ValidationError& e) {
    return error(400, e.what());
  }
}

void mount(httplib::Server& server, SessionService& service, const std::optional<std::filesystem::path>& static_dir) {
  auto adapter = [&service](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const Response out = service.handle(req.method, req.path, query, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  const std::string pattern = R"(/sessions(/.*)?)";
  server.Get(pattern, adapter);
  server.Post(pattern, adapter);
  server.Put(pattern, adapter);
  server.Delete(pattern, adapter);
  if (static_dir) server.set_mount_point("/", static_dir->string());
}

bool serve(const std::string& host, int port, const Options& options,
           const std::optional<std::filesystem::path>& static_dir) {
  SessionService service(options);
  httplib::Server server;
  mount(server, service, static_dir);
  return server.listen(host, port);
}

}  // namespace hypersimp::service

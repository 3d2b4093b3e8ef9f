#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hypersimp/simplify.hpp"

namespace httplib {
class Server;
}

namespace hypersimp::service {

struct Response {
  int status = 200;
  nlohmann::json body;
};

struct Options {
  std::chrono::seconds idle_timeout{3600};
  std::optional<std::filesystem::path> snapshot_dir;  // one <session>.json per recompute
};

/// In-memory exploration sessions behind the HTTP routes:
///
///   POST   /sessions                          hypergraph document -> {session_id}
///   GET    /sessions/{id}                     full result document
///   PUT    /sessions/{id}/params              recompute graph + barcode
///   PUT    /sessions/{id}/threshold           {epsilon} -> partition
///   POST   /sessions/{id}/expand              {bar_id} -> partition
///   DELETE /sessions/{id}/expand/{bar}        -> partition
///   GET    /sessions/{id}/layout?view=&seed=  layout + hulls
///   GET    /sessions/{id}/metrics?seed=       before/after metrics
///   GET    /sessions/{id}/class/{sid}         constituent labels
///
/// Requests on one session are serialized; sessions are independent.
class SessionService {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit SessionService(Options options = {}, Clock clock = std::chrono::steady_clock::now);
  ~SessionService();

  Response handle(std::string_view method, std::string_view path, const std::map<std::string, std::string>& query,
                  std::string_view body);

  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t expire_idle();

  std::size_t session_count() const;

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id);
  Response create(std::string_view body);
  void snapshot(const std::string& id, const Session& s) const;

  Options options_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Registers the session routes (and, when given, a static mount for the web
/// client bundle) on an httplib server.
void mount(httplib::Server& server, SessionService& service, const std::optional<std::filesystem::path>& static_dir);

/// Blocking: listens until the process is stopped. Returns false if the
/// socket cannot be bound.
bool serve(const std::string& host, int port, const Options& options,
           const std::optional<std::filesystem::path>& static_dir);

}  // namespace hypersimp::service

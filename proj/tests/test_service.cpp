#include <doctest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>

#include "hypersimp/io_formats.hpp"
#include "hypersimp/service.hpp"
#include "oracles.hpp"

using namespace hypersimp;
using nlohmann::json;
using service::Response;
using service::SessionService;

namespace {

const std::string example_doc = oracle::read_file(oracle::data_path("example.json"));

Response call(SessionService& s, std::string_view method, const std::string& path, const std::string& body = "",
              std::map<std::string, std::string> query = {}) {
  return s.handle(method, path, query, body);
}

std::string open(SessionService& s) {
  const auto r = call(s, "POST", "/sessions", example_doc);
  REQUIRE(r.status == 201);
  return r.body["session_id"].get<std::string>();
}

std::size_t class_count(const Response& r) { return r.body["partition"]["classes"].size(); }

}  // namespace

TEST_SUITE_BEGIN("service");

TEST_CASE("create and read a session") {
  SessionService s;
  const auto id = open(s);
  const auto r = call(s, "GET", "/sessions/" + id);
  CHECK(r.status == 200);
  CHECK(r.body["barcode"]["bars"].size() == 3);
  CHECK(open(s) != id);
  CHECK(s.session_count() == 2);
}

TEST_CASE("threshold across the first bar, then expand and collapse it") {
  SessionService s;
  const auto id = open(s);
  const auto below = call(s, "PUT", "/sessions/" + id + "/threshold", R"({"epsilon": 1.4})");
  REQUIRE(below.status == 200);
  const auto above = call(s, "PUT", "/sessions/" + id + "/threshold", R"({"epsilon": 1.5})");
  REQUIRE(above.status == 200);
  CHECK(class_count(above) == class_count(below) - 1);

  const auto expanded = call(s, "POST", "/sessions/" + id + "/expand", R"({"bar_id": 0})");
  REQUIRE(expanded.status == 200);
  CHECK(class_count(expanded) == class_count(below));
  CHECK(call(s, "POST", "/sessions/" + id + "/expand", R"({"bar_id": 0})").status == 409);
  CHECK(call(s, "POST", "/sessions/" + id + "/expand", R"({"bar_id": 2})").status == 409);

  const auto collapsed = call(s, "DELETE", "/sessions/" + id + "/expand/0");
  REQUIRE(collapsed.status == 200);
  CHECK(class_count(collapsed) == class_count(above));
  CHECK(call(s, "DELETE", "/sessions/" + id + "/expand/0").status == 409);

  const auto cls = call(s, "GET", "/sessions/" + id + "/class/0");
  REQUIRE(cls.status == 200);
  CHECK(cls.body["labels"] == json::array({"e1", "e2"}));
  CHECK(call(s, "GET", "/sessions/" + id + "/class/9").status == 404);
}

TEST_CASE("params recompute the barcode and clear expansions") {
  SessionService s;
  const auto id = open(s);
  call(s, "PUT", "/sessions/" + id + "/threshold", R"({"epsilon": 2})");
  REQUIRE(call(s, "POST", "/sessions/" + id + "/expand", R"({"bar_id": 0})").status == 200);
  const auto r = call(s, "PUT", "/sessions/" + id + "/params", R"({"side": "vertex", "weight": "overlap"})");
  REQUIRE(r.status == 200);
  CHECK(r.body["cleared"] == true);
  CHECK(r.body["params"]["side"] == "vertex");
  CHECK(r.body["params"]["epsilon"] == 2.0);
  CHECK(r.body["barcode"]["node_count"] == 5);
  CHECK(call(s, "PUT", "/sessions/" + id + "/params", R"({"s": 0})").status == 400);
  CHECK(call(s, "PUT", "/sessions/" + id + "/params", R"({"weight": "cosine"})").status == 400);
}

TEST_CASE("layout and metrics") {
  SessionService s;
  const auto id = open(s);
  const auto a = call(s, "GET", "/sessions/" + id + "/layout", "", {{"view", "original"}});
  REQUIRE(a.status == 200);
  CHECK(a.body["vertices"].size() == 5);
  CHECK(a.body["hulls"].size() == 3);
  CHECK(call(s, "GET", "/sessions/" + id + "/layout", "", {{"view", "original"}}).body == a.body);
  CHECK(call(s, "GET", "/sessions/" + id + "/layout", "", {{"view", "original"}, {"seed", "7"}}).body != a.body);
  CHECK(call(s, "GET", "/sessions/" + id + "/layout", "", {{"view", "sideways"}}).status == 400);
  CHECK(call(s, "GET", "/sessions/" + id + "/layout", "", {{"seed", "x"}}).status == 400);

  const auto m = call(s, "GET", "/sessions/" + id + "/metrics");
  REQUIRE(m.status == 200);
  CHECK(m.body.contains("before"));
  CHECK(m.body.contains("after"));
}

TEST_CASE("errors") {
  SessionService s;
  CHECK(call(s, "POST", "/sessions", "{ nope").status == 400);
  CHECK(call(s, "POST", "/sessions", R"({"vertices":[],"hyperedges":[{"id":"e","members":["x"]}]})").status == 400);
  CHECK(call(s, "GET", "/sessions/s99").status == 404);
  CHECK(call(s, "GET", "/elsewhere").status == 404);
  const auto id = open(s);
  CHECK(call(s, "PUT", "/sessions/" + id + "/threshold", R"({"epsilon": -1})").status == 400);
  CHECK(call(s, "PUT", "/sessions/" + id + "/threshold", "[]").status == 400);
  CHECK(call(s, "POST", "/sessions/" + id + "/expand", R"({"bar_id": -1})").status == 400);
  CHECK(call(s, "DELETE", "/sessions/" + id + "/expand/abc").status == 404);
  CHECK(call(s, "PATCH", "/sessions/" + id).status == 404);
}

TEST_CASE("idle sessions expire") {
  auto now = std::chrono::steady_clock::time_point{};
  service::Options options;
  options.idle_timeout = std::chrono::seconds(60);
  SessionService s(options, [&] { return now; });
  const auto id = open(s);
  now += std::chrono::seconds(30);
  CHECK(call(s, "GET", "/sessions/" + id).status == 200);
  now += std::chrono::seconds(61);
  CHECK(call(s, "GET", "/sessions/" + id).status == 404);
  CHECK(s.session_count() == 0);
}

TEST_CASE("snapshots are written per recompute") {
  const auto dir = std::filesystem::temp_directory_path() / "hypersimp_snapshots";
  std::filesystem::remove_all(dir);
  service::Options options;
  options.snapshot_dir = dir;
  SessionService s(options);
  const auto id = open(s);
  call(s, "PUT", "/sessions/" + id + "/threshold", R"({"epsilon": 1.5})");
  const auto [r, extras] = io::parse_result(oracle::read_file((dir / (id + ".json")).string()));
  CHECK(r.params.epsilon == 1.5);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sessions are independent under concurrent use") {
  SessionService s;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(open(s));
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] {
      for (int k = 0; k < 20; ++k) {
        const double eps = (i + k) % 2 ? 1.5 : 0.0;
        const auto r = s.handle("PUT", "/sessions/" + ids[i] + "/threshold", {}, json{{"epsilon", eps}}.dump());
        if (r.status != 200 || r.body["partition"]["classes"].size() != (eps > 0 ? 2u : 3u)) ++failures;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(failures == 0);
}

TEST_CASE("http round trip") {
  SessionService s;
  httplib::Server server;
  service::mount(server, s, std::nullopt);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", example_doc, "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const auto id = json::parse(created->body)["session_id"].get<std::string>();
  auto put = client.Put("/sessions/" + id + "/threshold", R"({"epsilon": 1.5})", "application/json");
  REQUIRE(put);
  CHECK(put->status == 200);
  CHECK(json::parse(put->body)["partition"]["classes"].size() == 2);
  auto layout = client.Get("/sessions/" + id + "/layout?view=simplified&seed=3");
  REQUIRE(layout);
  CHECK(json::parse(layout->body)["edges"].size() == 2);
  auto del = client.Delete("/sessions/" + id + "/expand/0");
  REQUIRE(del);
  CHECK(del->status == 409);

  server.stop();
  worker.join();
}

TEST_SUITE_END();

#include <doctest.h>

#include <thread>

#include <httplib.h>

#include "ontoterm/persistence.h"
#include "ontoterm/service.h"
#include "support.h"

using namespace ontoterm;
using namespace ontoterm::testing;
using nlohmann::json;

namespace {

ApiResponse get(ApiService& api, std::string path, std::map<std::string, std::string> params = {}) {
    return api.handle({"GET", std::move(path), std::move(params), ""});
}

}  // namespace

TEST_CASE("concept routes") {
    Workspace ws(relay_snapshot());
    ApiService api(ws);

    ApiResponse forest = get(api, "/api/concepts");
    CHECK(forest.status == 200);
    CHECK(forest.envelope["ok"] == true);
    CHECK(forest.envelope["error"].is_null());
    CHECK(forest.envelope["data"]["roots"] == json{kRelay});
    CHECK(forest.envelope["data"]["concepts"].size() == 3);

    ApiResponse details = get(api, std::string("/api/concepts/") + kVoltageThresholdRelay);
    REQUIRE(details.status == 200);
    const json& d = details.envelope["data"];
    CHECK(d["genus"] == kThresholdRelay);
    CHECK(d["differentia"] == json{"voltage"});
    CHECK(d["intent"].size() == 3);
    CHECK(d["denominations"]["fr"] == "relais à seuil de tension");
    CHECK(d["usage_terms"][0]["form"] == "relais de tension");
    CHECK(d["document_count"] == 2);

    ApiResponse missing = get(api, "/api/concepts/ghost");
    CHECK(missing.status == 404);
    CHECK(missing.envelope["ok"] == false);
    CHECK(missing.envelope["data"].is_null());
    CHECK(get(api, "/nowhere").status == 404);
    CHECK(api.handle({"DELETE", "/api/concepts", {}, ""}).status == 405);
}

TEST_CASE("search route mirrors the library") {
    Workspace ws(relay_snapshot());
    ApiService api(ws);
    auto snap = ws.current();
    for (bool expand : {true, false}) {
        ApiResponse r = get(api, "/api/search", {{"q", "relais à seuil"}, {"lang", "fr"}, {"expand", expand ? "true" : "false"}});
        REQUIRE(r.status == 200);
        CHECK(r.envelope["data"] ==
              to_json(search(snap->store, snap->termbase, snap->system, "relais à seuil", "fr", expand), &snap->system));
    }
    ApiResponse def = get(api, "/api/search", {{"q", "relais à seuil"}, {"lang", "fr"}});
    CHECK(def.envelope["data"]["hits"].size() == 2);
    CHECK(def.envelope["data"]["denominations"][kVoltageThresholdRelay]["en"] == "voltage threshold relay");
    CHECK(get(api, "/api/search", {{"q", "relais"}}).status == 400);
    CHECK(get(api, "/api/search", {{"lang", "fr"}}).status == 400);
    CHECK(get(api, "/api/search", {{"q", "relais"}, {"lang", "fr"}, {"expand", "maybe"}}).status == 400);
}

TEST_CASE("reads do not mutate the workspace") {
    Workspace ws(relay_snapshot());
    ApiService api(ws);
    auto before = ws.current();
    get(api, "/api/concepts");
    get(api, std::string("/api/concepts/") + kRelay);
    get(api, "/api/search", {{"q", "relais"}, {"lang", "fr"}});
    get(api, std::string("/api/documents/") + kDocFr);
    CHECK(ws.current() == before);
}

TEST_CASE("document routes") {
    auto path = std::filesystem::temp_directory_path() / "ontoterm-service-writeback.json";
    std::filesystem::remove(path);
    Workspace ws(relay_snapshot());
    ApiService api(ws, path);

    ApiResponse doc = get(api, std::string("/api/documents/") + kDocFr);
    REQUIRE(doc.status == 200);
    CHECK(doc.envelope["data"]["postings"] == json::parse(R"([{"concept":"voltage_threshold_relay","count":2}])"));

    ApiResponse created = api.handle({"POST", "/api/documents", {}, R"({"id":"new","language":"en","body":"A threshold relay."})"});
    CHECK(created.status == 201);
    CHECK(created.envelope["data"]["postings"] == json::parse(R"([{"concept":"threshold_relay","count":1}])"));
    CHECK(ws.current()->store.find_document("new") != nullptr);
    CHECK(load_project(path) == *ws.current());

    CHECK(api.handle({"POST", "/api/documents", {}, R"({"id":"new","language":"en","body":"x"})"}).status == 409);
    CHECK(api.handle({"POST", "/api/documents", {}, "not json"}).status == 400);
    CHECK(api.handle({"POST", "/api/documents", {}, R"({"id":"zz","language":"ja","body":"x"})"}).status == 400);
    CHECK(get(api, "/api/documents/ghost").status == 404);
}

TEST_CASE("HTTP binding") {
    Workspace ws(relay_snapshot());
    ApiService api(ws);
    HttpServer server(api);
    int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread t([&] { server.listen(); });

    httplib::Client client("127.0.0.1", port);
    auto res = client.Get("/api/search?q=relais%20%C3%A0%20seuil&lang=fr&expand=false");
    REQUIRE(res);
    CHECK(res->status == 200);
    json body = json::parse(res->body);
    CHECK(body["ok"] == true);
    CHECK(body["data"]["matched_concepts"] == json{kThresholdRelay});
    CHECK(body["data"]["hits"].empty());

    auto missing = client.Get("/api/concepts/ghost");
    REQUIRE(missing);
    CHECK(missing->status == 404);

    auto posted = client.Post("/api/documents", R"({"id":"h","language":"fr","body":"relais"})", "application/json");
    REQUIRE(posted);
    CHECK(posted->status == 201);

    server.stop();
    t.join();
}

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "ontoterm/formal_context.h"
#include "ontoterm/workspace.h"

namespace ontoterm {

// JSON payloads shared by the service and the CLI's --json output. With a
// system, the search payload also carries the denominations (all languages)
// of every matched or expanded concept.
nlohmann::json to_json(const SearchResult& result, const ConceptSystem* system = nullptr);
nlohmann::json to_json(const Resolution& resolution);
nlohmann::json to_json(const FormalConcept& fc);

struct ApiRequest {
    std::string method;  // "GET", "POST", ...
    std::string path;    // without query string
    std::map<std::string, std::string> params;
    std::string body;
};

struct ApiResponse {
    int status = 200;
    nlohmann::json envelope;  // {"ok", "data", "error"}

    std::string body() const;
};

// Read-mostly HTTP API over a Workspace. Transport independent: run_server()
// binds it to a socket, tests call handle() directly.
class ApiService {
public:
    // When `write_back` is set, every accepted POST /api/documents also
    // saves the project there.
    explicit ApiService(Workspace& workspace, std::optional<std::filesystem::path> write_back = std::nullopt);

    ApiResponse handle(const ApiRequest& request);

    static ApiResponse ok(nlohmann::json data, int status = 200);
    static ApiResponse fail(int status, const std::string& message);

private:
    ApiResponse concept_forest(const Snapshot& snap) const;
    ApiResponse concept_details(const Snapshot& snap, std::string_view id) const;
    ApiResponse run_search(const Snapshot& snap, const ApiRequest& request) const;
    ApiResponse document(const Snapshot& snap, std::string_view id) const;
    ApiResponse ingest(const ApiRequest& request);

    Workspace& workspace_;
    std::optional<std::filesystem::path> write_back_;
    std::mutex ingest_mutex_;
};

// HTTP/1.1 binding of an ApiService. bind() then listen(); stop() from any
// thread ends listen().
class HttpServer {
public:
    explicit HttpServer(ApiService& api);
    ~HttpServer();

    // Returns the bound port, or -1 on failure.
    int bind(const std::string& host, int port);
    void listen();  // blocks
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace ontoterm

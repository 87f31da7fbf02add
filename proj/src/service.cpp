#include "ontoterm/service.h"

#include <set>

#include "ontoterm/persistence.h"

namespace ontoterm {

using nlohmann::json;

json to_json(const SearchResult& result, const ConceptSystem* system) {
    json hits = json::array();
    for (const auto& h : result.hits) hits.push_back(json{{"doc", h.doc}, {"language", h.language}, {"score", h.score}});
    json ambiguous = json::array();
    for (const auto& a : result.ambiguous)
        ambiguous.push_back(json{{"surface", a.surface},
                                 {"provenance", std::string(to_string(a.provenance))},
                                 {"candidates", a.candidates}});
    json out{{"matched_concepts", result.matched_concepts},
             {"expanded_concepts", result.expanded_concepts},
             {"ambiguous", ambiguous},
             {"hits", hits}};
    if (system) {
        json names = json::object();
        for (const auto& id : result.expanded_concepts)
            if (const Concept* c = system->find_concept(id)) names[id] = c->denominations;
        out["denominations"] = names;
    }
    return out;
}

json to_json(const Resolution& r) {
    json alternatives = json::array();
    for (const auto& a : r.alternatives)
        alternatives.push_back(json{{"concept", a.concept_id}, {"dropped_groups", a.dropped_groups}});
    return json{{"status", std::string(to_string(r.status))},
                {"provenance", std::string(to_string(r.provenance))},
                {"concepts", r.concepts},
                {"variant_kind", r.variant_kind ? json(std::string(to_string(*r.variant_kind))) : json(nullptr)},
                {"alternatives", alternatives}};
}

json to_json(const FormalConcept& fc) {
    return json{{"extent", std::vector<Id>(fc.extent.begin(), fc.extent.end())},
                {"intent", std::vector<Id>(fc.intent.begin(), fc.intent.end())}};
}

std::string ApiResponse::body() const { return envelope.dump(-1, ' ', false, json::error_handler_t::replace); }

ApiResponse ApiService::ok(json data, int status) {
    return {status, json{{"ok", true}, {"data", std::move(data)}, {"error", nullptr}}};
}

ApiResponse ApiService::fail(int status, const std::string& message) {
    return {status, json{{"ok", false}, {"data", nullptr}, {"error", message}}};
}

ApiService::ApiService(Workspace& workspace, std::optional<std::filesystem::path> write_back)
    : workspace_(workspace), write_back_(std::move(write_back)) {}

namespace {

std::vector<std::string_view> segments(std::string_view path) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start < path.size()) {
        auto pos = path.find('/', start);
        if (pos == std::string_view::npos) pos = path.size();
        if (pos > start) out.push_back(path.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::unknown_concept:
        case ErrorCode::unknown_document: return 404;
        case ErrorCode::duplicate_document:
        case ErrorCode::duplicate_id: return 409;
        default: return 400;
    }
}

}  // namespace

ApiResponse ApiService::handle(const ApiRequest& request) {
    auto parts = segments(request.path);
    if (parts.empty() || parts[0] != "api") return fail(404, "no route for " + request.path);
    try {
        if (request.method == "GET") {
            auto snap = workspace_.current();
            if (parts.size() == 2 && parts[1] == "concepts") return concept_forest(*snap);
            if (parts.size() == 3 && parts[1] == "concepts") return concept_details(*snap, parts[2]);
            if (parts.size() == 2 && parts[1] == "search") return run_search(*snap, request);
            if (parts.size() == 3 && parts[1] == "documents") return document(*snap, parts[2]);
            return fail(404, "no route for " + request.path);
        }
        if (request.method == "POST" && parts.size() == 2 && parts[1] == "documents") return ingest(request);
        bool known = (parts.size() == 2 && (parts[1] == "concepts" || parts[1] == "search" || parts[1] == "documents")) ||
                     (parts.size() == 3 && (parts[1] == "concepts" || parts[1] == "documents"));
        return known ? fail(405, "method " + request.method + " not allowed on " + request.path)
                     : fail(404, "no route for " + request.path);
    } catch (const Error& e) {
        return fail(status_for(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(500, e.what());
    }
}

ApiResponse ApiService::concept_forest(const Snapshot& snap) const {
    json nodes = json::array();
    for (const auto& [id, c] : snap.system.concepts()) {
        nodes.push_back(json{{"id", id},
                             {"genus", c.genus ? json(*c.genus) : json(nullptr)},
                             {"denominations", c.denominations},
                             {"children", snap.system.children(id)}});
    }
    return ok(json{{"roots", snap.system.roots()}, {"concepts", nodes}});
}

ApiResponse ApiService::concept_details(const Snapshot& snap, std::string_view id) const {
    const Concept* c = snap.system.find_concept(id);
    if (!c) return fail(404, "unknown concept '" + std::string(id) + "'");

    json intent = json::array();
    for (const auto& ch_id : c->intent) {
        const Character& ch = snap.system.character(ch_id);
        json forms = json::object();
        for (const auto& [lang, mf] : ch.modifier_forms)
            forms[lang] = json{{"form", mf.form}, {"position", std::string(to_string(mf.position))}};
        intent.push_back(json{{"id", ch.id},
                              {"kind", std::string(to_string(ch.kind))},
                              {"labels", ch.labels},
                              {"modifier_forms", forms},
                              {"differentia", c->differentia.contains(ch.id)}});
    }
    json usage = json::array();
    for (const Term* t : snap.termbase.by_concept(id))
        usage.push_back(json{{"form", t->form},
                             {"language", t->language},
                             {"variant_kind", t->variant_kind ? json(std::string(to_string(*t->variant_kind))) : json(nullptr)}});
    std::size_t documents = 0;
    if (const auto* p = snap.store.postings(id)) documents = p->size();

    return ok(json{{"id", c->id},
                   {"genus", c->genus ? json(*c->genus) : json(nullptr)},
                   {"differentia", std::vector<Id>(c->differentia.begin(), c->differentia.end())},
                   {"intent", intent},
                   {"denominations", c->denominations},
                   {"children", snap.system.children(id)},
                   {"usage_terms", usage},
                   {"document_count", documents}});
}

ApiResponse ApiService::run_search(const Snapshot& snap, const ApiRequest& request) const {
    auto q = request.params.find("q");
    auto lang = request.params.find("lang");
    if (q == request.params.end()) return fail(400, "missing query parameter 'q'");
    if (lang == request.params.end() || lang->second.empty()) return fail(400, "missing query parameter 'lang'");
    bool expand = true;
    if (auto e = request.params.find("expand"); e != request.params.end()) {
        if (e->second == "true" || e->second == "1")
            expand = true;
        else if (e->second == "false" || e->second == "0")
            expand = false;
        else
            return fail(400, "parameter 'expand' must be true or false");
    }
    SearchResult result = search(snap.store, snap.termbase, snap.system, q->second, lang->second, expand);
    return ok(to_json(result, &snap.system));
}

ApiResponse ApiService::document(const Snapshot& snap, std::string_view id) const {
    const Document* d = snap.store.find_document(id);
    if (!d) return fail(404, "unknown document '" + std::string(id) + "'");
    json postings = json::array();
    for (const auto& p : snap.store.postings_of_document(id))
        postings.push_back(json{{"concept", p.concept_id}, {"count", p.count}});
    return ok(json{{"id", d->id}, {"language", d->language}, {"title", d->title}, {"body", d->body}, {"postings", postings}});
}

ApiResponse ApiService::ingest(const ApiRequest& request) {
    Document doc;
    try {
        doc = parse_document(request.body);
    } catch (const Error& e) {
        return fail(400, e.what());
    }
    std::lock_guard lock(ingest_mutex_);
    std::vector<Posting> postings;
    auto snap = workspace_.update([&](Snapshot& s) { postings = s.store.index_document(s.termbase, s.system, doc); });
    if (write_back_) save_project(*snap, *write_back_);

    json out = json::array();
    for (const auto& p : postings) out.push_back(json{{"concept", p.concept_id}, {"count", p.count}});
    return ok(json{{"id", doc.id}, {"postings", out}}, 201);
}

}  // namespace ontoterm

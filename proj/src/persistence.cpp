#include "ontoterm/persistence.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ontoterm/denomination.h"
#include "ontoterm/text.h"

namespace ontoterm {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::malformed_file, path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) malformed(path, std::string("missing key \"") + key + "\"");
    return *it;
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) malformed(path, "expected a string");
    return v.get<std::string>();
}

std::string string_field(const json& obj, const std::string& path, const char* key) {
    return get_string(field(obj, path, key), path + "." + key);
}

void require_object(const json& v, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!v.is_object()) malformed(path, "expected an object");
    for (const auto& [key, unused] : v.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) malformed(path, "unexpected key \"" + key + "\"");
    }
}

const json& array_field(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_array()) malformed(path + "." + key, "expected an array");
    return v;
}

std::map<Language, std::string> string_map(const json& v, const std::string& path) {
    if (!v.is_object()) malformed(path, "expected an object");
    std::map<Language, std::string> out;
    for (const auto& [k, s] : v.items()) out[k] = get_string(s, path + "." + k);
    return out;
}

IdSet id_set(const json& v, const std::string& path) {
    if (!v.is_array()) malformed(path, "expected an array");
    IdSet out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string id = get_string(v[i], path + "[" + std::to_string(i) + "]");
        if (!out.insert(id).second) malformed(path, "repeated id \"" + id + "\"");
    }
    return out;
}

Character read_character(const json& v, const std::string& path) {
    require_object(v, path, {"id", "kind", "labels", "modifier_forms"});
    Character c;
    c.id = string_field(v, path, "id");
    try {
        c.kind = parse_character_kind(string_field(v, path, "kind"));
    } catch (const Error& e) {
        malformed(path + ".kind", e.what());
    }
    c.labels = string_map(field(v, path, "labels"), path + ".labels");
    if (auto it = v.find("modifier_forms"); it != v.end()) {
        if (!it->is_object()) malformed(path + ".modifier_forms", "expected an object");
        for (const auto& [lang, mf] : it->items()) {
            std::string p = path + ".modifier_forms." + lang;
            require_object(mf, p, {"form", "position"});
            ModifierForm form;
            form.form = string_field(mf, p, "form");
            form.position = naming_convention(lang).default_position;
            if (mf.contains("position")) {
                try {
                    form.position = parse_modifier_position(string_field(mf, p, "position"));
                } catch (const Error& e) {
                    malformed(p + ".position", e.what());
                }
            }
            c.modifier_forms[lang] = std::move(form);
        }
    }
    return c;
}

Concept read_concept(const json& v, const std::string& path) {
    require_object(v, path, {"id", "genus", "differentia", "intent", "denominations"});
    Concept c;
    c.id = string_field(v, path, "id");
    if (auto it = v.find("genus"); it != v.end() && !it->is_null()) c.genus = get_string(*it, path + ".genus");
    c.differentia = id_set(field(v, path, "differentia"), path + ".differentia");
    c.intent = id_set(field(v, path, "intent"), path + ".intent");
    if (auto it = v.find("denominations"); it != v.end()) c.denominations = string_map(*it, path + ".denominations");
    return c;
}

Document read_document(const json& v, const std::string& path) {
    require_object(v, path, {"id", "language", "title", "body"});
    Document d;
    d.id = string_field(v, path, "id");
    d.language = string_field(v, path, "language");
    if (v.contains("title")) d.title = string_field(v, path, "title");
    d.body = string_field(v, path, "body");
    if (d.language.empty()) malformed(path + ".language", "language must be declared");
    return d;
}

json write_document(const Document& d) {
    return json{{"id", d.id}, {"language", d.language}, {"title", d.title}, {"body", d.body}};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string serialize_project(const Snapshot& snapshot) {
    json characters = json::array();
    for (const auto& [id, c] : snapshot.system.characters()) {
        json forms = json::object();
        for (const auto& [lang, mf] : c.modifier_forms)
            forms[lang] = json{{"form", mf.form}, {"position", std::string(to_string(mf.position))}};
        characters.push_back(json{{"id", c.id},
                                  {"kind", std::string(to_string(c.kind))},
                                  {"labels", c.labels},
                                  {"modifier_forms", forms}});
    }
    json concepts = json::array();
    for (const auto& [id, c] : snapshot.system.concepts()) {
        concepts.push_back(json{{"id", c.id},
                                {"genus", c.genus ? json(*c.genus) : json(nullptr)},
                                {"differentia", std::vector<Id>(c.differentia.begin(), c.differentia.end())},
                                {"intent", std::vector<Id>(c.intent.begin(), c.intent.end())},
                                {"denominations", json(c.denominations)}});
    }
    json terms = json::array();
    for (const Term& t : snapshot.termbase.terms()) {
        terms.push_back(json{{"form", t.form},
                             {"language", t.language},
                             {"status", std::string(to_string(t.status))},
                             {"concept", t.concept_id},
                             {"variant_kind", t.variant_kind ? json(std::string(to_string(*t.variant_kind))) : json(nullptr)}});
    }
    json documents = json::array();
    for (const auto& [id, d] : snapshot.store.documents()) documents.push_back(write_document(d));

    json root{{"version", kProjectFormatVersion},
              {"characters", characters},
              {"concepts", concepts},
              {"terms", terms},
              {"documents", documents}};
    return root.dump(2, ' ', false, json::error_handler_t::strict) + "\n";
}

Snapshot parse_project(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::malformed_file, std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) malformed("$", "expected an object");
    const json& version = field(root, "$", "version");
    if (!version.is_number_integer()) malformed("$.version", "expected an integer");
    if (version.get<long long>() != kProjectFormatVersion)
        throw Error(ErrorCode::version_mismatch, "unsupported project version " + version.dump() + " (expected " +
                                                     std::to_string(kProjectFormatVersion) + ")");
    require_object(root, "$", {"version", "characters", "concepts", "terms", "documents"});

    Snapshot snap;
    const json& characters = array_field(root, "$", "characters");
    for (std::size_t i = 0; i < characters.size(); ++i) {
        std::string path = "$.characters[" + std::to_string(i) + "]";
        try {
            snap.system.insert_character_unchecked(read_character(characters[i], path));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::malformed_file) throw;
            throw Error(e.code(), path + ": " + e.what());
        }
    }
    const json& concepts = array_field(root, "$", "concepts");
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        std::string path = "$.concepts[" + std::to_string(i) + "]";
        try {
            snap.system.insert_concept_unchecked(read_concept(concepts[i], path));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::malformed_file) throw;
            throw Error(e.code(), path + ": " + e.what());
        }
    }
    if (auto violations = check_system(snap.system); !violations.empty()) {
        std::string msg = "project violates " + std::to_string(violations.size()) + " invariant(s):";
        for (const auto& v : violations) msg += "\n  " + to_string(v);
        throw Error(ErrorCode::invariant_violation, msg, std::move(violations));
    }

    const json& terms = array_field(root, "$", "terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string path = "$.terms[" + std::to_string(i) + "]";
        const json& t = terms[i];
        require_object(t, path, {"form", "language", "status", "concept", "variant_kind"});
        std::string form = string_field(t, path, "form");
        std::string lang = string_field(t, path, "language");
        std::string concept_id = string_field(t, path, "concept");
        TermStatus status = TermStatus::usage;
        std::optional<VariantKind> kind;
        try {
            if (t.contains("status")) status = parse_term_status(string_field(t, path, "status"));
            if (auto it = t.find("variant_kind"); it != t.end() && !it->is_null())
                kind = parse_variant_kind(get_string(*it, path + ".variant_kind"));
        } catch (const Error& e) {
            malformed(path, e.what());
        }
        const Concept* c = snap.system.find_concept(concept_id);
        if (!c) throw Error(ErrorCode::invariant_violation, path + ": unknown concept '" + concept_id + "'");
        if (status == TermStatus::normalized) {
            // Normalized terms live on the concept; a listed one must agree.
            auto it = c->denominations.find(lang);
            if (it == c->denominations.end() || text::term_key(it->second) != text::term_key(form))
                throw Error(ErrorCode::invariant_violation,
                            path + ": normalized term '" + form + "' does not match the denomination of '" + concept_id + "'");
            continue;
        }
        try {
            snap.termbase.register_usage(snap.system, form, lang, concept_id, kind);
        } catch (const Error& e) {
            throw Error(e.code(), path + ": " + e.what());
        }
    }

    if (auto it = root.find("documents"); it != root.end()) {
        if (!it->is_array()) malformed("$.documents", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string path = "$.documents[" + std::to_string(i) + "]";
            try {
                snap.store.insert_document_unchecked(read_document((*it)[i], path));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::malformed_file) throw;
                throw Error(e.code(), path + ": " + e.what());
            }
        }
    }
    snap.store.reindex(snap.termbase, snap.system);
    return snap;
}

Document parse_document(std::string_view json_text) {
    json v;
    try {
        v = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::malformed_file, std::string("invalid JSON: ") + e.what());
    }
    return read_document(v, "$");
}

std::string serialize_document(const Document& doc) { return write_document(doc).dump(2) + "\n"; }

void save_project(const Snapshot& snapshot, const std::filesystem::path& path) {
    const std::string content = serialize_project(snapshot);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::io_error, "cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) throw Error(ErrorCode::io_error, "write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::io_error, "cannot replace '" + path.string() + "': " + ec.message());
}

Snapshot load_project(const std::filesystem::path& path) { return parse_project(read_file(path)); }

// ---- context tables ---------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(delim, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

FormalContext parse_context(std::string_view table, const ConceptSystem& system) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= table.size()) {
        auto pos = table.find('\n', start);
        std::string_view line = table.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        if (!trim(line).empty()) lines.emplace_back(line);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (lines.empty()) throw Error(ErrorCode::malformed_context, "empty context table");

    const std::string& header_line = lines.front();
    char delim = header_line.find('\t') != std::string::npos ? '\t'
                 : header_line.find(';') != std::string::npos ? ';'
                                                               : ',';
    std::vector<std::string> header = split(header_line, delim);
    std::vector<Id> attributes(header.begin() + 1, header.end());
    for (const auto& a : attributes) {
        if (!system.find_character(a))
            throw Error(ErrorCode::malformed_context, "header references unknown character '" + a + "'");
    }

    std::vector<Id> objects;
    std::vector<std::vector<bool>> incidence;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        std::vector<std::string> cells = split(lines[r], delim);
        if (cells.size() != header.size())
            throw Error(ErrorCode::malformed_context, "row " + std::to_string(r + 1) + " has " +
                                                          std::to_string(cells.size()) + " cells, expected " +
                                                          std::to_string(header.size()));
        objects.push_back(cells.front());
        std::vector<bool> row;
        for (std::size_t c = 1; c < cells.size(); ++c) {
            if (cells[c] != "0" && cells[c] != "1")
                throw Error(ErrorCode::malformed_context, "row " + std::to_string(r + 1) + ", column " +
                                                              std::to_string(c + 1) + ": cell '" + cells[c] +
                                                              "' is not 0 or 1");
            row.push_back(cells[c] == "1");
        }
        incidence.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(incidence));
}

FormalContext import_context(const std::filesystem::path& path, const ConceptSystem& system) {
    return parse_context(read_file(path), system);
}

}  // namespace ontoterm

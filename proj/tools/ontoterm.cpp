#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ontoterm/denomination.h"
#include "ontoterm/persistence.h"
#include "ontoterm/service.h"

using namespace ontoterm;

namespace {

struct Options {
    std::string project;

    // character add
    std::string char_id, char_kind = "essential";
    std::vector<std::string> labels, forms, positions;

    // concept define
    std::string concept_id, genus, differentia;
    std::vector<std::string> names;

    // name
    std::string lang, set_term;
    bool all = false;

    // context import / lattice build
    std::string table;
    bool json = false;

    // term add-usage
    std::string form, variant_kind = "other";

    // doc add
    std::string doc_id, title, body, body_file;

    // search / resolve
    std::string query;
    bool no_expand = false;

    // serve
    std::string host = "127.0.0.1";
    int port = 8080;
    bool write_back = false;

    std::string init_path;
};

std::pair<std::string, std::string> split_pair(const std::string& s, const char* flag) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
        throw Error(ErrorCode::invalid_argument, std::string(flag) + " expects lang=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

IdSet split_ids(const std::string& csv) {
    IdSet out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.insert(item);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path project_path(const Options& o) {
    if (!o.project.empty()) return o.project;
    if (const char* env = std::getenv("ONTOTERM_PROJECT"); env && *env) return env;
    throw Error(ErrorCode::invalid_argument, "no project: pass --project or set ONTOTERM_PROJECT");
}

// Load, mutate through the workspace checks, save.
Snapshot edit(const Options& o, const std::function<void(Snapshot&)>& mutate) {
    auto path = project_path(o);
    Workspace ws(load_project(path));
    auto next = ws.update(mutate);
    save_project(*next, path);
    return *next;
}

int lint(const Snapshot& snap) {
    std::vector<Violation> all = check_system(snap.system);
    for (auto& v : check_rigidity(snap.system)) all.push_back(std::move(v));
    for (const auto& lang : languages(snap.system))
        for (auto& v : motivation_report(snap.system, lang)) all.push_back(std::move(v));
    for (const auto& v : all) std::cout << to_string(v) << "\n";
    std::cout << all.size() << (all.size() == 1 ? " violation" : " violations") << "\n";
    return all.empty() ? 0 : 1;
}

void print_lattice(const std::vector<FormalConcept>& lattice, bool as_json) {
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& fc : lattice) arr.push_back(to_json(fc));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    auto braces = [](const IdSet& s) {
        std::string out = "{";
        for (const auto& id : s) out += (out.size() > 1 ? ", " : "") + id;
        return out + "}";
    };
    for (const auto& fc : lattice) std::cout << braces(fc.extent) << " " << braces(fc.intent) << "\n";
    std::cout << lattice.size() << " concepts\n";
}

HttpServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concept-based terminology and multilingual document search"};
    app.require_subcommand(1);
    Options o;
    app.add_option("-p,--project", o.project, "Project file (default: $ONTOTERM_PROJECT)");

    auto* init = app.add_subcommand("init", "Create an empty project file");
    init->add_option("path", o.init_path)->required();

    auto* character = app.add_subcommand("character", "Manage characters")->require_subcommand(1);
    auto* char_add = character->add_subcommand("add", "Add a character");
    char_add->add_option("--id", o.char_id, "Character id (generated when omitted)");
    char_add->add_option("--kind", o.char_kind, "essential or descriptive")->check(CLI::IsMember({"essential", "descriptive"}));
    char_add->add_option("--label", o.labels, "lang=label")->required();
    char_add->add_option("--form", o.forms, "lang=modifier form");
    char_add->add_option("--position", o.positions, "lang=after_head|before_head");

    auto* concept_cmd = app.add_subcommand("concept", "Manage concepts")->require_subcommand(1);
    auto* define = concept_cmd->add_subcommand("define", "Define a concept by genus and differentia");
    define->add_option("--id", o.concept_id, "Concept id (generated when omitted)");
    define->add_option("--genus", o.genus, "Genus concept id (omit for a root)");
    define->add_option("--differentia", o.differentia, "Comma-separated character ids")->required();
    define->add_option("--name", o.names, "lang=term, stored verbatim");

    auto* name = app.add_subcommand("name", "Synthesize or set denominations");
    name->add_option("concept", o.concept_id);
    name->add_option("--lang", o.lang)->required();
    name->add_option("--set", o.set_term, "Store this term instead of synthesizing");
    name->add_flag("--all", o.all, "Name every concept that can be named");

    app.add_subcommand("lint", "Check invariants, rigidity and naming");

    auto* context = app.add_subcommand("context", "Formal contexts")->require_subcommand(1);
    auto* import = context->add_subcommand("import", "Validate a context table against the project");
    import->add_option("table", o.table)->required();

    auto* lattice = app.add_subcommand("lattice", "Concept lattices")->require_subcommand(1);
    auto* build = lattice->add_subcommand("build", "List all formal concepts of a context table");
    build->add_option("table", o.table)->required();
    build->add_flag("--json", o.json);

    auto* term = app.add_subcommand("term", "Usage terms")->require_subcommand(1);
    auto* add_usage = term->add_subcommand("add-usage", "Register a usage term");
    add_usage->add_option("--form", o.form)->required();
    add_usage->add_option("--lang", o.lang)->required();
    add_usage->add_option("--concept", o.concept_id)->required();
    add_usage->add_option("--kind", o.variant_kind)->check(CLI::IsMember({"ellipsis", "synonym", "other"}));

    auto* doc = app.add_subcommand("doc", "Documents")->require_subcommand(1);
    auto* doc_add = doc->add_subcommand("add", "Index a document");
    doc_add->add_option("--id", o.doc_id)->required();
    doc_add->add_option("--lang", o.lang)->required();
    doc_add->add_option("--title", o.title);
    auto* body_opt = doc_add->add_option("--body", o.body);
    doc_add->add_option("--body-file", o.body_file)->excludes(body_opt);

    auto* search_cmd = app.add_subcommand("search", "Search documents by concept");
    search_cmd->add_option("query", o.query)->required();
    search_cmd->add_option("--lang", o.lang)->required();
    search_cmd->add_flag("--no-expand", o.no_expand, "Do not expand to subordinate concepts");
    search_cmd->add_flag("--json", o.json);

    auto* resolve_cmd = app.add_subcommand("resolve", "Map a term to concepts");
    resolve_cmd->add_option("form", o.form)->required();
    resolve_cmd->add_option("--lang", o.lang)->required();

    auto* serve = app.add_subcommand("serve", "Run the HTTP API");
    serve->add_option("--host", o.host);
    serve->add_option("--port", o.port);
    serve->add_flag("--write-back", o.write_back, "Save ingested documents to the project file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*init) {
            if (std::filesystem::exists(o.init_path)) throw Error(ErrorCode::io_error, o.init_path + " already exists");
            save_project(Snapshot{}, o.init_path);
            std::cout << "created " << o.init_path << "\n";
        } else if (*char_add) {
            Character ch;
            ch.id = o.char_id;
            ch.kind = parse_character_kind(o.char_kind);
            for (const auto& l : o.labels) ch.labels.insert(split_pair(l, "--label"));
            for (const auto& f : o.forms) {
                auto [lang, form] = split_pair(f, "--form");
                ch.modifier_forms[lang] = {form, naming_convention(lang).default_position};
            }
            for (const auto& p : o.positions) {
                auto [lang, pos] = split_pair(p, "--position");
                auto it = ch.modifier_forms.find(lang);
                if (it == ch.modifier_forms.end())
                    throw Error(ErrorCode::invalid_argument, "--position " + lang + " without --form " + lang);
                it->second.position = parse_modifier_position(pos);
            }
            Id id;
            edit(o, [&](Snapshot& s) { id = s.system.add_character(ch); });
            std::cout << id << "\n";
        } else if (*define) {
            Id id;
            edit(o, [&](Snapshot& s) {
                std::optional<Id> genus;
                if (!o.genus.empty()) genus = o.genus;
                id = s.system.define_concept(genus, split_ids(o.differentia), o.concept_id);
                for (const auto& n : o.names) {
                    auto [lang, t] = split_pair(n, "--name");
                    s.system.set_denomination(id, lang, t);
                }
            });
            std::cout << id << "\n";
        } else if (*name) {
            if (o.all == !o.concept_id.empty())
                throw Error(ErrorCode::invalid_argument, "name takes either a concept id or --all");
            if (o.all) {
                std::vector<Id> named;
                Snapshot s = edit(o, [&](Snapshot& s) { named = denominate_all(s.system, o.lang); });
                for (const auto& id : named)
                    std::cout << id << "\t" << s.system.get_concept(id).denominations.at(o.lang) << "\n";
            } else {
                std::string result;
                edit(o, [&](Snapshot& s) {
                    if (!o.set_term.empty()) {
                        s.system.set_denomination(o.concept_id, o.lang, o.set_term);
                        result = o.set_term;
                    } else {
                        result = denominate(s.system, o.concept_id, o.lang);
                    }
                });
                std::cout << result << "\n";
            }
        } else if (app.got_subcommand("lint")) {
            return lint(load_project(project_path(o)));
        } else if (*import) {
            Snapshot s = load_project(project_path(o));
            FormalContext ctx = import_context(o.table, s.system);
            std::cout << ctx.objects().size() << " objects, " << ctx.attributes().size() << " characters\n";
        } else if (*build) {
            // Attribute ids are checked against the project when one is given.
            ConceptSystem system;
            bool have_project = !o.project.empty() || std::getenv("ONTOTERM_PROJECT");
            if (have_project) system = load_project(project_path(o)).system;
            FormalContext ctx = have_project ? import_context(o.table, system) : [&] {
                // Without a project every header id is accepted.
                std::string text = read_file(o.table);
                std::string header = text.substr(0, text.find('\n'));
                char delim = header.find('\t') != std::string::npos ? '\t' : header.find(';') != std::string::npos ? ';' : ',';
                std::stringstream ss(header);
                std::string cell;
                std::getline(ss, cell, delim);
                while (std::getline(ss, cell, delim)) {
                    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
                    system.insert_character_unchecked({cell, CharacterKind::essential, {{"und", cell}}, {}});
                }
                return parse_context(text, system);
            }();
            print_lattice(build_lattice(ctx), o.json);
        } else if (*add_usage) {
            edit(o, [&](Snapshot& s) {
                s.termbase.register_usage(s.system, o.form, o.lang, o.concept_id, parse_variant_kind(o.variant_kind));
            });
            std::cout << "ok\n";
        } else if (*doc_add) {
            Document d{o.doc_id, o.lang, o.title, o.body_file.empty() ? o.body : read_file(o.body_file)};
            std::vector<Posting> postings;
            edit(o, [&](Snapshot& s) { postings = s.store.index_document(s.termbase, s.system, d); });
            for (const auto& p : postings) std::cout << p.concept_id << "\t" << p.count << "\n";
        } else if (*search_cmd) {
            Snapshot s = load_project(project_path(o));
            SearchResult r = search(s.store, s.termbase, s.system, o.query, o.lang, !o.no_expand);
            if (o.json) {
                std::cout << to_json(r, &s.system).dump(2) << "\n";
            } else {
                for (const auto& a : r.ambiguous) {
                    std::cerr << "ambiguous: \"" << a.surface << "\" ->";
                    for (const auto& c : a.candidates) std::cerr << " " << c;
                    std::cerr << "\n";
                }
                for (const auto& h : r.hits) std::cout << h.doc << "\t" << h.language << "\t" << h.score << "\n";
            }
        } else if (*resolve_cmd) {
            Snapshot s = load_project(project_path(o));
            std::cout << to_json(resolve(s.termbase, s.system, o.form, o.lang)).dump(2) << "\n";
        } else if (*serve) {
            auto path = project_path(o);
            Workspace ws(load_project(path));
            ApiService api(ws, o.write_back ? std::optional(path) : std::nullopt);
            HttpServer server(api);
            int port = server.bind(o.host, o.port);
            if (port < 0) throw Error(ErrorCode::io_error, "cannot bind " + o.host + ":" + std::to_string(o.port));
            g_server = &server;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::cout << "listening on http://" << o.host << ":" << port << std::endl;
            server.listen();
        }
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        for (const auto& v : e.violations()) std::cerr << "  " << to_string(v) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include <doctest.h>

#include <algorithm>
#include <map>

#include "ontoterm/docstore.h"
#include "ontoterm/service.h"
#include "support.h"

using namespace ontoterm;
using namespace ontoterm::testing;

namespace {

std::vector<Id> hit_ids(const SearchResult& r) {
    std::vector<Id> out;
    for (const auto& h : r.hits) out.push_back(h.doc);
    return out;
}

}  // namespace

TEST_CASE("index_document creates postings through the termbase") {
    Snapshot snap = relay_snapshot(false);
    auto p = snap.store.index_document(snap.termbase, snap.system,
                                       {"d1", "fr", "", "Un relais à seuil de tension, puis rien."});
    CHECK(p == std::vector<Posting>{{kVoltageThresholdRelay, "d1", 1}});

    auto usage = snap.store.index_document(snap.termbase, snap.system, {"d2", "fr", "", "Le relais de tension a sauté."});
    CHECK(usage == std::vector<Posting>{{kVoltageThresholdRelay, "d2", 1}});

    CHECK(snap.store.index_document(snap.termbase, snap.system, {"d3", "fr", "", ""}).empty());

    // Title and body are both scanned.
    auto both = snap.store.index_document(snap.termbase, snap.system, {"d4", "fr", "Relais", "RELAIS à seuil. Relais."});
    CHECK(both == std::vector<Posting>{{kRelay, "d4", 2}, {kThresholdRelay, "d4", 1}});

    try {
        snap.store.index_document(snap.termbase, snap.system, {"d1", "fr", "", "x"});
        FAIL("expected duplicate document");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::duplicate_document);
    }
    try {
        snap.store.index_document(snap.termbase, snap.system, {"d9", "ja", "", "x"});
        FAIL("expected unsupported language");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::unsupported_language);
    }
}

TEST_CASE("greedy longest match does not overlap") {
    Snapshot snap = relay_snapshot(false);
    Resolver fr(snap.termbase, snap.system, "fr");
    CHECK(fr.max_term_tokens() == 5);
    auto m = match_concepts(fr, "relais à seuil de tension relais à seuil relais");
    CHECK(m.counts == std::map<Id, std::uint32_t>{{kRelay, 1}, {kThresholdRelay, 1}, {kVoltageThresholdRelay, 1}});
}

TEST_CASE("ambiguous occurrences are reported, not indexed") {
    Snapshot snap = relay_snapshot(false);
    snap.termbase.register_usage(snap.system, "le relais", "fr", kRelay, VariantKind::other);
    snap.termbase.register_usage(snap.system, "le relais", "fr", kThresholdRelay, VariantKind::other);
    auto p = snap.store.index_document(snap.termbase, snap.system, {"d", "fr", "", "le relais"});
    CHECK(p.empty());
    REQUIRE(snap.store.ambiguity_report().size() == 1);
    CHECK(snap.store.ambiguity_report()[0].candidates == std::vector<Id>{kRelay, kThresholdRelay});
    CHECK(snap.store.ambiguity_report()[0].doc == "d");
}

TEST_CASE("expand_query") {
    ConceptSystem s = relay_system();
    CHECK(expand_query(s, {kRelay}) == std::vector<Id>{kRelay, kThresholdRelay, kVoltageThresholdRelay});
    CHECK(expand_query(s, {kVoltageThresholdRelay}) == std::vector<Id>{kVoltageThresholdRelay});
    CHECK(expand_query(s, {}).empty());
    CHECK_THROWS_AS(expand_query(s, {"ghost"}), Error);
}

TEST_CASE("search across languages with and without expansion") {
    Snapshot snap = relay_snapshot();
    auto& [system, termbase, store] = snap;

    SearchResult expanded = search(store, termbase, system, "relais à seuil", "fr", true);
    CHECK(expanded.matched_concepts == std::vector<Id>{kThresholdRelay});
    CHECK(expanded.expanded_concepts == std::vector<Id>{kThresholdRelay, kVoltageThresholdRelay});
    CHECK(hit_ids(expanded) == std::vector<Id>{kDocEn, kDocFr});
    CHECK(expanded.hits[0].language == "en");
    CHECK(expanded.hits[1].language == "fr");

    SearchResult strict = search(store, termbase, system, "relais à seuil", "fr", false);
    CHECK(strict.hits.empty());

    SearchResult none = search(store, termbase, system, "grille-pain", "fr", true);
    CHECK(none.matched_concepts.empty());
    CHECK(none.hits.empty());

    SearchResult en = search(store, termbase, system, "threshold relay", "en", true);
    CHECK(en.matched_concepts == expanded.matched_concepts);
    CHECK(en.hits == expanded.hits);

    SearchResult usage = search(store, termbase, system, "relais de tension", "fr", false);
    CHECK(usage.matched_concepts == std::vector<Id>{kVoltageThresholdRelay});
    CHECK(hit_ids(usage) == std::vector<Id>{kDocEn, kDocFr});
}

TEST_CASE("hits are ordered by score, then doc id") {
    Snapshot snap = relay_snapshot(false);
    auto& [system, termbase, store] = snap;
    store.index_document(termbase, system, {"b", "fr", "", "relais"});
    store.index_document(termbase, system, {"a", "fr", "", "relais"});
    store.index_document(termbase, system, {"c", "en", "", "relay relay relay"});
    SearchResult r = search(store, termbase, system, "relais", "fr", false);
    CHECK(hit_ids(r) == std::vector<Id>{"c", "a", "b"});
    CHECK(r.hits[0].score == 3);
}

TEST_CASE("search invariants on random collections") {
    std::mt19937 rng(8080);
    for (int round = 0; round < 25; ++round) {
        RandomSystemOptions opt;
        opt.max_concepts = 15;
        ConceptSystem system = random_system(rng, opt);
        Termbase termbase;
        DocStore store;
        std::vector<Id> ids;
        for (const auto& [id, c] : system.concepts()) ids.push_back(id);

        // Each document mixes normalized terms separated by filler words;
        // `planted` records the true per-concept counts.
        std::map<Id, std::map<Id, std::uint64_t>> planted;  // doc -> concept -> count
        std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1), len(0, 6);
        for (int d = 0; d < 20; ++d) {
            std::string lang = d % 2 ? "fr" : "en";
            Id doc = "d" + std::to_string(d);
            std::string body;
            for (std::size_t n = len(rng); n > 0; --n) {
                const Id& c = ids[pick(rng)];
                body += "zz " + system.get_concept(c).denominations.at(lang) + " . ";
                ++planted[doc][c];
            }
            store.index_document(termbase, system, {doc, lang, "", body});
        }

        for (int q = 0; q < 10; ++q) {
            const Id& target = ids[pick(rng)];
            const Concept& c = system.get_concept(target);
            SearchResult fr = search(store, termbase, system, c.denominations.at("fr"), "fr", true);
            SearchResult en = search(store, termbase, system, c.denominations.at("en"), "en", true);
            SearchResult strict = search(store, termbase, system, c.denominations.at("fr"), "fr", false);
            CHECK(fr.matched_concepts == std::vector<Id>{target});
            CHECK(fr.hits == en.hits);
            for (const auto& h : strict.hits)
                CHECK(std::any_of(fr.hits.begin(), fr.hits.end(), [&](const SearchHit& x) { return x.doc == h.doc; }));

            std::map<Id, std::uint64_t> oracle;
            for (const auto& [doc, counts] : planted)
                for (const auto& e : fr.expanded_concepts)
                    if (auto it = counts.find(e); it != counts.end()) oracle[doc] += it->second;
            std::map<Id, std::uint64_t> got;
            for (const auto& h : fr.hits) got[h.doc] = h.score;
            CHECK(got == oracle);
            for (std::size_t i = 1; i < fr.hits.size(); ++i) {
                const auto& a = fr.hits[i - 1];
                const auto& b = fr.hits[i];
                CHECK((a.score > b.score || (a.score == b.score && a.doc < b.doc)));
            }
        }

        DocStore again;
        for (const auto& [id, doc] : store.documents()) again.index_document(termbase, system, doc);
        const Concept& root = system.get_concept(ids.front());
        CHECK(to_json(search(again, termbase, system, root.denominations.at("fr"), "fr", true)).dump() ==
              to_json(search(store, termbase, system, root.denominations.at("fr"), "fr", true)).dump());
    }
}

TEST_CASE("remove_document drops its postings") {
    Snapshot snap = relay_snapshot();
    snap.store.remove_document(kDocFr);
    CHECK(snap.store.find_document(kDocFr) == nullptr);
    CHECK(snap.store.postings(kVoltageThresholdRelay)->size() == 1);
    CHECK_THROWS_AS(snap.store.remove_document(kDocFr), Error);
}

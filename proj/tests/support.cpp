#include "support.h"

#include "ontoterm/denomination.h"

#ifndef ONTOTERM_FIXTURE_DIR
#error "ONTOTERM_FIXTURE_DIR must be defined"
#endif

namespace ontoterm::testing {

ConceptSystem relay_system() {
    ConceptSystem s;
    s.add_character({"switching", CharacterKind::essential, {{"fr", "commutation"}, {"en", "switching"}}, {}});
    s.add_character({"threshold",
                     CharacterKind::essential,
                     {{"fr", "seuil"}, {"en", "threshold"}},
                     {{"fr", {"à seuil", ModifierPosition::after_head}},
                      {"en", {"threshold", ModifierPosition::before_head}}}});
    s.add_character({"voltage",
                     CharacterKind::essential,
                     {{"fr", "tension"}, {"en", "voltage"}},
                     {{"fr", {"de tension", ModifierPosition::after_head}},
                      {"en", {"voltage", ModifierPosition::before_head}}}});
    s.define_concept(std::nullopt, {"switching"}, kRelay);
    s.set_denomination(kRelay, "fr", "relais");
    s.set_denomination(kRelay, "en", "relay");
    s.define_concept(std::string(kRelay), {"threshold"}, kThresholdRelay);
    s.define_concept(std::string(kThresholdRelay), {"voltage"}, kVoltageThresholdRelay);
    denominate_all(s, "fr");
    denominate_all(s, "en");
    return s;
}

Snapshot relay_snapshot(bool with_documents) {
    Snapshot snap;
    snap.system = relay_system();
    snap.termbase.register_usage(snap.system, "relais de tension", "fr", kVoltageThresholdRelay, VariantKind::ellipsis);
    if (with_documents) {
        snap.store.index_document(snap.termbase, snap.system,
                                  {kDocFr, "fr", "Réglage du relais à seuil de tension",
                                   "Le relais à seuil de tension déclenche au-delà du point de consigne."});
        snap.store.index_document(snap.termbase, snap.system,
                                  {kDocEn, "en", "Voltage threshold relay setup",
                                   "The voltage threshold relay trips above its set point."});
    }
    return snap;
}

std::string fixture_path(const std::string& name) { return std::string(ONTOTERM_FIXTURE_DIR) + "/" + name; }

ConceptSystem random_system(std::mt19937& rng, const RandomSystemOptions& options) {
    ConceptSystem s;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Id> chars;
    for (std::size_t i = 0; i < options.characters; ++i) {
        Id id = "c" + std::to_string(i);
        std::string word = "m" + std::to_string(i);
        CharacterKind kind = unit(rng) < options.descriptive_ratio ? CharacterKind::descriptive : CharacterKind::essential;
        s.add_character({id, kind, {{"fr", word}, {"en", word}},
                         {{"fr", {word, ModifierPosition::after_head}}, {"en", {word, ModifierPosition::before_head}}}});
        chars.push_back(id);
    }

    std::vector<Id> concepts;
    std::size_t attempts = 0;
    while (concepts.size() < options.max_concepts && attempts++ < options.max_concepts * 20) {
        bool make_root = concepts.size() < options.roots;
        std::optional<Id> genus;
        IdSet available(chars.begin(), chars.end());
        if (!make_root) {
            genus = concepts[std::uniform_int_distribution<std::size_t>(0, concepts.size() - 1)(rng)];
            for (const auto& ch : s.get_concept(*genus).intent) available.erase(ch);
        }
        if (available.empty()) continue;
        std::vector<Id> pool(available.begin(), available.end());
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t width = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(2, pool.size()))(rng);
        IdSet differentia(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(width));
        try {
            Id id = s.define_concept(genus, differentia, "k" + std::to_string(concepts.size()));
            if (!genus) {
                s.set_denomination(id, "fr", "r" + std::to_string(concepts.size()));
                s.set_denomination(id, "en", "r" + std::to_string(concepts.size()));
            }
            concepts.push_back(id);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::duplicate_intent) throw;
        }
    }
    denominate_all(s, "fr");
    denominate_all(s, "en");
    return s;
}

FormalContext random_context(std::mt19937& rng, std::size_t objects, std::size_t attributes, double density) {
    std::bernoulli_distribution cell(density);
    std::vector<Id> objs, attrs;
    for (std::size_t i = 0; i < objects; ++i) objs.push_back("o" + std::to_string(i));
    for (std::size_t j = 0; j < attributes; ++j) attrs.push_back("a" + std::to_string(j));
    std::vector<std::vector<bool>> incidence(objects, std::vector<bool>(attributes));
    for (auto& row : incidence)
        for (std::size_t j = 0; j < attributes; ++j) row[j] = cell(rng);
    return FormalContext(objs, attrs, incidence);
}

}  // namespace ontoterm::testing

#include "ontoterm/concept_system.h"

#include <algorithm>
#include <iterator>

namespace ontoterm {

std::string_view to_string(CharacterKind kind) {
    return kind == CharacterKind::essential ? "essential" : "descriptive";
}

std::string_view to_string(ModifierPosition pos) {
    return pos == ModifierPosition::after_head ? "after_head" : "before_head";
}

CharacterKind parse_character_kind(std::string_view s) {
    if (s == "essential") return CharacterKind::essential;
    if (s == "descriptive") return CharacterKind::descriptive;
    throw Error(ErrorCode::invalid_argument, "unknown character kind '" + std::string(s) + "'");
}

ModifierPosition parse_modifier_position(std::string_view s) {
    if (s == "after_head") return ModifierPosition::after_head;
    if (s == "before_head") return ModifierPosition::before_head;
    throw Error(ErrorCode::invalid_argument, "unknown modifier position '" + std::string(s) + "'");
}

bool is_valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' ||
               c == '_' || c == '-';
    });
}

namespace {

IdSet set_union(const IdSet& a, const IdSet& b) {
    IdSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

bool intersects(const IdSet& a, const IdSet& b) {
    return std::any_of(a.begin(), a.end(), [&](const Id& x) { return b.contains(x); });
}

bool is_subset(const IdSet& small, const IdSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

const Character* ConceptSystem::find_character(std::string_view id) const {
    auto it = characters_.find(id);
    return it == characters_.end() ? nullptr : &it->second;
}

const Concept* ConceptSystem::find_concept(std::string_view id) const {
    auto it = concepts_.find(id);
    return it == concepts_.end() ? nullptr : &it->second;
}

const Character& ConceptSystem::character(std::string_view id) const {
    if (auto* c = find_character(id)) return *c;
    throw Error(ErrorCode::unknown_character, "unknown character '" + std::string(id) + "'");
}

const Concept& ConceptSystem::get_concept(std::string_view id) const {
    if (auto* c = find_concept(id)) return *c;
    throw Error(ErrorCode::unknown_concept, "unknown concept '" + std::string(id) + "'");
}

const Concept* ConceptSystem::find_by_intent(const IdSet& intent) const {
    for (const auto& [id, c] : concepts_)
        if (c.intent == intent) return &c;
    return nullptr;
}

std::vector<Id> ConceptSystem::children(std::string_view id) const {
    std::vector<Id> out;
    for (const auto& [cid, c] : concepts_)
        if (c.genus && *c.genus == id) out.push_back(cid);
    return out;
}

std::vector<Id> ConceptSystem::roots() const {
    std::vector<Id> out;
    for (const auto& [cid, c] : concepts_)
        if (c.is_root()) out.push_back(cid);
    return out;
}

Id ConceptSystem::fresh_id(std::string_view prefix) const {
    std::size_t n = characters_.size() + concepts_.size() + 1;
    for (;; ++n) {
        Id candidate = std::string(prefix) + std::to_string(n);
        if (!characters_.contains(candidate) && !concepts_.contains(candidate)) return candidate;
    }
}

Id ConceptSystem::add_character(Character character) {
    if (character.id.empty()) character.id = fresh_id("ch");
    if (!is_valid_id(character.id))
        throw Error(ErrorCode::invalid_argument, "invalid character id '" + character.id + "'");
    if (characters_.contains(character.id))
        throw Error(ErrorCode::duplicate_id, "character '" + character.id + "' already exists");
    if (character.labels.empty())
        throw Error(ErrorCode::empty_labels, "character '" + character.id + "' needs at least one label");
    for (const auto& [lang, label] : character.labels) {
        if (label.empty())
            throw Error(ErrorCode::empty_labels, "character '" + character.id + "' has an empty " + lang + " label");
    }
    for (const auto& [lang, mf] : character.modifier_forms) {
        if (!character.labels.contains(lang))
            throw Error(ErrorCode::invalid_argument,
                        "character '" + character.id + "' has a " + lang + " modifier form but no " + lang + " label");
        if (mf.form.empty())
            throw Error(ErrorCode::invalid_argument, "character '" + character.id + "' has an empty " + lang + " modifier form");
    }
    Id id = character.id;
    characters_.emplace(id, std::move(character));
    ++version_;
    return id;
}

Id ConceptSystem::define_concept(const std::optional<Id>& genus, const IdSet& differentia, Id id) {
    if (differentia.empty()) throw Error(ErrorCode::empty_differentia, "differentia must not be empty");
    for (const auto& ch : differentia) character(ch);

    IdSet intent = differentia;
    if (genus) {
        const Concept& g = get_concept(*genus);
        if (intersects(differentia, g.intent))
            throw Error(ErrorCode::overlapping_differentia,
                        "differentia overlaps the intent of genus '" + g.id + "'");
        intent = set_union(g.intent, differentia);
    }
    if (const Concept* existing = find_by_intent(intent))
        throw Error(ErrorCode::duplicate_intent,
                    "unique-intent: the intent is already carried by concept '" + existing->id + "'");

    if (id.empty()) id = fresh_id("k");
    if (!is_valid_id(id)) throw Error(ErrorCode::invalid_argument, "invalid concept id '" + id + "'");
    if (concepts_.contains(id)) throw Error(ErrorCode::duplicate_id, "concept '" + id + "' already exists");

    Concept c;
    c.id = id;
    c.intent = std::move(intent);
    c.genus = genus;
    c.differentia = differentia;
    concepts_.emplace(id, std::move(c));
    ++version_;
    return id;
}

void ConceptSystem::set_denomination(std::string_view concept_id, const Language& lang, std::string term) {
    auto it = concepts_.find(concept_id);
    if (it == concepts_.end()) throw Error(ErrorCode::unknown_concept, "unknown concept '" + std::string(concept_id) + "'");
    if (lang.empty()) throw Error(ErrorCode::invalid_argument, "language code must not be empty");
    if (term.empty()) throw Error(ErrorCode::invalid_argument, "denomination must not be empty");
    it->second.denominations[lang] = std::move(term);
    ++version_;
}

void ConceptSystem::insert_character_unchecked(Character character) {
    Id id = character.id;
    if (!characters_.emplace(id, std::move(character)).second)
        throw Error(ErrorCode::duplicate_id, "character '" + id + "' already exists");
    ++version_;
}

void ConceptSystem::insert_concept_unchecked(Concept concept_value) {
    Id id = concept_value.id;
    if (!concepts_.emplace(id, std::move(concept_value)).second)
        throw Error(ErrorCode::duplicate_id, "concept '" + id + "' already exists");
    ++version_;
}

bool ConceptSystem::operator==(const ConceptSystem& other) const {
    return characters_ == other.characters_ && concepts_ == other.concepts_;
}

bool subsumes(const ConceptSystem& system, std::string_view general, std::string_view specific) {
    const Concept& g = system.get_concept(general);
    const Concept& s = system.get_concept(specific);
    return is_subset(g.intent, s.intent);
}

std::vector<Id> descendants(const ConceptSystem& system, std::string_view id) {
    const Concept& c = system.get_concept(id);
    std::vector<Id> out;
    for (const auto& [oid, other] : system.concepts())
        if (is_subset(c.intent, other.intent)) out.push_back(oid);
    return out;
}

std::optional<Id> conjunction(const ConceptSystem& system, std::string_view a, std::string_view b) {
    IdSet intent = set_union(system.get_concept(a).intent, system.get_concept(b).intent);
    if (const Concept* c = system.find_by_intent(intent)) return c->id;
    return std::nullopt;
}

void disjunction(const ConceptSystem& system, std::string_view a, std::string_view b) {
    system.get_concept(a);
    system.get_concept(b);
    throw Error(ErrorCode::disjunction_unsupported,
                "disjunction of '" + std::string(a) + "' and '" + std::string(b) +
                    "' has no intensional definition and is not supported");
}

std::vector<Violation> check_rigidity(const ConceptSystem& system) {
    std::vector<Violation> out;
    for (const auto& [id, c] : system.concepts()) {
        std::vector<Id> descriptive;
        for (const auto& ch : c.differentia) {
            const Character* character = system.find_character(ch);
            if (character && character->kind == CharacterKind::descriptive) descriptive.push_back(ch);
        }
        if (descriptive.empty()) continue;
        Violation v{std::string(rules::rigidity), {id}, {}};
        v.subjects.insert(v.subjects.end(), descriptive.begin(), descriptive.end());
        v.message = "concept '" + id + "' is differentiated by descriptive character";
        if (descriptive.size() > 1) v.message += "s";
        for (std::size_t i = 0; i < descriptive.size(); ++i) v.message += (i ? ", '" : " '") + descriptive[i] + "'";
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

void check_characters(const ConceptSystem& system, std::vector<Violation>& out) {
    for (const auto& [id, ch] : system.characters()) {
        if (!is_valid_id(id) || id != ch.id)
            out.push_back({std::string(rules::invalid_id), {id}, "character id '" + id + "' is not a valid id"});
        if (ch.labels.empty())
            out.push_back({std::string(rules::empty_labels), {id}, "character '" + id + "' has no label"});
        for (const auto& [lang, mf] : ch.modifier_forms) {
            if (!ch.labels.contains(lang))
                out.push_back({std::string(rules::modifier_without_label), {id},
                               "character '" + id + "' has a " + lang + " modifier form but no " + lang + " label"});
        }
    }
}

void check_concept_shape(const ConceptSystem& system, const Concept& c, std::vector<Violation>& out) {
    const Id& id = c.id;
    if (!is_valid_id(id)) out.push_back({std::string(rules::invalid_id), {id}, "concept id '" + id + "' is not a valid id"});

    IdSet referenced = set_union(c.intent, c.differentia);
    for (const auto& ch : referenced) {
        if (!system.find_character(ch))
            out.push_back({std::string(rules::dangling_character), {id, ch},
                           "concept '" + id + "' references unknown character '" + ch + "'"});
    }
    if (c.differentia.empty())
        out.push_back({std::string(rules::empty_differentia), {id}, "concept '" + id + "' has an empty differentia"});

    if (!c.genus) {
        if (c.differentia != c.intent)
            out.push_back({std::string(rules::intent_composition), {id},
                           "root concept '" + id + "' must have differentia equal to its intent"});
        return;
    }
    const Concept* g = system.find_concept(*c.genus);
    if (!g) {
        out.push_back({std::string(rules::dangling_genus), {id, *c.genus},
                       "concept '" + id + "' has unknown genus '" + *c.genus + "'"});
        return;
    }
    if (intersects(c.differentia, g->intent))
        out.push_back({std::string(rules::overlapping_differentia), {id, g->id},
                       "differentia of '" + id + "' overlaps the intent of its genus '" + g->id + "'"});
    if (c.intent != set_union(g->intent, c.differentia))
        out.push_back({std::string(rules::intent_composition), {id, g->id},
                       "intent of '" + id + "' is not the intent of '" + g->id + "' plus its differentia"});
}

void check_acyclic(const ConceptSystem& system, std::vector<Violation>& out) {
    // 0 = unvisited, 1 = on the current genus path, 2 = done.
    std::map<Id, int, std::less<>> state;
    for (const auto& [start, unused] : system.concepts()) {
        if (state[start] != 0) continue;
        std::vector<Id> path;
        const Concept* cur = &system.concepts().at(start);
        while (cur && state[cur->id] == 0) {
            state[cur->id] = 1;
            path.push_back(cur->id);
            cur = cur->genus ? system.find_concept(*cur->genus) : nullptr;
        }
        if (cur && state[cur->id] == 1) {
            auto first = std::find(path.begin(), path.end(), cur->id);
            std::vector<Id> cycle(first, path.end());
            std::sort(cycle.begin(), cycle.end());
            std::string msg = "genus links form a cycle through";
            for (const auto& c : cycle) msg += " '" + c + "'";
            out.push_back({std::string(rules::acyclic_genus), cycle, msg});
        }
        for (const auto& p : path) state[p] = 2;
    }
}

void check_unique_intents(const ConceptSystem& system, std::vector<Violation>& out) {
    std::map<IdSet, std::vector<Id>> by_intent;
    for (const auto& [id, c] : system.concepts()) by_intent[c.intent].push_back(id);
    for (const auto& [intent, ids] : by_intent) {
        if (ids.size() < 2) continue;
        std::string msg = "concepts";
        for (const auto& id : ids) msg += " '" + id + "'";
        msg += " share the same intent";
        out.push_back({std::string(rules::unique_intent), ids, msg});
    }
}

}  // namespace

std::vector<Violation> check_system(const ConceptSystem& system) {
    std::vector<Violation> out;
    check_characters(system, out);
    for (const auto& [id, c] : system.concepts()) {
        if (id != c.id) out.push_back({std::string(rules::invalid_id), {id}, "concept key and id differ"});
        check_concept_shape(system, c, out);
    }
    check_acyclic(system, out);
    check_unique_intents(system, out);
    return out;
}

}  // namespace ontoterm

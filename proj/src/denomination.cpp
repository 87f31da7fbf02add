#include "ontoterm/denomination.h"

#include <algorithm>
#include <set>

#include "ontoterm/text.h"

namespace ontoterm {

NamingConvention naming_convention(const Language& lang) {
    static const std::set<std::string, std::less<>> head_final = {"en", "de", "nl", "sv", "da", "no", "fi",
                                                                   "ja", "ko", "zh", "tr", "hu"};
    NamingConvention nc;
    nc.language = lang;
    std::string_view base = lang;
    if (auto dash = base.find_first_of("-_"); dash != std::string_view::npos) base = base.substr(0, dash);
    nc.default_position = head_final.contains(base) ? ModifierPosition::before_head : ModifierPosition::after_head;
    return nc;
}

namespace {

std::string combine(const std::string& base, const std::vector<std::string>& before,
                    const std::vector<std::string>& after, const std::string& sep) {
    std::string out;
    for (const auto& f : before) out += f + sep;
    out += base;
    for (const auto& f : after) out += sep + f;
    return out;
}

// Modifier forms of one differentiation step, or nullopt when a form is
// missing in `lang`.
std::optional<ModifierGroup> step_group(const ConceptSystem& system, const Concept& c, const Language& lang,
                                        Id* missing = nullptr) {
    ModifierGroup g;
    g.concept_id = c.id;
    for (const auto& ch_id : c.differentia) {
        const Character& ch = system.character(ch_id);
        auto it = ch.modifier_forms.find(lang);
        if (it == ch.modifier_forms.end()) {
            if (missing) *missing = ch_id;
            return std::nullopt;
        }
        (it->second.position == ModifierPosition::before_head ? g.before : g.after).push_back(it->second.form);
    }
    return g;
}

const std::string* stored(const Concept& c, const Language& lang) {
    auto it = c.denominations.find(lang);
    return it == c.denominations.end() ? nullptr : &it->second;
}

void guard_depth(const ConceptSystem& system, std::size_t depth) {
    if (depth > system.concepts().size())
        throw Error(ErrorCode::invariant_violation, "genus chain is cyclic");
}

std::string synthesize(const ConceptSystem& system, const Concept& c, const Language& lang, std::size_t depth) {
    guard_depth(system, depth);
    if (c.is_root()) {
        if (const std::string* s = stored(c, lang)) return *s;
        throw Error(ErrorCode::missing_root_denomination,
                    "root concept '" + c.id + "' has no " + lang + " denomination");
    }
    const Concept& g = system.get_concept(*c.genus);
    std::string base;
    if (const std::string* s = stored(g, lang))
        base = *s;
    else
        base = synthesize(system, g, lang, depth + 1);
    Id missing;
    auto group = step_group(system, c, lang, &missing);
    if (!group)
        throw Error(ErrorCode::missing_modifier_form,
                    "character '" + missing + "' has no " + lang + " modifier form (needed by '" + c.id + "')");
    return combine(base, group->before, group->after, naming_convention(lang).separator);
}

// Decomposition of the term `c` contributes as a genus: its stored
// denomination if any, otherwise what synthesis would produce.
std::optional<Decomposition> effective(const ConceptSystem& system, const Concept& c, const Language& lang,
                                       std::size_t depth) {
    guard_depth(system, depth);
    const std::string* own = stored(c, lang);
    if (c.is_root()) {
        if (!own) return std::nullopt;
        return Decomposition{*own, {}};
    }
    std::optional<Decomposition> chained;
    if (const Concept* g = system.find_concept(*c.genus)) {
        chained = effective(system, *g, lang, depth + 1);
        if (chained) {
            auto group = step_group(system, c, lang);
            if (group)
                chained->groups.push_back(std::move(*group));
            else
                chained.reset();
        }
    }
    if (!own) return chained;
    if (chained && text::term_key(render(*chained, lang)) == text::term_key(*own)) return chained;
    return Decomposition{*own, {}};
}

}  // namespace

std::string render(const Decomposition& d, const Language& lang) {
    const std::string sep = naming_convention(lang).separator;
    std::string term = d.head;
    for (const auto& g : d.groups) term = combine(term, g.before, g.after, sep);
    return term;
}

std::string synthesize_denomination(const ConceptSystem& system, std::string_view concept_id, const Language& lang) {
    return synthesize(system, system.get_concept(concept_id), lang, 0);
}

std::string denominate(ConceptSystem& system, std::string_view concept_id, const Language& lang) {
    const Concept& c = system.get_concept(concept_id);
    if (c.is_root()) return synthesize(system, c, lang, 0);

    // Name unnamed ancestors first so that every genus term is stored.
    std::vector<Id> chain;
    for (const Concept* cur = &c; cur; cur = cur->genus ? &system.get_concept(*cur->genus) : nullptr) {
        guard_depth(system, chain.size());
        chain.push_back(cur->id);
    }
    std::string term;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Concept& cur = system.get_concept(*it);
        bool target = *it == concept_id;
        if (!target && stored(cur, lang)) continue;
        term = synthesize(system, cur, lang, 0);
        system.set_denomination(*it, lang, term);
    }
    return term;
}

std::vector<Id> denominate_all(ConceptSystem& system, const Language& lang) {
    ConceptSystem next = system;
    for (const auto& [id, c] : system.concepts()) {
        if (stored(next.get_concept(id), lang)) continue;
        try {
            denominate(next, id, lang);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::missing_modifier_form || e.code() == ErrorCode::missing_root_denomination)
                continue;
            throw;
        }
    }
    std::vector<Id> named;
    for (const auto& [id, c] : next.concepts())
        if (stored(c, lang) && !stored(system.get_concept(id), lang)) named.push_back(id);

    std::map<std::string, std::vector<Id>> by_key;
    for (const auto& [id, c] : next.concepts())
        if (const std::string* s = stored(c, lang)) by_key[text::term_key(*s)].push_back(id);
    for (const auto& [key, ids] : by_key) {
        if (ids.size() < 2) continue;
        bool fresh = std::any_of(ids.begin(), ids.end(),
                                 [&](const Id& id) { return std::binary_search(named.begin(), named.end(), id); });
        if (fresh)
            throw Error(ErrorCode::duplicate_denomination,
                        "generated " + lang + " denomination '" + key + "' is shared by '" + ids[0] + "' and '" +
                            ids[1] + "'");
    }
    system = std::move(next);
    return named;
}

std::optional<Decomposition> decompose(const ConceptSystem& system, std::string_view concept_id, const Language& lang) {
    const Concept& c = system.get_concept(concept_id);
    if (!stored(c, lang)) return std::nullopt;
    return effective(system, c, lang, 0);
}

Id parse_denomination(const ConceptSystem& system, std::string_view term, const Language& lang) {
    const std::string key = text::term_key(term);
    std::vector<Id> hits;
    if (!key.empty()) {
        for (const auto& [id, c] : system.concepts()) {
            const std::string* s = stored(c, lang);
            if (s && text::term_key(*s) == key) hits.push_back(id);
        }
    }
    if (hits.empty())
        throw Error(ErrorCode::no_match, "no " + lang + " normalized term '" + std::string(term) + "'");
    if (hits.size() > 1)
        throw Error(ErrorCode::ambiguous_match,
                    "normalized term '" + std::string(term) + "' names several concepts: " + hits[0] + ", " + hits[1]);
    return hits.front();
}

std::vector<Violation> motivation_report(const ConceptSystem& system, const Language& lang) {
    std::vector<Violation> out;
    std::map<std::string, std::vector<Id>> by_key;
    for (const auto& [id, c] : system.concepts()) {
        const std::string* own = stored(c, lang);
        if (!own) continue;
        by_key[text::term_key(*own)].push_back(id);
        if (c.is_root()) continue;
        const Concept* g = system.find_concept(*c.genus);
        const std::string* genus_term = g ? stored(*g, lang) : nullptr;
        if (!genus_term) continue;
        auto own_tokens = text::tokenize(*own);
        auto genus_tokens = text::tokenize(*genus_term);
        if (!text::contains_run(own_tokens, genus_tokens))
            out.push_back({std::string(rules::unmotivated_name), {id, g->id},
                           lang + " denomination '" + *own + "' of '" + id + "' does not contain its genus term '" +
                               *genus_term + "'"});
    }
    for (const auto& [key, ids] : by_key) {
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                out.push_back({std::string(rules::duplicate_denomination), {ids[i], ids[j]},
                               "'" + ids[i] + "' and '" + ids[j] + "' share the " + lang + " denomination '" + key + "'"});
    }
    return out;
}

std::vector<Language> languages(const ConceptSystem& system) {
    std::set<Language> langs;
    for (const auto& [id, ch] : system.characters()) {
        for (const auto& [l, unused] : ch.labels) langs.insert(l);
        for (const auto& [l, unused] : ch.modifier_forms) langs.insert(l);
    }
    for (const auto& [id, c] : system.concepts())
        for (const auto& [l, unused] : c.denominations) langs.insert(l);
    return {langs.begin(), langs.end()};
}

}  // namespace ontoterm

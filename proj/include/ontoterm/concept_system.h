#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontoterm/error.h"

namespace ontoterm {

using Id = std::string;
using IdSet = std::set<Id, std::less<>>;
using Language = std::string;

// Essential characters define and differentiate concepts; descriptive
// characters record qualities that admit of degree.
enum class CharacterKind { essential, descriptive };

// Where a differentia's modifier goes relative to the genus term (the head).
enum class ModifierPosition { after_head, before_head };

std::string_view to_string(CharacterKind kind);
std::string_view to_string(ModifierPosition pos);
CharacterKind parse_character_kind(std::string_view s);
ModifierPosition parse_modifier_position(std::string_view s);

struct ModifierForm {
    std::string form;
    ModifierPosition position = ModifierPosition::after_head;

    bool operator==(const ModifierForm&) const = default;
};

struct Character {
    Id id;
    CharacterKind kind = CharacterKind::essential;
    std::map<Language, std::string> labels;
    std::map<Language, ModifierForm> modifier_forms;

    bool operator==(const Character&) const = default;
};

struct Concept {
    Id id;
    IdSet intent;
    std::optional<Id> genus;
    IdSet differentia;
    std::map<Language, std::string> denominations;

    bool is_root() const { return !genus.has_value(); }
    bool operator==(const Concept&) const = default;
};

// Ids are opaque but restricted to [A-Za-z0-9._-]+ so they can travel in
// URLs, CSV headers and CLI arguments unescaped.
bool is_valid_id(std::string_view id);

// A system of characters and concepts. Value type: a copy is an independent
// snapshot, and every successful mutation bumps version().
class ConceptSystem {
public:
    using CharacterMap = std::map<Id, Character, std::less<>>;
    using ConceptMap = std::map<Id, Concept, std::less<>>;

    const CharacterMap& characters() const { return characters_; }
    const ConceptMap& concepts() const { return concepts_; }
    std::uint64_t version() const { return version_; }

    const Character* find_character(std::string_view id) const;
    const Concept* find_concept(std::string_view id) const;
    // Throw unknown_character / unknown_concept.
    const Character& character(std::string_view id) const;
    const Concept& get_concept(std::string_view id) const;

    // Concept whose intent is exactly `intent`, if any.
    const Concept* find_by_intent(const IdSet& intent) const;
    // Concepts whose genus is `id`, sorted by id.
    std::vector<Id> children(std::string_view id) const;
    std::vector<Id> roots() const;

    // Registers a character. An empty id is replaced by a fresh "ch<N>".
    Id add_character(Character character);

    // Specific definition: intent = genus.intent ∪ differentia. Without a
    // genus the concept is a root and its differentia is its whole intent.
    Id define_concept(const std::optional<Id>& genus, const IdSet& differentia, Id id = {});

    void set_denomination(std::string_view concept_id, const Language& lang, std::string term);

    // Loader entry points: no validation beyond id shape. Callers run
    // check_system on the result.
    void insert_character_unchecked(Character character);
    void insert_concept_unchecked(Concept concept_value);

    // Content equality; the version counter is not compared.
    bool operator==(const ConceptSystem& other) const;

private:
    Id fresh_id(std::string_view prefix) const;

    CharacterMap characters_;
    ConceptMap concepts_;
    std::uint64_t version_ = 0;
};

// intent(general) ⊆ intent(specific).
bool subsumes(const ConceptSystem& system, std::string_view general, std::string_view specific);

// Every concept subsumed by `id`, including itself, sorted by id.
std::vector<Id> descendants(const ConceptSystem& system, std::string_view id);

// Conjunction is intent union; returns the existing concept carrying that
// intent, or nothing when the union is not a named concept.
std::optional<Id> conjunction(const ConceptSystem& system, std::string_view a, std::string_view b);

// Always throws disjunction_unsupported: a disjunction has no intensional
// definition in a characters-based concept system.
[[noreturn]] void disjunction(const ConceptSystem& system, std::string_view a, std::string_view b);

// One violation per concept whose differentia uses a descriptive character.
std::vector<Violation> check_rigidity(const ConceptSystem& system);

// All structural invariant breaches: id shape, dangling ids, labels,
// genus acyclicity, intent composition and unique intents.
std::vector<Violation> check_system(const ConceptSystem& system);

namespace rules {
inline constexpr std::string_view invalid_id = "invalid-id";
inline constexpr std::string_view empty_labels = "empty-labels";
inline constexpr std::string_view modifier_without_label = "modifier-without-label";
inline constexpr std::string_view dangling_character = "dangling-character";
inline constexpr std::string_view dangling_genus = "dangling-genus";
inline constexpr std::string_view acyclic_genus = "acyclic-genus";
inline constexpr std::string_view empty_differentia = "empty-differentia";
inline constexpr std::string_view overlapping_differentia = "overlapping-differentia";
inline constexpr std::string_view intent_composition = "intent-composition";
inline constexpr std::string_view unique_intent = "unique-intent";
inline constexpr std::string_view rigidity = "rigidity";
inline constexpr std::string_view unmotivated_name = "unmotivated-name";
inline constexpr std::string_view duplicate_denomination = "duplicate-denomination";
inline constexpr std::string_view unnamed_genus = "unnamed-genus";
}  // namespace rules

}  // namespace ontoterm

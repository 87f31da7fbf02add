#pragma once

#include <string>
#include <vector>

#include "ontoterm/concept_system.h"

namespace ontoterm {

// Placement of modifiers (differentia) relative to the head (genus term).
struct NamingConvention {
    Language language;
    ModifierPosition default_position = ModifierPosition::after_head;
    std::string separator = " ";
};

// French and other Romance codes default to after_head, English and German
// to before_head; unknown languages use after_head.
NamingConvention naming_convention(const Language& lang);

// A normalized term split along the genus chain: the root's head term and one
// modifier group per differentiation step, outermost step last.
struct ModifierGroup {
    Id concept_id;
    std::vector<std::string> before;  // forms placed before the head, in character-id order
    std::vector<std::string> after;   // forms placed after the head, in character-id order
};

struct Decomposition {
    std::string head;
    std::vector<ModifierGroup> groups;
};

// Recombines head and groups in chain order using the language convention.
std::string render(const Decomposition& d, const Language& lang);

// Synthesizes the normalized term of `concept_id` without storing it. The
// genus term is the genus's stored denomination when present, otherwise it
// is synthesized recursively. Throws missing_root_denomination or
// missing_modifier_form.
std::string synthesize_denomination(const ConceptSystem& system, std::string_view concept_id, const Language& lang);

// Synthesizes and stores the denomination (and any missing ones up the genus
// chain) on the concept.
std::string denominate(ConceptSystem& system, std::string_view concept_id, const Language& lang);

// Generates denominations in `lang` for every concept whose chain allows it,
// leaving manual overrides untouched. Throws duplicate_denomination (and
// leaves `system` unchanged) when two concepts would share a term. Returns
// the ids that were (re)named.
std::vector<Id> denominate_all(ConceptSystem& system, const Language& lang);

// Chain decomposition of the stored denomination. A manual override that the
// chain cannot reproduce becomes a bare head with no groups; an ancestor
// override likewise becomes the head. Empty when the concept has no
// denomination in `lang`.
std::optional<Decomposition> decompose(const ConceptSystem& system, std::string_view concept_id, const Language& lang);

// Exact, token-level and case-folded match against stored denominations.
// Throws no_match, or ambiguous_match when overrides collide.
Id parse_denomination(const ConceptSystem& system, std::string_view term, const Language& lang);

// Unmotivated names (genus term not a contiguous token block of the
// species term) and duplicated denominations.
std::vector<Violation> motivation_report(const ConceptSystem& system, const Language& lang);

// Every language used by a denomination, label or modifier form.
std::vector<Language> languages(const ConceptSystem& system);

}  // namespace ontoterm

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontoterm/concept_system.h"

namespace ontoterm {

enum class TermStatus { normalized, usage };
enum class VariantKind { ellipsis, synonym, other };

std::string_view to_string(TermStatus s);
std::string_view to_string(VariantKind k);
TermStatus parse_term_status(std::string_view s);
VariantKind parse_variant_kind(std::string_view s);

struct Term {
    std::string form;
    Language language;
    TermStatus status = TermStatus::usage;
    Id concept_id;
    std::optional<VariantKind> variant_kind;

    bool operator==(const Term&) const = default;
};

// Registered usage terms. Normalized terms are not stored here: they are the
// concepts' denominations and are projected on demand by terms_of().
class Termbase {
public:
    // Idempotent on (case-folded form, language, concept). Throws
    // unknown_concept.
    const Term& register_usage(const ConceptSystem& system, std::string form, const Language& lang,
                               std::string_view concept_id, std::optional<VariantKind> kind);

    const std::vector<Term>& terms() const { return terms_; }
    std::vector<const Term*> lookup(const Language& lang, std::string_view form) const;
    std::vector<const Term*> by_concept(std::string_view concept_id) const;
    bool has_language(const Language& lang) const;

    std::uint64_t version() const { return version_; }
    bool operator==(const Termbase& other) const { return terms_ == other.terms_; }

private:
    void reindex();

    std::vector<Term> terms_;  // kept sorted by (language, key, concept)
    std::map<std::pair<Language, std::string>, std::vector<std::size_t>, std::less<>> by_form_;
    std::map<Id, std::vector<std::size_t>, std::less<>> by_concept_;
    std::uint64_t version_ = 0;
};

// Normalized terms (from denominations) followed by usage terms, for one
// concept across all languages.
std::vector<Term> terms_of(const Termbase& termbase, const ConceptSystem& system, std::string_view concept_id);

struct EllipsisCandidate {
    Id concept_id;
    std::size_t dropped_groups = 0;

    bool operator==(const EllipsisCandidate&) const = default;
};

enum class Provenance { normalized, usage, ellipsis, none };
enum class ResolutionStatus { resolved, ambiguous, unresolved };

std::string_view to_string(Provenance p);
std::string_view to_string(ResolutionStatus s);

struct Resolution {
    ResolutionStatus status = ResolutionStatus::unresolved;
    Provenance provenance = Provenance::none;
    std::vector<Id> concepts;  // the resolved concept, or every candidate when ambiguous
    std::optional<VariantKind> variant_kind;  // for usage matches
    // Ellipsis readings shadowed by a higher-precedence rule.
    std::vector<EllipsisCandidate> alternatives;

    bool resolved() const { return status == ResolutionStatus::resolved; }
    bool operator==(const Resolution&) const = default;
};

// Precomputed lookup tables over one (termbase, system, language) snapshot.
// Keys are text::term_key of the forms.
class Resolver {
public:
    Resolver(const Termbase& termbase, const ConceptSystem& system, Language lang);

    const Language& language() const { return lang_; }
    // Longest known term, in tokens.
    std::size_t max_term_tokens() const { return max_tokens_; }
    bool empty() const { return normalized_.empty() && usage_.empty(); }

    Resolution resolve_key(const std::string& key) const;
    Resolution resolve(std::string_view form) const;
    std::vector<EllipsisCandidate> ellipsis_candidates(std::string_view form) const;

private:
    struct UsageHit {
        Id concept_id;
        std::optional<VariantKind> kind;
    };

    Language lang_;
    std::unordered_map<std::string, std::vector<Id>> normalized_;
    std::unordered_map<std::string, std::vector<UsageHit>> usage_;
    std::unordered_map<std::string, std::vector<EllipsisCandidate>> ellipsis_;
    std::size_t max_tokens_ = 0;
};

// Concepts whose normalized term, with a non-empty proper subset of its
// modifier groups kept in order, equals `form`. Ranked by fewest dropped
// groups, then concept id.
std::vector<EllipsisCandidate> ellipsis_candidates(const Termbase& termbase, const ConceptSystem& system,
                                                   std::string_view form, const Language& lang);

// Precedence: normalized term, registered usage term, unique ellipsis
// candidate, ambiguous (all candidates), unresolved.
Resolution resolve(const Termbase& termbase, const ConceptSystem& system, std::string_view form, const Language& lang);

}  // namespace ontoterm

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ontoterm/concept_system.h"
#include "ontoterm/lexicon.h"

namespace ontoterm {

struct Document {
    Id id;
    Language language;
    std::string title;
    std::string body;

    bool operator==(const Document&) const = default;
};

struct Posting {
    Id concept_id;
    Id doc;
    std::uint32_t count = 0;

    bool operator==(const Posting&) const = default;
};

// A term occurrence that resolved to several concepts and was left out of
// the index.
struct AmbiguousOccurrence {
    Id doc;
    std::string surface;  // case-folded matched tokens
    Provenance provenance = Provenance::none;
    std::vector<Id> candidates;

    bool operator==(const AmbiguousOccurrence&) const = default;
};

// Concept occurrences found in one text by greedy longest match.
struct ConceptMatches {
    std::map<Id, std::uint32_t> counts;
    std::vector<AmbiguousOccurrence> ambiguous;
};

// Scans tokens left to right, at each position trying the longest n-gram
// first (up to the longest known term). Resolved and ambiguous matches both
// consume their tokens; unmatched tokens advance by one.
ConceptMatches match_concepts(const Resolver& resolver, std::string_view text);

struct SearchHit {
    Id doc;
    Language language;
    std::uint64_t score = 0;

    bool operator==(const SearchHit&) const = default;
};

struct SearchResult {
    std::vector<Id> matched_concepts;   // sorted by id
    std::vector<Id> expanded_concepts;  // sorted by id, ⊇ matched
    std::vector<AmbiguousOccurrence> ambiguous;  // query occurrences with several readings
    std::vector<SearchHit> hits;        // score desc, then doc id asc

    bool operator==(const SearchResult&) const = default;
};

// Documents and their concept postings. Value type; documents are immutable
// once added.
class DocStore {
public:
    // Indexes `doc` against the given snapshot. Throws duplicate_document, or
    // unsupported_language when no term exists in the document's language.
    std::vector<Posting> index_document(const Termbase& termbase, const ConceptSystem& system, Document doc);
    void remove_document(std::string_view id);
    // Loader entry point: stores without indexing or language check; call
    // reindex() afterwards. Throws duplicate_document.
    void insert_document_unchecked(Document doc);

    // Rebuilds every posting against a new snapshot of system and termbase.
    void reindex(const Termbase& termbase, const ConceptSystem& system);

    const std::map<Id, Document, std::less<>>& documents() const { return documents_; }
    const Document* find_document(std::string_view id) const;
    // Postings of one concept, by doc id.
    const std::map<Id, std::uint32_t>* postings(std::string_view concept_id) const;
    std::vector<Posting> postings_of_document(std::string_view doc) const;
    const std::vector<AmbiguousOccurrence>& ambiguity_report() const { return ambiguous_; }

    std::uint64_t version() const { return version_; }
    bool operator==(const DocStore& other) const { return documents_ == other.documents_; }

private:
    std::vector<Posting> add_postings(const Document& doc, const ConceptMatches& matches);

    std::map<Id, Document, std::less<>> documents_;
    std::map<Id, std::map<Id, std::uint32_t>, std::less<>> postings_;  // concept -> doc -> count
    std::vector<AmbiguousOccurrence> ambiguous_;
    std::uint64_t version_ = 0;
};

// Union of descendants() over `concepts`, sorted by id.
std::vector<Id> expand_query(const ConceptSystem& system, const std::vector<Id>& concepts);

// Resolves the query with the indexing pipeline in `lang`, optionally expands
// to subsumed concepts, and ranks documents of every language by their summed
// posting counts over the expanded concepts.
SearchResult search(const DocStore& store, const Termbase& termbase, const ConceptSystem& system,
                    std::string_view query, const Language& lang, bool expand);

}  // namespace ontoterm

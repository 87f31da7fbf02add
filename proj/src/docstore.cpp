#include "ontoterm/docstore.h"

#include <algorithm>
#include <set>

#include "ontoterm/text.h"

namespace ontoterm {

namespace {

void scan(const Resolver& resolver, const std::vector<std::string>& tokens, ConceptMatches& out) {
    const std::size_t longest = resolver.max_term_tokens();
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t consumed = 0;
        for (std::size_t n = std::min(longest, tokens.size() - i); n >= 1; --n) {
            std::string key = text::join(std::span<const std::string>(tokens.data() + i, n));
            Resolution r = resolver.resolve_key(key);
            if (r.status == ResolutionStatus::unresolved) continue;
            if (r.resolved())
                ++out.counts[r.concepts.front()];
            else
                out.ambiguous.push_back({{}, std::move(key), r.provenance, std::move(r.concepts)});
            consumed = n;
            break;
        }
        i += consumed ? consumed : 1;
    }
}

}  // namespace

ConceptMatches match_concepts(const Resolver& resolver, std::string_view text) {
    ConceptMatches out;
    scan(resolver, text::tokenize(text), out);
    return out;
}

// ---- DocStore ---------------------------------------------------------------

const Document* DocStore::find_document(std::string_view id) const {
    auto it = documents_.find(id);
    return it == documents_.end() ? nullptr : &it->second;
}

const std::map<Id, std::uint32_t>* DocStore::postings(std::string_view concept_id) const {
    auto it = postings_.find(concept_id);
    return it == postings_.end() ? nullptr : &it->second;
}

std::vector<Posting> DocStore::postings_of_document(std::string_view doc) const {
    std::vector<Posting> out;
    for (const auto& [concept_id, docs] : postings_) {
        auto it = docs.find(std::string(doc));
        if (it != docs.end()) out.push_back({concept_id, it->first, it->second});
    }
    return out;
}

std::vector<Posting> DocStore::add_postings(const Document& doc, const ConceptMatches& matches) {
    std::vector<Posting> out;
    for (const auto& [concept_id, count] : matches.counts) {
        postings_[concept_id][doc.id] = count;
        out.push_back({concept_id, doc.id, count});
    }
    for (auto occurrence : matches.ambiguous) {
        occurrence.doc = doc.id;
        ambiguous_.push_back(std::move(occurrence));
    }
    return out;
}

namespace {

ConceptMatches match_document(const Resolver& resolver, const Document& doc) {
    // Title and body are scanned separately so no match spans the two.
    ConceptMatches m;
    scan(resolver, text::tokenize(doc.title), m);
    scan(resolver, text::tokenize(doc.body), m);
    return m;
}

}  // namespace

std::vector<Posting> DocStore::index_document(const Termbase& termbase, const ConceptSystem& system, Document doc) {
    if (!is_valid_id(doc.id)) throw Error(ErrorCode::invalid_argument, "invalid document id '" + doc.id + "'");
    if (documents_.contains(doc.id))
        throw Error(ErrorCode::duplicate_document, "document '" + doc.id + "' already exists");
    Resolver resolver(termbase, system, doc.language);
    if (resolver.empty())
        throw Error(ErrorCode::unsupported_language, "no terms are known in language '" + doc.language + "'");

    ConceptMatches matches = match_document(resolver, doc);
    auto [it, inserted] = documents_.emplace(doc.id, std::move(doc));
    auto out = add_postings(it->second, matches);
    ++version_;
    return out;
}

void DocStore::insert_document_unchecked(Document doc) {
    if (!is_valid_id(doc.id)) throw Error(ErrorCode::invalid_argument, "invalid document id '" + doc.id + "'");
    Id id = doc.id;
    if (!documents_.emplace(id, std::move(doc)).second)
        throw Error(ErrorCode::duplicate_document, "document '" + id + "' already exists");
    ++version_;
}

void DocStore::remove_document(std::string_view id) {
    auto it = documents_.find(id);
    if (it == documents_.end()) throw Error(ErrorCode::unknown_document, "unknown document '" + std::string(id) + "'");
    const Id doc = it->first;
    for (auto pit = postings_.begin(); pit != postings_.end();) {
        pit->second.erase(doc);
        pit = pit->second.empty() ? postings_.erase(pit) : std::next(pit);
    }
    std::erase_if(ambiguous_, [&](const AmbiguousOccurrence& a) { return a.doc == doc; });
    documents_.erase(it);
    ++version_;
}

void DocStore::reindex(const Termbase& termbase, const ConceptSystem& system) {
    postings_.clear();
    ambiguous_.clear();
    std::map<Language, Resolver> resolvers;
    for (const auto& [id, doc] : documents_) {
        auto it = resolvers.find(doc.language);
        if (it == resolvers.end()) it = resolvers.emplace(doc.language, Resolver(termbase, system, doc.language)).first;
        add_postings(doc, match_document(it->second, doc));
    }
    ++version_;
}

// ---- queries ----------------------------------------------------------------

std::vector<Id> expand_query(const ConceptSystem& system, const std::vector<Id>& concepts) {
    std::set<Id> out;
    for (const auto& c : concepts) {
        auto d = descendants(system, c);
        out.insert(d.begin(), d.end());
    }
    return {out.begin(), out.end()};
}

SearchResult search(const DocStore& store, const Termbase& termbase, const ConceptSystem& system,
                    std::string_view query, const Language& lang, bool expand) {
    SearchResult result;
    Resolver resolver(termbase, system, lang);
    ConceptMatches matches = match_concepts(resolver, query);

    // Ambiguous query terms contribute every reading; the caller sees them
    // listed in `ambiguous`.
    std::set<Id> matched;
    for (const auto& [id, count] : matches.counts) matched.insert(id);
    for (const auto& a : matches.ambiguous) matched.insert(a.candidates.begin(), a.candidates.end());
    result.matched_concepts.assign(matched.begin(), matched.end());
    result.ambiguous = std::move(matches.ambiguous);
    result.expanded_concepts = expand ? expand_query(system, result.matched_concepts) : result.matched_concepts;

    std::map<Id, std::uint64_t> scores;
    for (const auto& c : result.expanded_concepts) {
        if (const auto* docs = store.postings(c))
            for (const auto& [doc, count] : *docs) scores[doc] += count;
    }
    for (const auto& [doc, score] : scores) {
        const Document* d = store.find_document(doc);
        result.hits.push_back({doc, d ? d->language : Language{}, score});
    }
    std::stable_sort(result.hits.begin(), result.hits.end(),
                     [](const SearchHit& a, const SearchHit& b) { return a.score > b.score; });
    return result;
}

}  // namespace ontoterm

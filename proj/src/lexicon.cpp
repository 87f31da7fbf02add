#include "ontoterm/lexicon.h"

#include <algorithm>
#include <bit>
#include <tuple>

#include "ontoterm/denomination.h"
#include "ontoterm/text.h"

namespace ontoterm {

std::string_view to_string(TermStatus s) { return s == TermStatus::normalized ? "normalized" : "usage"; }

std::string_view to_string(VariantKind k) {
    switch (k) {
        case VariantKind::ellipsis: return "ellipsis";
        case VariantKind::synonym: return "synonym";
        case VariantKind::other: return "other";
    }
    return "other";
}

TermStatus parse_term_status(std::string_view s) {
    if (s == "normalized") return TermStatus::normalized;
    if (s == "usage") return TermStatus::usage;
    throw Error(ErrorCode::invalid_argument, "unknown term status '" + std::string(s) + "'");
}

VariantKind parse_variant_kind(std::string_view s) {
    if (s == "ellipsis") return VariantKind::ellipsis;
    if (s == "synonym") return VariantKind::synonym;
    if (s == "other") return VariantKind::other;
    throw Error(ErrorCode::invalid_argument, "unknown variant kind '" + std::string(s) + "'");
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::normalized: return "normalized";
        case Provenance::usage: return "usage";
        case Provenance::ellipsis: return "ellipsis";
        case Provenance::none: return "none";
    }
    return "none";
}

std::string_view to_string(ResolutionStatus s) {
    switch (s) {
        case ResolutionStatus::resolved: return "resolved";
        case ResolutionStatus::ambiguous: return "ambiguous";
        case ResolutionStatus::unresolved: return "unresolved";
    }
    return "unresolved";
}

// ---- Termbase ---------------------------------------------------------------

const Term& Termbase::register_usage(const ConceptSystem& system, std::string form, const Language& lang,
                                     std::string_view concept_id, std::optional<VariantKind> kind) {
    system.get_concept(concept_id);
    if (lang.empty()) throw Error(ErrorCode::invalid_argument, "language code must not be empty");
    const std::string key = text::term_key(form);
    if (key.empty()) throw Error(ErrorCode::invalid_argument, "usage term '" + form + "' has no word tokens");

    for (std::size_t idx : by_form_[{lang, key}]) {
        if (terms_[idx].concept_id == concept_id) return terms_[idx];
    }
    auto order = [](const Term& t) { return std::make_tuple(t.language, text::term_key(t.form), t.concept_id); };
    Term term{std::move(form), lang, TermStatus::usage, std::string(concept_id), kind};
    auto pos = std::upper_bound(terms_.begin(), terms_.end(), term,
                                [&](const Term& a, const Term& b) { return order(a) < order(b); });
    std::size_t at = static_cast<std::size_t>(pos - terms_.begin());
    terms_.insert(pos, std::move(term));
    reindex();
    ++version_;
    return terms_[at];
}

void Termbase::reindex() {
    by_form_.clear();
    by_concept_.clear();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        by_form_[{terms_[i].language, text::term_key(terms_[i].form)}].push_back(i);
        by_concept_[terms_[i].concept_id].push_back(i);
    }
}

std::vector<const Term*> Termbase::lookup(const Language& lang, std::string_view form) const {
    std::vector<const Term*> out;
    auto it = by_form_.find(std::make_pair(lang, text::term_key(form)));
    if (it == by_form_.end()) return out;
    for (std::size_t idx : it->second) out.push_back(&terms_[idx]);
    return out;
}

std::vector<const Term*> Termbase::by_concept(std::string_view concept_id) const {
    std::vector<const Term*> out;
    auto it = by_concept_.find(concept_id);
    if (it == by_concept_.end()) return out;
    for (std::size_t idx : it->second) out.push_back(&terms_[idx]);
    return out;
}

bool Termbase::has_language(const Language& lang) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.language == lang; });
}

std::vector<Term> terms_of(const Termbase& termbase, const ConceptSystem& system, std::string_view concept_id) {
    const Concept& c = system.get_concept(concept_id);
    std::vector<Term> out;
    for (const auto& [lang, form] : c.denominations)
        out.push_back({form, lang, TermStatus::normalized, c.id, std::nullopt});
    for (const Term* t : termbase.by_concept(concept_id)) out.push_back(*t);
    return out;
}

// ---- Resolver ---------------------------------------------------------------

namespace {

// Beyond this many modifier groups the 2^k variant enumeration is skipped.
constexpr std::size_t kMaxEllipsisGroups = 16;

void add_ellipsis_variants(const Decomposition& d, const Id& concept_id, const Language& lang,
                           std::unordered_map<std::string, std::vector<EllipsisCandidate>>& out,
                           std::size_t& max_tokens) {
    const std::size_t k = d.groups.size();
    if (k < 2 || k > kMaxEllipsisGroups) return;
    const std::string full = text::term_key(render(d, lang));
    const std::uint32_t all = (std::uint32_t{1} << k) - 1;
    for (std::uint32_t kept = 1; kept < all; ++kept) {
        Decomposition variant{d.head, {}};
        for (std::size_t i = 0; i < k; ++i)
            if (kept & (std::uint32_t{1} << i)) variant.groups.push_back(d.groups[i]);
        std::string rendered = render(variant, lang);
        std::string key = text::term_key(rendered);
        if (key.empty() || key == full) continue;
        std::size_t dropped = k - static_cast<std::size_t>(std::popcount(kept));
        auto& list = out[key];
        auto it = std::find_if(list.begin(), list.end(), [&](const auto& c) { return c.concept_id == concept_id; });
        if (it == list.end())
            list.push_back({concept_id, dropped});
        else
            it->dropped_groups = std::min(it->dropped_groups, dropped);
        max_tokens = std::max(max_tokens, text::tokenize(rendered).size());
    }
}

}  // namespace

Resolver::Resolver(const Termbase& termbase, const ConceptSystem& system, Language lang) : lang_(std::move(lang)) {
    for (const auto& [id, c] : system.concepts()) {
        auto it = c.denominations.find(lang_);
        if (it == c.denominations.end()) continue;
        auto tokens = text::tokenize(it->second);
        if (tokens.empty()) continue;
        normalized_[text::join(tokens)].push_back(id);
        max_tokens_ = std::max(max_tokens_, tokens.size());
        if (auto d = decompose(system, id, lang_)) add_ellipsis_variants(*d, id, lang_, ellipsis_, max_tokens_);
    }
    for (const Term& t : termbase.terms()) {
        if (t.language != lang_ || !system.find_concept(t.concept_id)) continue;
        auto tokens = text::tokenize(t.form);
        auto& hits = usage_[text::join(tokens)];
        if (std::none_of(hits.begin(), hits.end(), [&](const UsageHit& h) { return h.concept_id == t.concept_id; }))
            hits.push_back({t.concept_id, t.variant_kind});
        max_tokens_ = std::max(max_tokens_, tokens.size());
    }
    for (auto& [key, ids] : normalized_) std::sort(ids.begin(), ids.end());
    for (auto& [key, hits] : usage_)
        std::sort(hits.begin(), hits.end(), [](const UsageHit& a, const UsageHit& b) { return a.concept_id < b.concept_id; });
    for (auto& [key, list] : ellipsis_) {
        std::sort(list.begin(), list.end(), [](const EllipsisCandidate& a, const EllipsisCandidate& b) {
            return std::tie(a.dropped_groups, a.concept_id) < std::tie(b.dropped_groups, b.concept_id);
        });
    }
}

std::vector<EllipsisCandidate> Resolver::ellipsis_candidates(std::string_view form) const {
    auto it = ellipsis_.find(text::term_key(form));
    return it == ellipsis_.end() ? std::vector<EllipsisCandidate>{} : it->second;
}

Resolution Resolver::resolve(std::string_view form) const { return resolve_key(text::term_key(form)); }

Resolution Resolver::resolve_key(const std::string& key) const {
    Resolution r;
    if (key.empty()) return r;

    auto ell = ellipsis_.find(key);
    const std::vector<EllipsisCandidate> no_candidates;
    const auto& candidates = ell == ellipsis_.end() ? no_candidates : ell->second;

    if (auto it = normalized_.find(key); it != normalized_.end()) {
        r.provenance = Provenance::normalized;
        r.concepts = it->second;
        r.status = r.concepts.size() == 1 ? ResolutionStatus::resolved : ResolutionStatus::ambiguous;
        for (const auto& c : candidates)
            if (std::find(r.concepts.begin(), r.concepts.end(), c.concept_id) == r.concepts.end())
                r.alternatives.push_back(c);
        return r;
    }
    if (auto it = usage_.find(key); it != usage_.end()) {
        r.provenance = Provenance::usage;
        for (const auto& h : it->second) r.concepts.push_back(h.concept_id);
        if (r.concepts.size() == 1) {
            r.status = ResolutionStatus::resolved;
            r.variant_kind = it->second.front().kind;
        } else {
            r.status = ResolutionStatus::ambiguous;
        }
        for (const auto& c : candidates)
            if (std::find(r.concepts.begin(), r.concepts.end(), c.concept_id) == r.concepts.end())
                r.alternatives.push_back(c);
        return r;
    }
    if (!candidates.empty()) {
        r.provenance = Provenance::ellipsis;
        for (const auto& c : candidates) r.concepts.push_back(c.concept_id);
        r.status = candidates.size() == 1 ? ResolutionStatus::resolved : ResolutionStatus::ambiguous;
        if (r.resolved()) r.variant_kind = VariantKind::ellipsis;
    }
    return r;
}

std::vector<EllipsisCandidate> ellipsis_candidates(const Termbase& termbase, const ConceptSystem& system,
                                                   std::string_view form, const Language& lang) {
    return Resolver(termbase, system, lang).ellipsis_candidates(form);
}

Resolution resolve(const Termbase& termbase, const ConceptSystem& system, std::string_view form, const Language& lang) {
    return Resolver(termbase, system, lang).resolve(form);
}

}  // namespace ontoterm

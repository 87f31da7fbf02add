#include "ontoterm/error.h"

namespace ontoterm {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::duplicate_id: return "duplicate-id";
        case ErrorCode::empty_labels: return "empty-labels";
        case ErrorCode::unknown_character: return "unknown-character";
        case ErrorCode::unknown_concept: return "unknown-concept";
        case ErrorCode::duplicate_intent: return "unique-intent";
        case ErrorCode::empty_differentia: return "empty-differentia";
        case ErrorCode::overlapping_differentia: return "overlapping-differentia";
        case ErrorCode::disjunction_unsupported: return "disjunction-unsupported";
        case ErrorCode::missing_modifier_form: return "missing-modifier-form";
        case ErrorCode::missing_root_denomination: return "missing-root-denomination";
        case ErrorCode::duplicate_denomination: return "duplicate-denomination";
        case ErrorCode::no_match: return "no-match";
        case ErrorCode::ambiguous_match: return "ambiguous-match";
        case ErrorCode::duplicate_document: return "duplicate-document";
        case ErrorCode::unknown_document: return "unknown-document";
        case ErrorCode::unsupported_language: return "unsupported-language";
        case ErrorCode::malformed_file: return "malformed-file";
        case ErrorCode::invariant_violation: return "invariant-violation";
        case ErrorCode::version_mismatch: return "version-mismatch";
        case ErrorCode::malformed_context: return "malformed-context";
        case ErrorCode::io_error: return "io-error";
    }
    return "unknown";
}

std::string to_string(const Violation& v) {
    std::string out = v.rule;
    if (!v.subjects.empty()) {
        out += " [";
        for (std::size_t i = 0; i < v.subjects.size(); ++i) {
            if (i) out += ", ";
            out += v.subjects[i];
        }
        out += "]";
    }
    if (!v.message.empty()) out += ": " + v.message;
    return out;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, std::vector<Violation> violations)
    : std::runtime_error(message), code_(code), violations_(std::move(violations)) {}

}  // namespace ontoterm

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontoterm {

enum class ErrorCode {
    invalid_argument,
    duplicate_id,
    empty_labels,
    unknown_character,
    unknown_concept,
    duplicate_intent,
    empty_differentia,
    overlapping_differentia,
    disjunction_unsupported,
    missing_modifier_form,
    missing_root_denomination,
    duplicate_denomination,
    no_match,
    ambiguous_match,
    duplicate_document,
    unknown_document,
    unsupported_language,
    malformed_file,
    invariant_violation,
    version_mismatch,
    malformed_context,
    io_error,
};

std::string_view to_string(ErrorCode code);

// One breach of a system invariant or lint rule. `subjects` names the ids
// involved (concept first, then characters or other concepts).
struct Violation {
    std::string rule;
    std::vector<std::string> subjects;
    std::string message;

    bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    Error(ErrorCode code, const std::string& message, std::vector<Violation> violations);

    ErrorCode code() const noexcept { return code_; }
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    ErrorCode code_;
    std::vector<Violation> violations_;
};

}  // namespace ontoterm

#pragma once

#include <filesystem>
#include <string>

#include "ontoterm/formal_context.h"
#include "ontoterm/workspace.h"

namespace ontoterm {

inline constexpr int kProjectFormatVersion = 1;

// Canonical project JSON: sorted keys, lists sorted by id (terms by
// language, case-folded form, concept), two-space indent, LF line endings, trailing
// newline. Postings are derived and not stored.
std::string serialize_project(const Snapshot& snapshot);

// Parses and validates a project document. All or nothing: malformed
// structure throws malformed_file, an unknown "version" throws
// version_mismatch, and check_system breaches throw invariant_violation
// carrying every violation. Documents are re-indexed on load.
Snapshot parse_project(std::string_view json_text);

// One document in ingestion form: {"id", "language", "title", "body"}.
// Title may be omitted. Throws malformed_file.
Document parse_document(std::string_view json_text);
std::string serialize_document(const Document& doc);

void save_project(const Snapshot& snapshot, const std::filesystem::path& path);
Snapshot load_project(const std::filesystem::path& path);

// Delimiter-separated incidence table: first row holds character ids after a
// corner cell, first column holds object ids, cells are 0 or 1. The
// delimiter is tab, ';' or ',' (detected from the header row).
FormalContext parse_context(std::string_view table, const ConceptSystem& system);
FormalContext import_context(const std::filesystem::path& path, const ConceptSystem& system);

}  // namespace ontoterm

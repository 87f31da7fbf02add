#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ontoterm::text {

// Simple lowercase folding of UTF-8 text. Covers ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic capitals; diacritics are kept.
std::string fold(std::string_view utf8);

// Case-folded word tokens. Whitespace, ASCII punctuation, Latin-1
// punctuation (guillemets, NBSP, ...) and general punctuation split words.
std::vector<std::string> tokenize(std::string_view utf8);

std::string join(std::span<const std::string> tokens, std::string_view sep = " ");

// Canonical comparison key of a term: tokenize(form) joined by one space.
std::string term_key(std::string_view form);

// True when `needle` occurs as a contiguous run inside `haystack`.
bool contains_run(std::span<const std::string> haystack, std::span<const std::string> needle);

}  // namespace ontoterm::text

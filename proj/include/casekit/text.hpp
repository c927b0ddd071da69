#pragma once

#include <string>
#include <vector>

namespace casekit {

/// Lowercases, maps '!' and '?' to '.', keeps '.' ',' ';' ':' as structure,
/// replaces all other punctuation with a space, and collapses whitespace.
/// Idempotent: normalize_text(normalize_text(x)) == normalize_text(x).
std::string normalize_text(const std::string& raw);

/// Splits normalized text on '.'; fragments are trimmed and empties dropped.
std::vector<std::string> split_sentences(const std::string& text);

/// Splits a normalized sentence on ',' ';' ':'; trimmed, empties dropped.
std::vector<std::string> split_clauses(const std::string& sentence);

/// Whitespace tokenization of a normalized clause.
std::vector<std::string> tokenize(const std::string& clause);

}  // namespace casekit

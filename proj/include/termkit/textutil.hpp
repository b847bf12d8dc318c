#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace termkit::text {

bool is_space(char c);
bool is_ascii_alpha(char c);
bool is_ascii_digit(char c);
bool is_ascii_alnum(char c);
bool is_ascii_upper(char c);

std::string to_lower(std::string_view s);

/// ASCII-case-insensitive equality.
bool iequals(std::string_view a, std::string_view b);

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Collapses runs of whitespace to a single space; a run containing a
/// newline counts as a paragraph break and becomes a single '\n' (which
/// makes the function idempotent). Leading and trailing whitespace is
/// dropped.
std::string normalize_whitespace(std::string_view s);

/// Canonical lookup key for terms: lowercased, inner whitespace collapsed
/// to single spaces, trimmed.
std::string normalize_key(std::string_view term);

/// Decodes the UTF-8 code point starting at byte offset `i` and advances
/// `i` past it. Invalid bytes decode as U+FFFD and advance by one.
char32_t utf8_next(std::string_view s, std::size_t& i);

/// Encodes a code point as UTF-8 (U+FFFD for invalid values).
std::string encode_utf8(char32_t cp);

/// Levenshtein distance; used for spelling-variant classification.
std::size_t edit_distance(std::string_view a, std::string_view b);

} // namespace termkit::text

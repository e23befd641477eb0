#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knowmap::text {

// Tolerant UTF-8 decoding: malformed sequences decode to U+FFFD one byte at a
// time, so no input can make downstream code misbehave.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(const std::u32string& cps);

// Strips a leading UTF-8 byte-order mark if present.
std::string_view strip_bom(std::string_view s);

// Compatibility normalization for bibliographic text: typographic punctuation
// folded to ASCII, ligatures expanded, fullwidth forms narrowed, no-break
// spaces turned into spaces, and combining accents composed onto their Latin
// base letter (e + U+0301 -> é). Idempotent.
std::string normalize_compat(std::string_view s);

// Collapses every run of whitespace (including tabs/newlines) to one space
// and trims the ends.
std::string collapse_ws(std::string_view s);

// ASCII + Latin-1/Latin-Extended-A lowercasing.
std::string to_lower(std::string_view s);

// Replaces accented Latin letters with their ASCII base (é -> e,
// ß -> ss). Unknown non-ASCII codepoints pass through.
std::string strip_diacritics(std::string_view s);

// The matching key used everywhere identity matters: compat-normalize,
// strip diacritics, lowercase, collapse whitespace.
std::string fold_key(std::string_view s);

bool is_ascii_alnum(char32_t cp);
bool is_space(char32_t cp);

} // namespace knowmap::text

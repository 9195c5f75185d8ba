#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hinglish {

inline constexpr char32_t kDevanagariFirst = 0x0900;
inline constexpr char32_t kDevanagariLast = 0x097F;

inline bool is_devanagari(char32_t c) {
    return c >= kDevanagariFirst && c <= kDevanagariLast;
}

inline bool is_ascii_letter(char32_t c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char32_t c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_space(char32_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes UTF-8 into codepoints. Malformed sequences decode to U+FFFD, one
// replacement per bad byte; *ok (when given) reports whether input was clean.
std::vector<char32_t> decode_utf8(std::string_view text, bool* ok = nullptr);

void append_utf8(std::string& out, char32_t c);
std::string encode_utf8(const std::vector<char32_t>& cps);

size_t codepoint_count(std::string_view text);

bool contains_devanagari(std::string_view text);
bool contains_ascii_letter(std::string_view text);

std::string to_lower_ascii(std::string_view text);

// Canonical (NFC) normalization covering the scripts this pipeline keeps:
// the Devanagari block gets full canonical decomposition, reordering and
// composition (U+0958..U+095F are composition exclusions and stay
// decomposed); ASCII is NFC-stable as-is; other codepoints pass through
// untouched. Agrees byte-for-byte with ICU/Python NFC on ASCII+Devanagari
// text, which is all that survives cleaning and all that loaders accept.
std::string nfc(std::string_view text);

std::vector<std::string> split_whitespace(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace hinglish

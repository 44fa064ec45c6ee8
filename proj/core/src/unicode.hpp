#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qid::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t length;  // bytes consumed, >= 1
  bool valid;
};

// Decodes the code point starting at byte `pos`; malformed input yields
// U+FFFD and consumes the offending bytes so scanning always advances.
Decoded decode(std::string_view s, std::size_t pos) noexcept;

bool is_valid_utf8(std::string_view s) noexcept;

void append_utf8(std::string& out, char32_t cp);

// Pictographic code points that start an emoji cluster.
bool is_emoji_base(char32_t cp) noexcept;

// Code points that attach to a preceding emoji: variation selectors,
// skin-tone modifiers, the keycap combiner and tag characters.
bool is_emoji_modifier(char32_t cp) noexcept;

bool is_regional_indicator(char32_t cp) noexcept;

inline constexpr char32_t kZeroWidthJoiner = 0x200D;

// Letters, combining marks and digits.
bool is_word_char(char32_t cp) noexcept;

// White space and invisible format characters (bidi marks, ZWNJ, BOM).
bool is_separator(char32_t cp) noexcept;

// Removes U+FE0E / U+FE0F so text and emoji presentation forms compare equal.
std::string strip_variation_selectors(std::string_view s);

}  // namespace qid::unicode

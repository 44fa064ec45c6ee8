#include "unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace qid::unicode {

Decoded decode(std::string_view s, std::size_t pos) noexcept {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
  const auto length = static_cast<std::int32_t>(s.size());
  auto i = static_cast<std::int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  const auto consumed = static_cast<std::size_t>(i) - pos;
  if (c < 0) {
    return {kReplacement, consumed, false};
  }
  return {static_cast<char32_t>(c), consumed, true};
}

bool is_valid_utf8(std::string_view s) noexcept {
  for (std::size_t pos = 0; pos < s.size();) {
    const Decoded d = decode(s, pos);
    if (!d.valid) {
      return false;
    }
    pos += d.length;
  }
  return true;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_emoji_base(char32_t cp) noexcept {
  if (cp >= 0x1F3FB && cp <= 0x1F3FF) {
    return false;  // skin tones only modify
  }
  return (cp >= 0x1F000 && cp <= 0x1FAFF)  // pictographs, emoticons, transport, flags
         || (cp >= 0x2600 && cp <= 0x27BF)  // misc symbols, dingbats
         || (cp >= 0x2300 && cp <= 0x23FF)  // misc technical (watch, hourglass)
         || (cp >= 0x2B00 && cp <= 0x2BFF)  // arrows and stars
         || cp == 0x3030 || cp == 0x303D || cp == 0x3297 || cp == 0x3299;
}

bool is_emoji_modifier(char32_t cp) noexcept {
  return cp == 0xFE0F || cp == 0xFE0E || cp == 0x20E3 || (cp >= 0x1F3FB && cp <= 0x1F3FF) ||
         (cp >= 0xE0020 && cp <= 0xE007F);
}

bool is_regional_indicator(char32_t cp) noexcept { return cp >= 0x1F1E6 && cp <= 0x1F1FF; }

bool is_word_char(char32_t cp) noexcept {
  const auto c = static_cast<UChar32>(cp);
  if (u_hasBinaryProperty(c, UCHAR_ALPHABETIC) || u_isdigit(c)) {
    return true;
  }
  return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

bool is_separator(char32_t cp) noexcept {
  const auto c = static_cast<UChar32>(cp);
  if (u_isUWhiteSpace(c)) {
    return true;
  }
  return u_charType(c) == U_FORMAT_CHAR;
}

std::string strip_variation_selectors(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const Decoded d = decode(s, pos);
    if (d.cp != 0xFE0E && d.cp != 0xFE0F) {
      out.append(s.substr(pos, d.length));
    }
    pos += d.length;
  }
  return out;
}

}  // namespace qid::unicode

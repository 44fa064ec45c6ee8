#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qid {

class SentimentLexicon;

enum class TokenKind { Word, Punct, QuestionMark, Emoji, Emoticon, Url, Mention, Hashtag };

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
  std::string surface;   // normalized form, never empty
  std::string original;  // the exact bytes taken from the input
  TokenKind kind = TokenKind::Word;
  std::size_t index = 0;   // position in the stream
  std::size_t offset = 0;  // byte offset of `original` in the input

  bool operator==(const Token&) const = default;
};

struct TokenStream {
  std::vector<Token> tokens;
  std::vector<std::size_t> content_indices;  // indices of Word tokens

  bool empty() const noexcept { return tokens.empty(); }
  std::size_t size() const noexcept { return tokens.size(); }
  const Token& operator[](std::size_t i) const { return tokens[i]; }
};

/// Arabic IR normalization: NFC composition, removal of the harakat
/// (U+064B..U+0652) and tatweel (U+0640), folding of alef variants
/// (U+0622, U+0623, U+0625) to bare alef and alef maqsura to yeh.
/// Everything else, including Latin text and emoji, is left untouched.
/// The result is a fixed point: normalize_text(normalize_text(x)) ==
/// normalize_text(x). Invalid UTF-8 sequences become U+FFFD.
std::string normalize_text(std::string_view raw);

/// Splits social-media text into tagged tokens.
///
/// Segmentation rules, applied at every token start:
///   - whitespace and invisible format characters separate tokens;
///   - `scheme://...` up to the next whitespace is one Url token;
///   - the longest lexicon emoticon starting here is one Emoticon token;
///   - an emoji codepoint plus its modifiers / ZWJ continuation is one Emoji;
///   - '@' or '#' followed by word characters is a Mention / Hashtag;
///   - a maximal run of letters, marks and digits is a Word;
///   - '?' and U+061F are QuestionMark tokens, any other character is a
///     single-character Punct token.
///
/// Each token's surface is the normalized form of its original bytes, so the
/// input may be raw or already normalized; both give the same surfaces.
/// Word runs that normalize to nothing (bare diacritics, tatweel) are dropped.
TokenStream tokenize(std::string_view text, const SentimentLexicon& lexicon);

/// Number of Unicode scalar values in a UTF-8 string.
std::size_t codepoint_count(std::string_view utf8);

}  // namespace qid

#include "qid/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <cassert>

#include "qid/error.hpp"
#include "qid/lexicon.hpp"
#include "unicode.hpp"

namespace qid {

namespace {

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kAlefMadda = 0x0622;
constexpr char32_t kAlefHamzaAbove = 0x0623;
constexpr char32_t kAlefHamzaBelow = 0x0625;
constexpr char32_t kAlefMaqsura = 0x0649;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kArabicQuestionMark = 0x061F;

bool is_harakah(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }

bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

std::string nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::EncodingError, "ICU NFC normalizer unavailable");
  }
  const icu::UnicodeString in =
      icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<std::int32_t>(s.size())));
  icu::UnicodeString out;
  normalizer->normalize(in, out, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::EncodingError, "NFC normalization failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::string fold_arabic(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const auto d = unicode::decode(s, pos);
    pos += d.length;
    char32_t cp = d.cp;
    if (is_harakah(cp) || cp == kTatweel) {
      continue;
    }
    if (cp == kAlefMadda || cp == kAlefHamzaAbove || cp == kAlefHamzaBelow) {
      cp = kAlef;
    } else if (cp == kAlefMaqsura) {
      cp = kYeh;
    }
    unicode::append_utf8(out, cp);
  }
  return out;
}

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Punct: return "Punct";
    case TokenKind::QuestionMark: return "QuestionMark";
    case TokenKind::Emoji: return "Emoji";
    case TokenKind::Emoticon: return "Emoticon";
    case TokenKind::Url: return "Url";
    case TokenKind::Mention: return "Mention";
    case TokenKind::Hashtag: return "Hashtag";
  }
  return "?";
}

std::string normalize_text(std::string_view raw) {
  if (is_ascii(raw)) {
    return std::string(raw);
  }
  // Removing a mark can expose a new canonical composition (alef + hamza
  // above behind a fatha), so iterate to a fixed point. Every round that
  // changes the string strictly shortens it.
  std::string current = fold_arabic(nfc(raw));
  for (;;) {
    std::string next = fold_arabic(nfc(current));
    if (next == current) {
      return current;
    }
    current = std::move(next);
  }
}

std::size_t codepoint_count(std::string_view utf8) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < utf8.size(); ++n) {
    pos += unicode::decode(utf8, pos).length;
  }
  return n;
}

namespace {

class Scanner {
 public:
  Scanner(std::string_view text, const SentimentLexicon& lexicon) : text_(text), lexicon_(lexicon) {}

  TokenStream run() {
    while (pos_ < text_.size()) {
      const auto d = unicode::decode(text_, pos_);
      if (unicode::is_separator(d.cp)) {
        pos_ += d.length;
        continue;
      }
      scan_token(d);
    }
    return std::move(stream_);
  }

 private:
  void scan_token(const unicode::Decoded& first) {
    const std::size_t start = pos_;
    if (std::size_t end = url_end(); end != 0) {
      emit(start, end, TokenKind::Url);
    } else if (std::size_t end = emoticon_end(); end != 0) {
      emit(start, end, TokenKind::Emoticon);
    } else if (unicode::is_emoji_base(first.cp)) {
      emit(start, emoji_end(), TokenKind::Emoji);
    } else if ((first.cp == '@' || first.cp == '#') && tag_end() != 0) {
      emit(start, tag_end(), first.cp == '@' ? TokenKind::Mention : TokenKind::Hashtag);
    } else if (unicode::is_word_char(first.cp)) {
      std::size_t end = start;
      while (end < text_.size()) {
        const auto d = unicode::decode(text_, end);
        if (!unicode::is_word_char(d.cp) || unicode::is_emoji_base(d.cp)) {
          break;
        }
        end += d.length;
      }
      emit(start, end, TokenKind::Word);
    } else if (first.cp == '?' || first.cp == kArabicQuestionMark) {
      emit(start, start + first.length, TokenKind::QuestionMark);
    } else {
      emit(start, start + first.length, TokenKind::Punct);
    }
  }

  // Returns the end offset of a `scheme://...` run starting at pos_, or 0.
  std::size_t url_end() const {
    std::size_t i = pos_;
    auto is_alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    if (i >= text_.size() || !is_alpha(text_[i])) {
      return 0;
    }
    while (i < text_.size() &&
           (is_alpha(text_[i]) || (text_[i] >= '0' && text_[i] <= '9') || text_[i] == '+' ||
            text_[i] == '-' || text_[i] == '.')) {
      ++i;
    }
    if (text_.substr(i, 3) != "://" || i + 3 >= text_.size()) {
      return 0;
    }
    i += 3;
    while (i < text_.size()) {
      const auto d = unicode::decode(text_, i);
      if (unicode::is_separator(d.cp)) {
        break;
      }
      i += d.length;
    }
    return i;
  }

  std::size_t emoticon_end() const {
    const std::string_view rest = text_.substr(pos_);
    for (const std::string& emoticon : lexicon_.emoticons()) {  // longest first
      if (!rest.starts_with(emoticon)) {
        continue;
      }
      const std::size_t end = pos_ + emoticon.size();
      // ":D" inside ":Dear" is not an emoticon
      if (end < text_.size() && unicode::is_word_char(last_codepoint(emoticon)) &&
          unicode::is_word_char(unicode::decode(text_, end).cp)) {
        continue;
      }
      return end;
    }
    return 0;
  }

  std::size_t emoji_end() const {
    std::size_t i = pos_ + unicode::decode(text_, pos_).length;
    const bool flag = unicode::is_regional_indicator(unicode::decode(text_, pos_).cp);
    if (flag && i < text_.size() && unicode::is_regional_indicator(unicode::decode(text_, i).cp)) {
      i += unicode::decode(text_, i).length;
    }
    while (i < text_.size()) {
      const auto d = unicode::decode(text_, i);
      if (unicode::is_emoji_modifier(d.cp)) {
        i += d.length;
      } else if (d.cp == unicode::kZeroWidthJoiner && i + d.length < text_.size() &&
                 unicode::is_emoji_base(unicode::decode(text_, i + d.length).cp)) {
        i += d.length;
        i += unicode::decode(text_, i).length;
      } else {
        break;
      }
    }
    return i;
  }

  // '@' / '#' followed by at least one word character or underscore.
  std::size_t tag_end() const {
    std::size_t i = pos_ + 1;
    while (i < text_.size()) {
      const auto d = unicode::decode(text_, i);
      if (d.cp != '_' && (!unicode::is_word_char(d.cp) || unicode::is_emoji_base(d.cp))) {
        break;
      }
      i += d.length;
    }
    return i > pos_ + 1 ? i : 0;
  }

  static char32_t last_codepoint(std::string_view s) {
    std::size_t pos = 0;
    char32_t last = 0;
    while (pos < s.size()) {
      const auto d = unicode::decode(s, pos);
      last = d.cp;
      pos += d.length;
    }
    return last;
  }

  void emit(std::size_t start, std::size_t end, TokenKind kind) {
    assert(end > start);
    pos_ = end;
    Token token;
    token.original = std::string(text_.substr(start, end - start));
    token.surface = normalize_text(token.original);
    if (token.surface.empty()) {
      return;
    }
    if (kind == TokenKind::Punct && (token.surface == "?" || token.surface == "\xD8\x9F")) {
      kind = TokenKind::QuestionMark;
    }
    token.kind = kind;
    token.offset = start;
    token.index = stream_.tokens.size();
    if (kind == TokenKind::Word) {
      stream_.content_indices.push_back(token.index);
    }
    stream_.tokens.push_back(std::move(token));
  }

  std::string_view text_;
  const SentimentLexicon& lexicon_;
  std::size_t pos_ = 0;
  TokenStream stream_;
};

}  // namespace

TokenStream tokenize(std::string_view text, const SentimentLexicon& lexicon) {
  return Scanner(text, lexicon).run();
}

}  // namespace qid

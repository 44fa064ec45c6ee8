#include "qid/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qid/error.hpp"
#include "unicode.hpp"

namespace qid {

std::string_view to_string(Polarity polarity) noexcept {
  return polarity == Polarity::Positive ? "positive" : "negative";
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) {
    words.push_back(std::move(w));
  }
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) {
      out += ' ';
    }
    out += w;
  }
  return out;
}

std::string clean_entry(std::string_view line, std::string_view category) {
  if (!unicode::is_valid_utf8(line)) {
    throw Error(ErrorCode::EncodingError, "invalid UTF-8 in lexicon category " + std::string(category));
  }
  return normalize_text(trim(line));
}

bool is_emoticon(std::string_view entry) {
  return !unicode::is_emoji_base(unicode::decode(entry, 0).cp);
}

}  // namespace

SentimentLexicon SentimentLexicon::from_entries(const LexiconEntries& entries) {
  SentimentLexicon lex;
  // phrase (space-joined) -> polarity, for both single terms and compounds
  std::map<std::string, Polarity> phrases;

  auto add_phrase = [&](std::string_view line, Polarity polarity, std::string_view category) {
    const std::string entry = clean_entry(line, category);
    const std::vector<std::string> words = split_words(entry);
    if (words.empty()) {
      return;
    }
    const std::string key = join(words);
    const auto [it, inserted] = phrases.emplace(key, polarity);
    if (!inserted && it->second != polarity) {
      throw Error(ErrorCode::PolarityConflict, "'" + key + "' is listed as both positive and negative");
    }
  };

  for (const auto& line : entries.positive_terms) add_phrase(line, Polarity::Positive, "positive_terms");
  for (const auto& line : entries.negative_terms) add_phrase(line, Polarity::Negative, "negative_terms");
  for (const auto& line : entries.positive_compounds) add_phrase(line, Polarity::Positive, "positive_compounds");
  for (const auto& line : entries.negative_compounds) add_phrase(line, Polarity::Negative, "negative_compounds");

  for (const auto& [key, polarity] : phrases) {
    std::vector<std::string> words = split_words(key);
    if (words.size() == 1) {
      (polarity == Polarity::Positive ? lex.pos_terms_ : lex.neg_terms_).insert(words.front());
    } else {
      lex.compounds_.push_back(CompoundTerm{std::move(words), polarity});
    }
  }
  for (const auto& compound : lex.compounds_) {
    lex.compounds_by_head_[compound.words.front()].push_back(compound);
  }
  for (auto& [head, list] : lex.compounds_by_head_) {
    std::stable_sort(list.begin(), list.end(), [](const CompoundTerm& a, const CompoundTerm& b) {
      return a.words.size() > b.words.size();
    });
  }

  auto add_emoji = [&](std::string_view line, Polarity polarity, std::string_view category) {
    const std::string entry = clean_entry(line, category);
    if (entry.empty()) {
      return;
    }
    const std::string key = unicode::strip_variation_selectors(entry);
    const auto [it, inserted] = lex.emoji_index_.emplace(key, polarity);
    if (!inserted && it->second != polarity) {
      throw Error(ErrorCode::PolarityConflict, "'" + entry + "' is listed as both positive and negative emoji");
    }
    (polarity == Polarity::Positive ? lex.pos_emojis_ : lex.neg_emojis_).insert(entry);
  };
  for (const auto& line : entries.positive_emojis) add_emoji(line, Polarity::Positive, "positive_emojis");
  for (const auto& line : entries.negative_emojis) add_emoji(line, Polarity::Negative, "negative_emojis");

  for (const auto& [key, polarity] : lex.emoji_index_) {
    if (is_emoticon(key)) {
      lex.emoticons_.push_back(key);
    }
  }
  std::sort(lex.emoticons_.begin(), lex.emoticons_.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return lex;
}

std::optional<Polarity> SentimentLexicon::term_polarity(const std::string& word) const {
  if (pos_terms_.contains(word)) {
    return Polarity::Positive;
  }
  if (neg_terms_.contains(word)) {
    return Polarity::Negative;
  }
  return std::nullopt;
}

std::optional<Polarity> SentimentLexicon::emoji_polarity(std::string_view surface) const {
  const auto it = emoji_index_.find(unicode::strip_variation_selectors(surface));
  if (it == emoji_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::span<const CompoundTerm> SentimentLexicon::compounds_starting_with(const std::string& word) const {
  const auto it = compounds_by_head_.find(word);
  if (it == compounds_by_head_.end()) {
    return {};
  }
  return it->second;
}

std::size_t SentimentLexicon::compound_count(Polarity polarity) const noexcept {
  return static_cast<std::size_t>(std::count_if(compounds_.begin(), compounds_.end(),
                                                [&](const CompoundTerm& c) { return c.polarity == polarity; }));
}

bool SentimentLexicon::empty() const noexcept {
  return pos_terms_.empty() && neg_terms_.empty() && compounds_.empty() && emoji_index_.empty();
}

namespace {

std::vector<std::string> read_category(const std::filesystem::path& file) {
  std::vector<std::string> lines;
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) {
    return lines;
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot read " + file.string());
  }
  bool first = true;
  for (std::string line; std::getline(in, line);) {
    if (first && line.starts_with("\xEF\xBB\xBF")) {
      line.erase(0, 3);
    }
    first = false;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') {
      continue;
    }
    lines.emplace_back(t);
  }
  if (in.bad()) {
    throw Error(ErrorCode::IoError, "error while reading " + file.string());
  }
  return lines;
}

}  // namespace

SentimentLexicon load_lexicon(const std::filesystem::path& root) {
  std::error_code ec;
  if (!std::filesystem::is_directory(root, ec)) {
    throw Error(ErrorCode::IoError, "lexicon directory not found: " + root.string());
  }
  LexiconEntries entries;
  entries.positive_terms = read_category(root / "positive_terms.txt");
  entries.negative_terms = read_category(root / "negative_terms.txt");
  entries.positive_compounds = read_category(root / "positive_compounds.txt");
  entries.negative_compounds = read_category(root / "negative_compounds.txt");
  entries.positive_emojis = read_category(root / "positive_emojis.txt");
  entries.negative_emojis = read_category(root / "negative_emojis.txt");
  return SentimentLexicon::from_entries(entries);
}

std::vector<TermMatch> match_terms(const TokenStream& stream, const SentimentLexicon& lexicon) {
  std::vector<TermMatch> matches;
  const auto& tokens = stream.tokens;
  auto is_word = [&](std::size_t i) { return i < tokens.size() && tokens[i].kind == TokenKind::Word; };

  for (std::size_t i = 0; i < tokens.size();) {
    if (!is_word(i)) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const CompoundTerm& compound : lexicon.compounds_starting_with(tokens[i].surface)) {
      const std::size_t n = compound.words.size();
      bool ok = true;
      for (std::size_t k = 0; k < n && ok; ++k) {
        ok = is_word(i + k) && tokens[i + k].surface == compound.words[k];
      }
      if (ok) {
        matches.push_back(TermMatch{compound.polarity, i, i + n - 1, true});
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) {
      continue;
    }
    if (const auto polarity = lexicon.term_polarity(tokens[i].surface)) {
      matches.push_back(TermMatch{*polarity, i, i, false});
    }
    ++i;
  }
  return matches;
}

}  // namespace qid

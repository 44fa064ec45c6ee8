#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qid/text.hpp"

namespace qid {

enum class Polarity { Positive, Negative };

std::string_view to_string(Polarity polarity) noexcept;

struct CompoundTerm {
  std::vector<std::string> words;  // at least two
  Polarity polarity = Polarity::Positive;

  bool operator==(const CompoundTerm&) const = default;
};

// Unprocessed lexicon lines, one vector per category file.
struct LexiconEntries {
  std::vector<std::string> positive_terms;
  std::vector<std::string> negative_terms;
  std::vector<std::string> positive_compounds;
  std::vector<std::string> negative_compounds;
  std::vector<std::string> positive_emojis;
  std::vector<std::string> negative_emojis;
};

/// Positive and negative single terms, compound terms, emojis and
/// emoticons. Immutable once built; all entries are stored normalized.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  /// Trims, normalizes and deduplicates every entry. A term line holding
  /// several words becomes a compound and a compound line holding one word
  /// becomes a term. Throws Error{PolarityConflict} when an entry carries
  /// both polarities and Error{EncodingError} on invalid UTF-8.
  static SentimentLexicon from_entries(const LexiconEntries& entries);

  std::optional<Polarity> term_polarity(const std::string& word) const;
  std::optional<Polarity> emoji_polarity(std::string_view surface) const;

  /// Compounds whose first word is `word`, longest first.
  std::span<const CompoundTerm> compounds_starting_with(const std::string& word) const;

  /// Emoji-file entries that are ASCII art rather than emoji, longest first.
  const std::vector<std::string>& emoticons() const noexcept { return emoticons_; }

  const std::set<std::string>& positive_terms() const noexcept { return pos_terms_; }
  const std::set<std::string>& negative_terms() const noexcept { return neg_terms_; }
  const std::vector<CompoundTerm>& compounds() const noexcept { return compounds_; }
  const std::set<std::string>& positive_emojis() const noexcept { return pos_emojis_; }
  const std::set<std::string>& negative_emojis() const noexcept { return neg_emojis_; }

  std::size_t compound_count(Polarity polarity) const noexcept;
  bool empty() const noexcept;

 private:
  std::set<std::string> pos_terms_;
  std::set<std::string> neg_terms_;
  std::vector<CompoundTerm> compounds_;
  std::unordered_map<std::string, std::vector<CompoundTerm>> compounds_by_head_;
  std::set<std::string> pos_emojis_;
  std::set<std::string> neg_emojis_;
  // keyed with variation selectors stripped
  std::unordered_map<std::string, Polarity> emoji_index_;
  std::vector<std::string> emoticons_;
};

/// Reads the six category files below `root`:
///   positive_terms.txt      negative_terms.txt
///   positive_compounds.txt  negative_compounds.txt
///   positive_emojis.txt     negative_emojis.txt
/// A missing file is an empty category; '#' lines and blank lines are skipped.
/// Throws Error{IoError} if `root` is not a directory or a file is unreadable.
SentimentLexicon load_lexicon(const std::filesystem::path& root);

struct TermMatch {
  Polarity polarity = Polarity::Positive;
  std::size_t start = 0;  // token index of the first word
  std::size_t end = 0;    // token index of the last word, inclusive
  bool compound = false;

  bool operator==(const TermMatch&) const = default;
};

/// Greedy leftmost, longest-first matching over Word tokens. At each
/// unconsumed Word token the longest compound made of consecutive Word tokens
/// wins, then a single term; matched tokens are consumed. Results are sorted
/// by start and never overlap.
std::vector<TermMatch> match_terms(const TokenStream& stream, const SentimentLexicon& lexicon);

}  // namespace qid

#include "qid/features.hpp"

#include <algorithm>

#include "hash.hpp"
#include "qid/error.hpp"
#include "unicode.hpp"

namespace qid {

std::string_view to_string(FeatureGroup group) noexcept {
  return group == FeatureGroup::Baseline ? "baseline" : "emotional";
}

std::string_view to_string(FeatureMode mode) noexcept {
  return mode == FeatureMode::BaselineOnly ? "baseline" : "all";
}

namespace {

const std::vector<std::string> kBaselineNames = {
    "numTokens",       "numChars",       "hasQuestionMark", "numQuestionMarks",
    "hasInterrogative", "interrogativePosition", "numURLs",  "numMentions",
    "numHashtags",     "numEmojiTotal",  "numElongations",  "numPunctBursts",
};

const std::vector<std::string> kEmotionalNames = {
    "numOfPos",      "numOfNeg",      "startWithPos", "startWithNeg", "endWithPos",
    "endWithNeg",    "posPercentage", "negPercentage", "numOfPosEmo", "numOfNegEmo",
};

std::string compute_fingerprint(std::string_view version, const std::vector<std::string>& names) {
  std::string buf(version);
  for (const auto& n : names) {
    buf += '\n';
    buf += n;
  }
  return detail::hex64(detail::fnv1a64(buf));
}

}  // namespace

FeatureSchema::FeatureSchema(std::string version, std::vector<std::string> names, std::vector<FeatureGroup> groups)
    : version_(std::move(version)), names_(std::move(names)), groups_(std::move(groups)) {
  if (groups_.size() != names_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "schema names and groups differ in length");
  }
  fingerprint_ = compute_fingerprint(version_, names_);
}

FeatureSchema FeatureSchema::restored(std::vector<std::string> names, std::string fingerprint) {
  FeatureSchema s;
  s.version_ = "restored";
  s.groups_.assign(names.size(), FeatureGroup::Baseline);
  s.names_ = std::move(names);
  s.fingerprint_ = std::move(fingerprint);
  return s;
}

std::shared_ptr<const FeatureSchema> FeatureSchema::custom(std::vector<std::string> names) {
  std::vector<FeatureGroup> groups(names.size(), FeatureGroup::Baseline);
  return std::make_shared<const FeatureSchema>("custom", std::move(names), std::move(groups));
}

std::shared_ptr<const FeatureSchema> FeatureSchema::baseline() {
  static const auto schema = std::make_shared<const FeatureSchema>(
      std::string(kFeatureSchemaVersion), kBaselineNames,
      std::vector<FeatureGroup>(kBaselineNames.size(), FeatureGroup::Baseline));
  return schema;
}

std::shared_ptr<const FeatureSchema> FeatureSchema::full() {
  static const auto schema = [] {
    std::vector<std::string> names = kBaselineNames;
    names.insert(names.end(), kEmotionalNames.begin(), kEmotionalNames.end());
    std::vector<FeatureGroup> groups(kBaselineNames.size(), FeatureGroup::Baseline);
    groups.resize(names.size(), FeatureGroup::Emotional);
    return std::make_shared<const FeatureSchema>(std::string(kFeatureSchemaVersion), std::move(names),
                                                 std::move(groups));
  }();
  return schema;
}

std::shared_ptr<const FeatureSchema> FeatureSchema::for_mode(FeatureMode mode) {
  return mode == FeatureMode::BaselineOnly ? baseline() : full();
}

std::size_t FeatureSchema::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorCode::DimensionMismatch, "no feature named " + std::string(name));
  }
  return static_cast<std::size_t>(it - names_.begin());
}

FeatureVector::FeatureVector(std::shared_ptr<const FeatureSchema> schema, std::vector<double> values)
    : schema_(std::move(schema)), values_(std::move(values)) {
  if (!schema_ || schema_->size() != values_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "feature vector length does not match its schema");
  }
}

std::array<double, BaselineFeatures::kSize> BaselineFeatures::to_array() const {
  return {num_tokens,         num_chars, has_question_mark, num_question_marks, has_interrogative,
          interrogative_position, num_urls, num_mentions,     num_hashtags,       num_emoji_total,
          num_elongations,    num_punct_bursts};
}

std::array<double, EmotionalFeatures::kSize> EmotionalFeatures::to_array() const {
  return {num_pos,        num_neg,        start_with_pos, start_with_neg, end_with_pos,
          end_with_neg,   pos_percentage, neg_percentage, num_pos_emo,    num_neg_emo};
}

const std::vector<std::string>& interrogative_words() {
  static const std::vector<std::string> words = [] {
    const std::vector<std::string> raw = {"ما", "ماذا", "لماذا", "كيف", "متى", "أين", "من", "هل", "كم", "أي"};
    std::vector<std::string> out;
    for (const auto& w : raw) {
      out.push_back(normalize_text(w));
    }
    return out;
  }();
  return words;
}

namespace {

bool is_burst_char(const Token& t) { return t.surface == "!" || t.kind == TokenKind::QuestionMark; }

std::size_t count_elongations(std::string_view word) {
  std::size_t runs = 0;
  char32_t prev = 0;
  std::size_t run = 0;
  for (std::size_t pos = 0; pos < word.size();) {
    const auto d = unicode::decode(word, pos);
    pos += d.length;
    run = (d.cp == prev) ? run + 1 : 1;
    prev = d.cp;
    if (run == 3) {
      ++runs;
    }
  }
  return runs;
}

}  // namespace

BaselineFeatures extract_baseline(const TokenStream& stream) {
  BaselineFeatures f;
  const auto& tokens = stream.tokens;
  f.num_tokens = static_cast<double>(tokens.size());
  const auto& interrogatives = interrogative_words();
  bool seen_interrogative = false;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    f.num_chars += static_cast<double>(codepoint_count(t.surface));
    switch (t.kind) {
      case TokenKind::QuestionMark: f.num_question_marks += 1; break;
      case TokenKind::Url: f.num_urls += 1; break;
      case TokenKind::Mention: f.num_mentions += 1; break;
      case TokenKind::Hashtag: f.num_hashtags += 1; break;
      case TokenKind::Emoji: f.num_emoji_total += 1; break;
      case TokenKind::Word:
        f.num_elongations += static_cast<double>(count_elongations(t.surface));
        if (!seen_interrogative &&
            std::find(interrogatives.begin(), interrogatives.end(), t.surface) != interrogatives.end()) {
          seen_interrogative = true;
          f.has_interrogative = 1;
          f.interrogative_position = static_cast<double>(i) / static_cast<double>(tokens.size());
        }
        break;
      default: break;
    }
    // A burst is a maximal run of adjacent '!'/'?' tokens with no gap between them.
    if (is_burst_char(t) && i + 1 < tokens.size()) {
      const bool starts_run = i == 0 || !is_burst_char(tokens[i - 1]) ||
                              tokens[i - 1].offset + tokens[i - 1].original.size() != t.offset;
      const Token& next = tokens[i + 1];
      if (starts_run && is_burst_char(next) && t.offset + t.original.size() == next.offset) {
        f.num_punct_bursts += 1;
      }
    }
  }
  f.has_question_mark = f.num_question_marks > 0 ? 1 : 0;
  return f;
}

EmotionalFeatures extract_emotional(const TokenStream& stream, const SentimentLexicon& lexicon) {
  EmotionalFeatures f;
  const std::vector<TermMatch> matches = match_terms(stream, lexicon);
  for (const TermMatch& m : matches) {
    (m.polarity == Polarity::Positive ? f.num_pos : f.num_neg) += 1;
  }

  const auto& content = stream.content_indices;
  if (!content.empty()) {
    const std::size_t first = content.front();
    const std::size_t last = content.back();
    for (const TermMatch& m : matches) {
      const bool pos = m.polarity == Polarity::Positive;
      if (m.start == first) {
        (pos ? f.start_with_pos : f.start_with_neg) = 1;
      }
      if (m.end == last) {
        (pos ? f.end_with_pos : f.end_with_neg) = 1;
      }
    }
    const auto n = static_cast<double>(content.size());
    f.pos_percentage = std::clamp(f.num_pos / n, 0.0, 1.0);
    f.neg_percentage = std::clamp(f.num_neg / n, 0.0, 1.0);
  }

  for (const Token& t : stream.tokens) {
    if (t.kind != TokenKind::Emoji && t.kind != TokenKind::Emoticon) {
      continue;
    }
    if (const auto polarity = lexicon.emoji_polarity(t.surface)) {
      (*polarity == Polarity::Positive ? f.num_pos_emo : f.num_neg_emo) += 1;
    }
  }
  return f;
}

FeatureVector extract_features(std::string_view raw, const SentimentLexicon& lexicon, FeatureMode mode) {
  const TokenStream stream = tokenize(normalize_text(raw), lexicon);
  const auto baseline = extract_baseline(stream).to_array();
  std::vector<double> values(baseline.begin(), baseline.end());
  if (mode == FeatureMode::All) {
    const auto emotional = extract_emotional(stream, lexicon).to_array();
    values.insert(values.end(), emotional.begin(), emotional.end());
  }
  return FeatureVector(FeatureSchema::for_mode(mode), std::move(values));
}

}  // namespace qid

#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qid/lexicon.hpp"
#include "qid/text.hpp"

namespace qid {

enum class FeatureGroup { Baseline, Emotional };
enum class FeatureMode { BaselineOnly, All };

std::string_view to_string(FeatureGroup group) noexcept;
std::string_view to_string(FeatureMode mode) noexcept;

/// Ordered list of feature names. The fingerprint hashes the version tag and
/// the names, and binds a trained model to the exact column layout.
class FeatureSchema {
 public:
  FeatureSchema(std::string version, std::vector<std::string> names, std::vector<FeatureGroup> groups);

  /// Rebuilds a schema read back from a model file, keeping its fingerprint.
  static FeatureSchema restored(std::vector<std::string> names, std::string fingerprint);

  /// Ad-hoc schema over arbitrary columns (all tagged Baseline).
  static std::shared_ptr<const FeatureSchema> custom(std::vector<std::string> names);

  static std::shared_ptr<const FeatureSchema> baseline();  // 12 columns
  static std::shared_ptr<const FeatureSchema> full();      // 22 columns
  static std::shared_ptr<const FeatureSchema> for_mode(FeatureMode mode);

  const std::string& version() const noexcept { return version_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<FeatureGroup>& groups() const noexcept { return groups_; }
  const std::string& fingerprint() const noexcept { return fingerprint_; }
  std::size_t size() const noexcept { return names_.size(); }
  std::size_t index_of(std::string_view name) const;  // throws DimensionMismatch if absent

 private:
  FeatureSchema() = default;

  std::string version_;
  std::vector<std::string> names_;
  std::vector<FeatureGroup> groups_;
  std::string fingerprint_;
};

inline constexpr std::string_view kFeatureSchemaVersion = "qid-features/1";

class FeatureVector {
 public:
  FeatureVector(std::shared_ptr<const FeatureSchema> schema, std::vector<double> values);

  const FeatureSchema& schema() const noexcept { return *schema_; }
  const std::shared_ptr<const FeatureSchema>& schema_ptr() const noexcept { return schema_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double at(std::string_view name) const { return values_[schema_->index_of(name)]; }

  bool operator==(const FeatureVector& other) const {
    return schema_->fingerprint() == other.schema_->fingerprint() && values_ == other.values_;
  }

 private:
  std::shared_ptr<const FeatureSchema> schema_;
  std::vector<double> values_;
};

// Lexical, structural, question-specific and tweet-specific signals.
struct BaselineFeatures {
  double num_tokens = 0;
  double num_chars = 0;  // code points over all token surfaces
  double has_question_mark = 0;
  double num_question_marks = 0;
  double has_interrogative = 0;
  double interrogative_position = 0;  // first interrogative index / num_tokens
  double num_urls = 0;
  double num_mentions = 0;
  double num_hashtags = 0;
  double num_emoji_total = 0;
  double num_elongations = 0;   // runs of one character, length >= 3, inside words
  double num_punct_bursts = 0;  // adjacent runs of '!' / '?' of length >= 2

  static constexpr std::size_t kSize = 12;
  std::array<double, kSize> to_array() const;
  bool operator==(const BaselineFeatures&) const = default;
};

// Sentiment-lexicon features.
struct EmotionalFeatures {
  double num_pos = 0;
  double num_neg = 0;
  double start_with_pos = 0;
  double start_with_neg = 0;
  double end_with_pos = 0;
  double end_with_neg = 0;
  double pos_percentage = 0;
  double neg_percentage = 0;
  double num_pos_emo = 0;
  double num_neg_emo = 0;

  static constexpr std::size_t kSize = 10;
  std::array<double, kSize> to_array() const;
  bool operator==(const EmotionalFeatures&) const = default;
};

/// Interrogative particles (normalized), e.g. hal, kayfa, mata, ayna.
const std::vector<std::string>& interrogative_words();

BaselineFeatures extract_baseline(const TokenStream& stream);

/// Term counts are lexicon matches, so a compound counts once. Start / end
/// flags look at the first / last Word token; percentages divide by the
/// number of Word tokens and are 0 when there are none.
EmotionalFeatures extract_emotional(const TokenStream& stream, const SentimentLexicon& lexicon);

/// normalize -> tokenize -> match -> features. In BaselineOnly mode the
/// vector has the 12 baseline columns only.
FeatureVector extract_features(std::string_view raw, const SentimentLexicon& lexicon, FeatureMode mode);

}  // namespace qid

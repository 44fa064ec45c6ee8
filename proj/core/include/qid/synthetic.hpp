#pragma once

#include <cstddef>
#include <cstdint>

#include "qid/dataset.hpp"
#include "qid/lexicon.hpp"

namespace qid {

struct SyntheticOptions {
  double sentiment_rate_question = 0.8;  // P(sentiment term | label 1)
  double sentiment_rate_other = 0.2;     // P(sentiment term | label 0)
  double question_mark_rate = 0.5;       // same for both classes
  double interrogative_rate = 0.5;       // same for both classes
  double emoji_rate = 0.3;               // same for both classes
};

/// Balanced corpus of filler-word texts where only the presence of lexicon
/// sentiment terms separates the classes. Deterministic in (n, seed, lexicon).
/// Throws Error{BadParams} if n < 10 or any lexicon category is empty.
Dataset generate_synthetic(std::size_t n, std::uint64_t seed, const SentimentLexicon& lexicon,
                           const SyntheticOptions& options = {});

}  // namespace qid

#include "qid/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "qid/error.hpp"
#include "qid/features.hpp"
#include "random.hpp"

namespace qid {

namespace {

// Customer-service flavoured content words with no sentiment of their own.
const std::vector<std::string> kFiller = {
    "الخدمة", "الفاتورة", "الحساب", "البطاقة", "الفرع",   "الموظف",  "العميل",  "الطلب",
    "التطبيق", "الشبكة",  "الباقة",  "الرصيد",  "اليوم",   "امس",     "الشهر",   "الرقم",
    "الموقع",  "المنتج",  "التوصيل", "الطريقة", "الاشتراك", "البنك",   "الشركة",  "العرض",
    "السعر",   "الدفع",   "التحويل", "الخط",    "الانترنت", "المتجر",  "في",      "على",
    "الى",     "مع",      "هذا",     "هذه",     "بعد",     "قبل",     "عند",     "عن",
};

std::set<std::string> lexicon_words(const SentimentLexicon& lexicon) {
  std::set<std::string> words(lexicon.positive_terms().begin(), lexicon.positive_terms().end());
  words.insert(lexicon.negative_terms().begin(), lexicon.negative_terms().end());
  for (const auto& compound : lexicon.compounds()) {
    words.insert(compound.words.begin(), compound.words.end());
  }
  return words;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

Dataset generate_synthetic(std::size_t n, std::uint64_t seed, const SentimentLexicon& lexicon,
                           const SyntheticOptions& options) {
  if (n < 10) {
    throw Error(ErrorCode::BadParams, "synthetic corpus needs n >= 10, got " + std::to_string(n));
  }
  std::vector<std::string> pos_terms(lexicon.positive_terms().begin(), lexicon.positive_terms().end());
  std::vector<std::string> neg_terms(lexicon.negative_terms().begin(), lexicon.negative_terms().end());
  std::vector<std::string> pos_compounds;
  std::vector<std::string> neg_compounds;
  for (const auto& compound : lexicon.compounds()) {
    (compound.polarity == Polarity::Positive ? pos_compounds : neg_compounds).push_back(join_words(compound.words));
  }
  std::vector<std::string> emojis(lexicon.positive_emojis().begin(), lexicon.positive_emojis().end());
  emojis.insert(emojis.end(), lexicon.negative_emojis().begin(), lexicon.negative_emojis().end());
  if (pos_terms.empty() || neg_terms.empty() || pos_compounds.empty() || neg_compounds.empty() ||
      lexicon.positive_emojis().empty() || lexicon.negative_emojis().empty()) {
    throw Error(ErrorCode::BadParams, "synthetic corpus needs every lexicon category to be non-empty");
  }
  const std::array<const std::vector<std::string>*, 4> sentiment_pools = {&pos_terms, &neg_terms, &pos_compounds,
                                                                          &neg_compounds};

  const std::set<std::string> taken = lexicon_words(lexicon);
  std::vector<std::string> filler;
  std::copy_if(kFiller.begin(), kFiller.end(), std::back_inserter(filler),
               [&](const std::string& w) { return !taken.contains(w); });
  std::vector<std::string> openers;
  std::copy_if(interrogative_words().begin(), interrogative_words().end(), std::back_inserter(openers),
               [&](const std::string& w) { return !taken.contains(w); });
  if (filler.size() < 5) {
    throw Error(ErrorCode::BadParams, "lexicon covers the generator's filler vocabulary");
  }

  detail::Rng rng(seed);
  std::vector<Label> labels(n, 0);
  std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n / 2), 1);
  rng.shuffle(labels);

  Dataset ds;
  ds.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Label label = labels[i];
    std::vector<std::string> words;
    const std::size_t length = 3 + static_cast<std::size_t>(rng.below(6));
    for (std::size_t k = 0; k < length; ++k) {
      words.push_back(rng.pick(filler));
    }
    const double sentiment_rate = label == 1 ? options.sentiment_rate_question : options.sentiment_rate_other;
    if (rng.bernoulli(sentiment_rate)) {
      const auto& pool = *sentiment_pools[static_cast<std::size_t>(rng.below(sentiment_pools.size()))];
      const auto at = static_cast<std::ptrdiff_t>(rng.below(words.size() + 1));
      words.insert(words.begin() + at, rng.pick(pool));
    }
    if (!openers.empty() && rng.bernoulli(options.interrogative_rate)) {
      words.insert(words.begin(), rng.pick(openers));
    }
    if (rng.bernoulli(options.emoji_rate)) {
      words.push_back(rng.pick(emojis));
    }
    if (rng.bernoulli(options.question_mark_rate)) {
      words.push_back(rng.bernoulli(0.5) ? "؟" : "?");
    }

    char id[32];
    std::snprintf(id, sizeof id, "syn-%06zu", i + 1);
    ds.push_back(LabeledExample{id, join_words(words), label, "synthetic", "generator"});
  }
  return ds;
}

}  // namespace qid

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "qid/error.hpp"
#include "qid/features.hpp"
#include "qid/synthetic.hpp"

using namespace qid;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qid::Error thrown";
  return ErrorCode::BadParams;
}

bool has_sentiment_term(const std::string& text, const SentimentLexicon& lex) {
  return !match_terms(tokenize(normalize_text(text), lex), lex).empty();
}

}  // namespace

TEST(GenerateSynthetic, BalancedLabelsAndIds) {
  const Dataset ds = generate_synthetic(1000, 7, oracle::fixture_lexicon());
  ASSERT_EQ(ds.size(), 1000u);
  std::size_t ones = 0;
  for (const auto& e : ds) ones += e.label == 1 ? 1 : 0;
  EXPECT_EQ(ones, 500u);
  EXPECT_EQ(ds.front().id, "syn-000001");
  EXPECT_EQ(ds.back().id, "syn-001000");
  EXPECT_EQ(ds.front().sector, "synthetic");
  EXPECT_EQ(generate_synthetic(11, 1, oracle::fixture_lexicon()).size(), 11u);
}

TEST(GenerateSynthetic, SentimentRatesPerClass) {
  const auto& lex = oracle::fixture_lexicon();
  const Dataset ds = generate_synthetic(1000, 7, lex);
  double hits[2] = {0, 0}, totals[2] = {0, 0};
  double question_marks[2] = {0, 0};
  for (const auto& e : ds) {
    totals[e.label] += 1;
    hits[e.label] += has_sentiment_term(e.text, lex) ? 1 : 0;
    question_marks[e.label] += extract_baseline(tokenize(normalize_text(e.text), lex)).has_question_mark;
  }
  EXPECT_NEAR(hits[1] / totals[1], 0.8, 0.05);
  EXPECT_NEAR(hits[0] / totals[0], 0.2, 0.05);
  EXPECT_NEAR(question_marks[1] / totals[1], 0.5, 0.07);
  EXPECT_NEAR(question_marks[0] / totals[0], 0.5, 0.07);
}

TEST(GenerateSynthetic, ByteIdenticalPerSeed) {
  const auto& lex = oracle::fixture_lexicon();
  std::ostringstream a, b, c;
  write_jsonl(generate_synthetic(300, 5, lex), a);
  write_jsonl(generate_synthetic(300, 5, lex), b);
  write_jsonl(generate_synthetic(300, 6, lex), c);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str(), c.str());
}

TEST(GenerateSynthetic, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { generate_synthetic(9, 1, oracle::fixture_lexicon()); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { generate_synthetic(100, 1, SentimentLexicon{}); }), ErrorCode::BadParams);
  LexiconEntries partial;
  partial.positive_terms = {"ممتاز"};
  partial.negative_terms = {"سيء"};
  EXPECT_EQ(code_of([&] { generate_synthetic(100, 1, SentimentLexicon::from_entries(partial)); }),
            ErrorCode::BadParams);
}

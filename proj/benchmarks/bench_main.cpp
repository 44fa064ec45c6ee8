#include <benchmark/benchmark.h>

#include "qid/classifiers.hpp"
#include "qid/eval.hpp"
#include "qid/features.hpp"
#include "qid/synthetic.hpp"

using namespace qid;

namespace {

const SentimentLexicon& lexicon() {
  static const SentimentLexicon lex = load_lexicon(QID_FIXTURE_DIR "/lexicon");
  return lex;
}

const Dataset& corpus() {
  static const Dataset ds = generate_synthetic(1000, 7, lexicon());
  return ds;
}

struct Matrix {
  std::vector<FeatureVector> x;
  std::vector<Label> y;
};

const Matrix& features() {
  static const Matrix m = [] {
    Matrix out;
    for (const auto& ex : corpus()) {
      out.x.push_back(extract_features(ex.text, lexicon(), FeatureMode::All));
      out.y.push_back(ex.label);
    }
    return out;
  }();
  return m;
}

void BM_Tokenize(benchmark::State& state) {
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& ex : corpus()) {
      benchmark::DoNotOptimize(tokenize(normalize_text(ex.text), lexicon()));
      bytes += ex.text.size();
    }
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_Tokenize);

void BM_ExtractFeatures(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& ex : corpus()) benchmark::DoNotOptimize(extract_features(ex.text, lexicon(), FeatureMode::All));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_ExtractFeatures);

void BM_Fit(benchmark::State& state) {
  const auto kind = kAllClassifierKinds[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(to_string(kind)));
  for (auto _ : state) benchmark::DoNotOptimize(fit(features().x, features().y, Hyperparams::defaults(kind)));
}
BENCHMARK(BM_Fit)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Predict(benchmark::State& state) {
  const auto kind = kAllClassifierKinds[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(to_string(kind)));
  const TrainedModel model = fit(features().x, features().y, Hyperparams::defaults(kind));
  for (auto _ : state) {
    for (const auto& v : features().x) benchmark::DoNotOptimize(predict(model, v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(features().x.size()));
}
BENCHMARK(BM_Predict)->DenseRange(0, 4);

void BM_Ablation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_ablation(corpus(), lexicon(), 7, default_hyperparams(7)));
}
BENCHMARK(BM_Ablation)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();

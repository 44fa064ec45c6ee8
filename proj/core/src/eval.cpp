#include "qid/eval.hpp"

#include "qid/error.hpp"
#include "random.hpp"

namespace qid {

Split split_dataset(const Dataset& dataset, std::uint64_t seed) {
  if (dataset.empty()) {
    throw Error(ErrorCode::EmptyDataset, "cannot split an empty dataset");
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    by_class[static_cast<std::size_t>(dataset[i].label)].push_back(i);
  }
  Split split;
  split.seed = seed;
  detail::Rng rng(seed);
  for (auto& members : by_class) {
    rng.shuffle(members);
    const std::size_t cut = members.size() * 8 / 10;  // floor(0.8 n) without rounding error
    split.train.insert(split.train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(cut));
    split.test.insert(split.test.end(), members.begin() + static_cast<std::ptrdiff_t>(cut), members.end());
  }
  for (const std::size_t i : split.train) split.train_ids.push_back(dataset[i].id);
  for (const std::size_t i : split.test) split.test_ids.push_back(dataset[i].id);
  return split;
}

double f_measure(double precision, double recall) noexcept {
  const double sum = precision + recall;
  return sum > 0 ? 2.0 * precision * recall / sum : 0.0;
}

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

EvalReport report_from_confusion(const Confusion& c) {
  EvalReport r;
  r.confusion = c;
  r.precision = ratio(c.tp, c.tp + c.fp);
  r.recall = ratio(c.tp, c.tp + c.fn);
  r.f1 = f_measure(r.precision, r.recall);
  // label 0 seen as the positive class
  const double p0 = ratio(c.tn, c.tn + c.fn);
  const double r0 = ratio(c.tn, c.tn + c.fp);
  r.macro_precision = 0.5 * (r.precision + p0);
  r.macro_recall = 0.5 * (r.recall + r0);
  r.macro_f1 = 0.5 * (r.f1 + f_measure(p0, r0));
  return r;
}

EvalReport compute_metrics(std::span<const Label> predicted, std::span<const Label> gold) {
  if (predicted.size() != gold.size() || predicted.empty()) {
    throw Error(ErrorCode::LengthMismatch, "got " + std::to_string(predicted.size()) + " predictions for " +
                                               std::to_string(gold.size()) + " gold labels");
  }
  Confusion c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool p = predicted[i] == 1;
    const bool g = gold[i] == 1;
    if (p && g) ++c.tp;
    else if (p) ++c.fp;
    else if (g) ++c.fn;
    else ++c.tn;
  }
  return report_from_confusion(c);
}

HyperparamsByKind default_hyperparams(std::uint64_t seed) {
  HyperparamsByKind out;
  for (const ClassifierKind kind : kAllClassifierKinds) {
    out.emplace(kind, Hyperparams::defaults(kind, seed));
  }
  return out;
}

namespace {

AblationCell run_cell(const std::vector<FeatureVector>& features, const Dataset& dataset, const Split& split,
                      const Hyperparams& hp) {
  std::vector<FeatureVector> train_x;
  std::vector<Label> train_y;
  for (const std::size_t i : split.train) {
    train_x.push_back(features[i]);
    train_y.push_back(dataset[i].label);
  }
  AblationCell cell;
  try {
    const TrainedModel model = fit(train_x, train_y, hp);
    std::vector<Label> predicted;
    std::vector<Label> gold;
    for (const std::size_t i : split.test) {
      predicted.push_back(predict(model, features[i]).label);
      gold.push_back(dataset[i].label);
    }
    cell.report = compute_metrics(predicted, gold);
  } catch (const Error& e) {
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

AblationTable run_ablation(const Dataset& dataset, const SentimentLexicon& lexicon, std::uint64_t seed,
                           const HyperparamsByKind& hyperparams) {
  const Split split = split_dataset(dataset, seed);

  std::vector<FeatureVector> baseline;
  std::vector<FeatureVector> full;
  baseline.reserve(dataset.size());
  full.reserve(dataset.size());
  for (const LabeledExample& ex : dataset) {
    baseline.push_back(extract_features(ex.text, lexicon, FeatureMode::BaselineOnly));
    full.push_back(extract_features(ex.text, lexicon, FeatureMode::All));
  }

  AblationTable table;
  table.seed = seed;
  table.train_size = split.train.size();
  table.test_size = split.test.size();
  for (const ClassifierKind kind : kAllClassifierKinds) {
    const auto it = hyperparams.find(kind);
    Hyperparams hp = it != hyperparams.end() ? it->second : Hyperparams::defaults(kind, seed);
    hp.kind = kind;
    AblationRow row;
    row.kind = kind;
    row.before = run_cell(baseline, dataset, split, hp);
    row.after = run_cell(full, dataset, split, hp);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qid

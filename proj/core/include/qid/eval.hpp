#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qid/classifiers.hpp"
#include "qid/dataset.hpp"
#include "qid/features.hpp"
#include "qid/lexicon.hpp"

namespace qid {

struct Split {
  std::vector<std::size_t> train;  // positions in the dataset
  std::vector<std::size_t> test;
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  std::uint64_t seed = 0;

  bool operator==(const Split&) const = default;
};

/// Stratified 80/20 split. Each class is shuffled (Fisher-Yates, seeded)
/// and its first floor(0.8 * n_class) members go to train; the rest to test.
Split split_dataset(const Dataset& dataset, std::uint64_t seed);

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  bool operator==(const Confusion&) const = default;
};

struct EvalReport {
  Confusion confusion;
  double precision = 0;  // positive class (label 1)
  double recall = 0;
  double f1 = 0;
  double macro_precision = 0;  // unweighted mean over both classes
  double macro_recall = 0;
  double macro_f1 = 0;

  bool operator==(const EvalReport&) const = default;
};

/// Harmonic mean, 0 when p + r == 0.
double f_measure(double precision, double recall) noexcept;

EvalReport report_from_confusion(const Confusion& confusion);

/// Throws Error{LengthMismatch} on unequal or empty inputs.
EvalReport compute_metrics(std::span<const Label> predicted, std::span<const Label> gold);

struct AblationCell {
  std::optional<EvalReport> report;
  std::string error;  // set when fitting or predicting failed

  bool ok() const noexcept { return report.has_value(); }
  bool operator==(const AblationCell&) const = default;
};

struct AblationRow {
  ClassifierKind kind = ClassifierKind::KernelSvm;
  AblationCell before;  // baseline features only
  AblationCell after;   // baseline + emotional features

  bool operator==(const AblationRow&) const = default;
};

struct AblationTable {
  std::vector<AblationRow> rows;  // one per classifier, in kAllClassifierKinds order
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::uint64_t seed = 0;

  bool operator==(const AblationTable&) const = default;
};

using HyperparamsByKind = std::map<ClassifierKind, Hyperparams>;

/// Defaults for every kind with the given seed.
HyperparamsByKind default_hyperparams(std::uint64_t seed);

/// Trains every classifier twice on one split, once per feature mode, and
/// scores each on the held-out part. A failing cell records its error and the
/// remaining cells still run. Throws Error{EmptyDataset} on an empty dataset.
AblationTable run_ablation(const Dataset& dataset, const SentimentLexicon& lexicon, std::uint64_t seed,
                           const HyperparamsByKind& hyperparams);

}  // namespace qid

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qid/features.hpp"

namespace qid {

enum class ClassifierKind { KernelSvm, LinearSvm, MultinomialNB, LogisticRegression, GaussianNB };

inline constexpr std::array<ClassifierKind, 5> kAllClassifierKinds = {
    ClassifierKind::KernelSvm, ClassifierKind::LinearSvm, ClassifierKind::MultinomialNB,
    ClassifierKind::LogisticRegression, ClassifierKind::GaussianNB};

/// Short CLI names: svm, linsvm, nb, logreg, gnb.
std::string_view to_string(ClassifierKind kind) noexcept;
std::optional<ClassifierKind> parse_classifier_kind(std::string_view name) noexcept;

/// Labels: 1 = question seeking an answer, 0 = anything else.
using Label = int;

struct Hyperparams {
  ClassifierKind kind = ClassifierKind::LogisticRegression;
  std::uint64_t seed = 42;

  // logistic regression
  double learning_rate = 0.1;
  double l2 = 1e-4;
  std::size_t max_iters = 1000;  // 0 leaves the weights at zero
  double tol = 1e-6;

  // linear SVM (Pegasos)
  double lambda = 1e-4;
  std::size_t epochs = 100;

  // kernel SVM (simplified SMO, RBF)
  double c = 1.0;
  double svm_tol = 1e-3;
  std::size_t max_passes = 10;
  double gamma = 0.0;  // 0 selects 1 / (d * mean feature variance)

  // naive Bayes
  double alpha = 1.0;
  double var_smoothing = 1e-9;

  static Hyperparams defaults(ClassifierKind kind, std::uint64_t seed = 42);

  /// Throws Error{BadParams} on a non-positive rate or regularizer.
  void validate() const;

  /// Sets one field from `key=value` text, e.g. "lr", "l2", "C", "gamma".
  void set(std::string_view key, std::string_view value);

  bool operator==(const Hyperparams&) const = default;
};

struct GaussianNbParams {
  std::array<double, 2> prior{};  // 0 for a class absent from training
  std::array<std::vector<double>, 2> mean;
  std::array<std::vector<double>, 2> var;  // smoothed, > 0
  double epsilon = 0;
};

struct MultinomialNbParams {
  std::array<double, 2> prior{};
  std::array<std::vector<double>, 2> log_likelihood;  // log P(feature | class)
};

struct Standardizer {
  std::vector<double> mean;
  std::vector<double> stddev;  // 0 marks a constant column, mapped to 0

  static Standardizer fit(std::span<const double> rows, std::size_t cols);
  void apply(std::span<const double> x, std::span<double> out) const;
};

// Logistic regression and linear SVM.
struct LinearParams {
  Standardizer scaler;
  std::vector<double> weights;
  double bias = 0;
  std::size_t iterations = 0;
};

struct KernelSvmParams {
  double gamma = 0;
  double bias = 0;
  std::vector<double> coef;             // alpha_i * y_i, y in {-1, +1}
  std::vector<std::vector<double>> support_vectors;
};

using ModelParams = std::variant<GaussianNbParams, MultinomialNbParams, LinearParams, KernelSvmParams>;

struct TrainedModel {
  ClassifierKind kind = ClassifierKind::LogisticRegression;
  std::shared_ptr<const FeatureSchema> schema;
  Hyperparams hyperparams;
  std::size_t training_size = 0;
  ModelParams params;
};

/// `score` is a signed margin or log-odds; label is 1 iff score > 0.
struct Prediction {
  Label label = 0;
  double score = 0;
};

TrainedModel fit_gaussian_nb(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp);
TrainedModel fit_multinomial_nb(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp);
TrainedModel fit_logistic_regression(std::span<const FeatureVector> x, std::span<const Label> y,
                                     const Hyperparams& hp);
TrainedModel fit_linear_svm(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp);
TrainedModel fit_kernel_svm(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp);

/// Dispatches on hp.kind.
TrainedModel fit(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp);

/// Throws Error{SchemaMismatch} when x was built against another schema.
Prediction predict(const TrainedModel& model, const FeatureVector& x);

inline constexpr std::size_t kKernelSvmMaxExamples = 100000;

namespace logistic {

// Mean negative log-likelihood over rows plus (l2 / 2) * |w|^2; the bias is
// not penalized. `rows` is row-major with weights.size() columns.
double loss(std::span<const double> rows, std::span<const Label> y, std::span<const double> weights, double bias,
            double l2);

// Gradient of loss(); the last element is d/d bias.
std::vector<double> gradient(std::span<const double> rows, std::span<const Label> y,
                             std::span<const double> weights, double bias, double l2);

// Loss after each accepted gradient step, starting with the initial loss.
struct Trace {
  std::vector<double> loss;
};

TrainedModel fit_traced(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp,
                        Trace& trace);

}  // namespace logistic

// Model files: versioned JSON documents.
inline constexpr int kModelFormatVersion = 1;

std::string serialize_model(const TrainedModel& model);
TrainedModel deserialize_model(std::string_view document);
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace qid

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "qid/classifiers.hpp"
#include "qid/error.hpp"

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

struct Data {
  std::shared_ptr<const FeatureSchema> schema;
  std::vector<FeatureVector> x;
  std::vector<Label> y;
};

Data make(const std::vector<std::vector<double>>& rows, std::vector<Label> y) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < rows.front().size(); ++j) names.push_back("f" + std::to_string(j));
  Data d{FeatureSchema::custom(names), {}, std::move(y)};
  d.x = oracle::rows_of(d.schema, rows);
  return d;
}

FeatureVector point(const Data& d, std::vector<double> v) { return FeatureVector(d.schema, std::move(v)); }

double training_accuracy(const TrainedModel& m, const Data& d) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < d.x.size(); ++i) ok += predict(m, d.x[i]).label == d.y[i] ? 1 : 0;
  return static_cast<double>(ok) / static_cast<double>(d.x.size());
}

TrainedModel fit_kind(ClassifierKind kind, const Data& d, std::uint64_t seed = 42) {
  return fit(d.x, d.y, Hyperparams::defaults(kind, seed));
}

// 22-dim: class 1 has numOfPos = 3, class 0 has numOfNeg = 3, 1 elsewhere.
Data two_documents() {
  const auto schema = FeatureSchema::full();
  std::vector<double> pos(22, 1.0), neg(22, 1.0);
  pos[schema->index_of("numOfPos")] = 3;
  neg[schema->index_of("numOfNeg")] = 3;
  return Data{schema, oracle::rows_of(schema, {neg, pos}), {0, 1}};
}

}  // namespace

TEST(Hyperparams, DefaultsAndOverrides) {
  Hyperparams hp = Hyperparams::defaults(ClassifierKind::LinearSvm, 9);
  EXPECT_EQ(hp.seed, 9u);
  EXPECT_EQ(hp.lambda, 1e-4);
  EXPECT_EQ(hp.epochs, 100u);
  hp.set("C", "2.5");
  hp.set("max_iters", "7");
  EXPECT_EQ(hp.c, 2.5);
  EXPECT_EQ(hp.max_iters, 7u);
  EXPECT_EQ(code_of([&] { hp.set("bogus", "1"); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([&] { hp.set("lr", "abc"); }), ErrorCode::BadParams);
  hp.l2 = -1;
  EXPECT_EQ(code_of([&] { hp.validate(); }), ErrorCode::BadParams);
}

TEST(ClassifierKind, NamesRoundTrip) {
  for (const ClassifierKind k : kAllClassifierKinds) EXPECT_EQ(parse_classifier_kind(to_string(k)), k);
  EXPECT_FALSE(parse_classifier_kind("forest").has_value());
}

// --- Gaussian naive Bayes

TEST(GaussianNb, ClosedFormOnOneDimensionalFixture) {
  const Data d = make({{1}, {2}, {3}, {10}, {11}, {12}}, {0, 0, 0, 1, 1, 1});
  const TrainedModel m = fit_gaussian_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::GaussianNB));
  const double eps = 1e-9 * (125.5 / 6.0);
  const double v = 2.0 / 3.0 + eps;
  const double expected = oracle::log_normal(2.5, 11, v) - oracle::log_normal(2.5, 2, v);
  const Prediction p = predict(m, point(d, {2.5}));
  EXPECT_EQ(p.label, 0);
  EXPECT_NEAR(p.score, expected, 1e-9 * std::abs(expected));
  EXPECT_NEAR(p.score, -36.0 / v, 1e-9 * 54);
  const auto& params = std::get<GaussianNbParams>(m.params);
  EXPECT_NEAR(params.prior[0] + params.prior[1], 1.0, 1e-12);
  EXPECT_EQ(predict(m, point(d, {7})).label, 1);
}

TEST(GaussianNb, SymmetricTieResolvesToZero) {
  const Data d = make({{-2}, {0}, {0}, {2}}, {0, 0, 1, 1});
  const TrainedModel m = fit_gaussian_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::GaussianNB));
  const Prediction p = predict(m, point(d, {0}));
  EXPECT_EQ(p.score, 0.0);
  EXPECT_EQ(p.label, 0);
}

TEST(GaussianNb, MidpointRuleOnEqualVarianceData) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> loc(-50, 50), spread(0.5, 5), probe(-80, 80);
  for (int iter = 0; iter < 200; ++iter) {
    const double a = loc(rng), b = loc(rng), s = spread(rng);
    // the same offsets in both classes give equal variance and equal priors
    const Data d = make({{a - s}, {a}, {a + s}, {b - s}, {b}, {b + s}}, {0, 0, 0, 1, 1, 1});
    const TrainedModel m = fit_gaussian_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::GaussianNB));
    const double mid = (a + b) / 2;
    for (int k = 0; k < 20; ++k) {
      const double x = probe(rng);
      if (std::abs(x - mid) < 1e-6 * (1 + std::abs(mid))) continue;
      const bool closer_to_b = std::abs(x - b) < std::abs(x - a);
      ASSERT_EQ(predict(m, point(d, {x})).label, closer_to_b ? 1 : 0) << a << " " << b << " " << x;
    }
  }
}

TEST(GaussianNb, SingleClassPredictsThatClass) {
  for (const Label label : {0, 1}) {
    const Data d = make({{1, 2}, {3, 4}}, {label, label});
    const TrainedModel m = fit_gaussian_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::GaussianNB));
    for (const double v : {-100.0, 0.0, 2.0, 1e6}) EXPECT_EQ(predict(m, point(d, {v, v})).label, label);
  }
}

TEST(GaussianNb, ConstantDataStillHasPositiveVariance) {
  const Data d = make({{5, 5}, {5, 5}, {5, 5}}, {0, 1, 1});
  const TrainedModel m = fit_gaussian_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::GaussianNB));
  for (const auto& vs : std::get<GaussianNbParams>(m.params).var)
    for (const double v : vs) EXPECT_GT(v, 0);
  EXPECT_EQ(predict(m, point(d, {5, 5})).label, 1);  // priors 2/3 vs 1/3
}

// --- Multinomial naive Bayes

TEST(MultinomialNb, TwoDocumentFixture) {
  const Data d = two_documents();
  const TrainedModel m = fit_multinomial_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::MultinomialNB));
  // Each class has mass 24 over 22 columns: P = (count + 1) / 46.
  const auto& params = std::get<MultinomialNbParams>(m.params);
  const std::size_t pos = d.schema->index_of("numOfPos");
  EXPECT_NEAR(params.log_likelihood[1][pos], std::log(4.0 / 46.0), 1e-12);
  EXPECT_NEAR(params.log_likelihood[0][pos], std::log(2.0 / 46.0), 1e-12);
  std::vector<double> q(22, 0.0);
  q[pos] = 2;
  const Prediction p = predict(m, point(d, q));
  EXPECT_EQ(p.label, 1);
  EXPECT_NEAR(p.score, 2 * std::log(2.0), 1e-12);
  std::vector<double> r(22, 0.0);
  r[d.schema->index_of("numOfNeg")] = 1;
  EXPECT_EQ(predict(m, point(d, r)).label, 0);
}

TEST(MultinomialNb, ZeroVectorIsDecidedByPriors) {
  const Data d = make({{1, 0}, {0, 1}, {0, 2}}, {0, 1, 1});
  const TrainedModel m = fit_multinomial_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::MultinomialNB));
  const Prediction p = predict(m, point(d, {0, 0}));
  EXPECT_NEAR(p.score, std::log(2.0), 1e-12);
  EXPECT_EQ(p.label, 1);
}

TEST(MultinomialNb, RejectsNegativeFeatures) {
  const Data d = make({{1, -1}, {0, 1}}, {0, 1});
  EXPECT_EQ(code_of([&] { fit_multinomial_nb(d.x, d.y, Hyperparams::defaults(ClassifierKind::MultinomialNB)); }),
            ErrorCode::NegativeFeature);
}

// --- Logistic regression

TEST(LogisticRegression, ZeroIterationsGiveZeroWeights) {
  const Data d = make({{0, 1}, {1, 0}, {3, 3}}, {0, 1, 1});
  Hyperparams hp = Hyperparams::defaults(ClassifierKind::LogisticRegression);
  hp.max_iters = 0;
  const TrainedModel m = fit_logistic_regression(d.x, d.y, hp);
  const auto& p = std::get<LinearParams>(m.params);
  for (const double w : p.weights) EXPECT_EQ(w, 0.0);
  EXPECT_EQ(p.bias, 0.0);
  for (const auto& x : d.x) {
    EXPECT_EQ(predict(m, x).score, 0.0);
    EXPECT_EQ(predict(m, x).label, 0);
  }
}

TEST(LogisticRegression, GradientMatchesFiniteDifferences) {
  std::mt19937 rng(17);
  std::normal_distribution<double> g(0, 1);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 5, dim = 4;
    std::vector<double> rows(n * dim), params(dim + 1);
    std::vector<Label> y(n);
    for (double& v : rows) v = g(rng);
    for (double& v : params) v = g(rng);
    for (Label& l : y) l = bit(rng);
    const double l2 = 0.01;
    const auto analytic =
        logistic::gradient(rows, y, std::span<const double>(params).first(dim), params[dim], l2);
    const auto numeric = oracle::numeric_gradient(
        [&](std::span<const double> p) { return oracle::logistic_loss_reference(rows, y, p, l2); }, params);
    double worst = 0;
    for (std::size_t j = 0; j <= dim; ++j) worst = std::max(worst, oracle::relative_error(analytic[j], numeric[j]));
    EXPECT_LT(worst, 1e-4);
    EXPECT_NEAR(logistic::loss(rows, y, std::span<const double>(params).first(dim), params[dim], l2),
                oracle::logistic_loss_reference(rows, y, params, l2), 1e-12);
  }
}

TEST(LogisticRegression, SeparatesFourPoints) {
  const Data d = make({{0, 0}, {0, 1}, {3, 3}, {3, 4}}, {0, 0, 1, 1});
  EXPECT_EQ(training_accuracy(fit_kind(ClassifierKind::LogisticRegression, d), d), 1.0);
}

TEST(LogisticRegression, LossNeverIncreases) {
  std::mt19937 rng(8);
  std::normal_distribution<double> g(0, 1);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<std::vector<double>> rows;
    std::vector<Label> y;
    for (int i = 0; i < 40; ++i) {
      const Label l = i % 2;
      rows.push_back({g(rng) + l, g(rng) * 3, g(rng) - 2 * l});
      y.push_back(l);
    }
    const Data d = make(rows, y);
    Hyperparams hp = Hyperparams::defaults(ClassifierKind::LogisticRegression);
    hp.learning_rate = iter % 2 ? 5.0 : 0.1;  // large steps exercise the step halving
    logistic::Trace trace;
    logistic::fit_traced(d.x, d.y, hp, trace);
    ASSERT_GE(trace.loss.size(), 2u);
    for (std::size_t k = 1; k < trace.loss.size(); ++k) ASSERT_LE(trace.loss[k], trace.loss[k - 1] + 1e-12);
  }
}

// --- Linear SVM

TEST(LinearSvm, SeparatesFixture) {
  const Data d = make({{0, 0}, {1, 1}, {0.1, 0}, {1, 0.9}}, {0, 1, 0, 1});
  EXPECT_EQ(training_accuracy(fit_kind(ClassifierKind::LinearSvm, d), d), 1.0);
}

TEST(LinearSvm, SameSeedGivesIdenticalWeights) {
  const Data d = make({{0, 0}, {1, 1}, {0.1, 0}, {1, 0.9}, {0.5, 0.4}}, {0, 1, 0, 1, 1});
  const auto a = std::get<LinearParams>(fit_kind(ClassifierKind::LinearSvm, d, 5).params);
  const auto b = std::get<LinearParams>(fit_kind(ClassifierKind::LinearSvm, d, 5).params);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.bias, b.bias);
}

TEST(LinearSvm, UniformScalingLeavesPredictionsUnchanged) {
  std::mt19937 rng(21);
  std::normal_distribution<double> g(0, 1);
  std::vector<std::vector<double>> rows, scaled;
  std::vector<Label> y;
  for (int i = 0; i < 60; ++i) {
    const Label l = i % 2;
    rows.push_back({g(rng) + 1.5 * l, g(rng) - l});
    scaled.push_back({rows.back()[0] * 10, rows.back()[1] * 10});
    y.push_back(l);
  }
  const Data a = make(rows, y), b = make(scaled, y);
  const TrainedModel ma = fit_kind(ClassifierKind::LinearSvm, a), mb = fit_kind(ClassifierKind::LinearSvm, b);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(predict(ma, a.x[i]).label, predict(mb, b.x[i]).label);
}

// --- Kernel SVM

TEST(KernelSvm, SolvesXor) {
  const Data d = make({{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {0, 0, 1, 1});
  const TrainedModel m = fit_kind(ClassifierKind::KernelSvm, d);
  EXPECT_EQ(training_accuracy(m, d), 1.0);
  EXPECT_GT(std::get<KernelSvmParams>(m.params).gamma, 0);
}

TEST(KernelSvm, DuplicatedDataGivesSameDecisions) {
  // Well separated, so no multiplier reaches C and duplication leaves the
  // optimum unchanged; probes right on the boundary are skipped because SMO
  // stops within its tolerance.
  const std::vector<std::vector<double>> rows = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {4, 4}, {4, 5}, {5, 4}, {5, 5}};
  const std::vector<Label> y = {0, 0, 0, 0, 1, 1, 1, 1};
  std::vector<std::vector<double>> twice = rows;
  twice.insert(twice.end(), rows.begin(), rows.end());
  std::vector<Label> y2 = y;
  y2.insert(y2.end(), y.begin(), y.end());
  const Data a = make(rows, y), b = make(twice, y2);
  const TrainedModel ma = fit_kind(ClassifierKind::KernelSvm, a), mb = fit_kind(ClassifierKind::KernelSvm, b);
  for (const double c : std::get<KernelSvmParams>(ma.params).coef) EXPECT_LT(std::abs(c), 1.0 - 1e-6);
  int compared = 0;
  for (double u = -1; u <= 6; u += 0.25) {
    for (double v = -1; v <= 6; v += 0.25) {
      const Prediction pa = predict(ma, point(a, {u, v}));
      if (std::abs(pa.score) < 0.05) continue;
      ++compared;
      EXPECT_EQ(pa.label, predict(mb, point(b, {u, v})).label) << u << "," << v;
    }
  }
  EXPECT_GT(compared, 700);
}

TEST(KernelSvm, AgreesWithLinearSvmOnSeparableLine) {
  const Data d = make({{-3}, {-2}, {-1.5}, {-1}, {1}, {1.2}, {2}, {3}}, {0, 0, 0, 0, 1, 1, 1, 1});
  const TrainedModel k = fit_kind(ClassifierKind::KernelSvm, d), l = fit_kind(ClassifierKind::LinearSvm, d);
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    EXPECT_EQ(predict(k, d.x[i]).label, predict(l, d.x[i]).label);
    EXPECT_EQ(predict(k, d.x[i]).label, d.y[i]);
  }
}

TEST(KernelSvm, RejectsOversizedTrainingSets) {
  const auto schema = FeatureSchema::custom({"x"});
  std::vector<FeatureVector> x;
  std::vector<Label> y;
  x.reserve(kKernelSvmMaxExamples + 1);
  for (std::size_t i = 0; i <= kKernelSvmMaxExamples; ++i) {
    x.emplace_back(schema, std::vector<double>{static_cast<double>(i % 7)});
    y.push_back(static_cast<Label>(i % 2));
  }
  EXPECT_EQ(code_of([&] { fit_kernel_svm(x, y, Hyperparams::defaults(ClassifierKind::KernelSvm)); }),
            ErrorCode::TooLarge);
}

// --- all kinds

TEST(AllKinds, OnePointDatasets) {
  for (const Label label : {0, 1}) {
    const Data d = make({{2, 1}}, {label});
    for (const ClassifierKind k : kAllClassifierKinds) {
      const bool bayes = k == ClassifierKind::GaussianNB || k == ClassifierKind::MultinomialNB;
      if (bayes) {
        EXPECT_EQ(predict(fit_kind(k, d), d.x[0]).label, label) << to_string(k);
      } else {
        EXPECT_EQ(code_of([&] { fit_kind(k, d); }), ErrorCode::SingleClass) << to_string(k);
      }
    }
  }
}

TEST(AllKinds, EmptyDatasetIsRejected) {
  const auto schema = FeatureSchema::custom({"x"});
  for (const ClassifierKind k : kAllClassifierKinds)
    EXPECT_EQ(code_of([&] { fit({}, {}, Hyperparams::defaults(k)); }), ErrorCode::EmptyDataset);
}

TEST(AllKinds, ContractViolations) {
  const Data d = make({{0, 1}, {1, 0}}, {0, 1});
  const auto other = FeatureSchema::custom({"a", "b", "c"});
  std::vector<FeatureVector> mixed = d.x;
  mixed.emplace_back(other, std::vector<double>{1, 2, 3});
  const std::vector<Label> bad = {0, 2};
  for (const ClassifierKind k : kAllClassifierKinds) {
    const Hyperparams hp = Hyperparams::defaults(k);
    EXPECT_EQ(code_of([&] { fit(d.x, bad, hp); }), ErrorCode::InvalidLabel);
    EXPECT_EQ(code_of([&] { fit(d.x, std::vector<Label>{0}, hp); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([&] { fit(mixed, std::vector<Label>{0, 1, 1}, hp); }), ErrorCode::DimensionMismatch);
    const TrainedModel m = fit(d.x, d.y, hp);
    EXPECT_EQ(code_of([&] { predict(m, FeatureVector(other, {1, 2, 3})); }), ErrorCode::SchemaMismatch);
    EXPECT_EQ(code_of([&] { predict(m, FeatureVector(FeatureSchema::custom({"f1", "f0"}), {1, 2})); }),
              ErrorCode::SchemaMismatch);
  }
  EXPECT_EQ(code_of([] { FeatureVector(FeatureSchema::custom({"a"}), {1, 2}); }), ErrorCode::DimensionMismatch);
}

namespace {

Data random_separable(std::mt19937& rng, std::size_t n, std::size_t dim) {
  std::normal_distribution<double> g(0, 1);
  std::vector<std::vector<double>> rows;
  std::vector<Label> y;
  for (std::size_t i = 0; i < n; ++i) {
    const Label l = static_cast<Label>(i % 2);
    std::vector<double> r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = std::abs(g(rng) + (j == 0 ? 3.0 * l : 0.0));
    rows.push_back(r);
    y.push_back(l);
  }
  return make(rows, y);
}

}  // namespace

TEST(AllKinds, PermutingColumnsDoesNotChangeDecisions) {
  std::mt19937 rng(4);
  const Data d = random_separable(rng, 40, 3);
  std::vector<std::vector<double>> permuted;
  for (const auto& x : d.x) permuted.push_back({x[2], x[0], x[1]});
  const Data p = make(permuted, d.y);
  for (const ClassifierKind k : kAllClassifierKinds) {
    const TrainedModel ma = fit_kind(k, d), mb = fit_kind(k, p);
    for (std::size_t i = 0; i < d.x.size(); ++i) {
      const Prediction a = predict(ma, d.x[i]), b = predict(mb, p.x[i]);
      // SMO takes tolerance-driven branches, so rounding differences in the
      // kernel sums move its scores slightly; the others agree to rounding.
      const bool smo = k == ClassifierKind::KernelSvm;
      EXPECT_NEAR(a.score, b.score, smo ? 1e-2 : 1e-9 * (1 + std::abs(a.score))) << to_string(k);
      if (std::abs(a.score) > (smo ? 1e-2 : 1e-6)) {
        EXPECT_EQ(a.label, b.label) << to_string(k);
      }
    }
  }
}

TEST(AllKinds, FitIsDeterministic) {
  std::mt19937 rng(6);
  const Data d = random_separable(rng, 30, 4);
  for (const ClassifierKind k : kAllClassifierKinds)
    EXPECT_EQ(serialize_model(fit_kind(k, d, 11)), serialize_model(fit_kind(k, d, 11))) << to_string(k);
}

TEST(AllKinds, SeparableTrainingPointsGetTheirLabels) {
  // separable both by a line and by feature proportions (multinomial NB)
  const Data d = make({{3, 0}, {4, 1}, {5, 0}, {0, 3}, {1, 4}, {0, 5}}, {0, 0, 0, 1, 1, 1});
  for (const ClassifierKind k : kAllClassifierKinds) EXPECT_EQ(training_accuracy(fit_kind(k, d), d), 1.0) << to_string(k);
}

TEST(AllKinds, ScoreSignMatchesLabel) {
  std::mt19937 rng(12);
  const Data d = random_separable(rng, 30, 3);
  std::normal_distribution<double> g(0, 3);
  for (const ClassifierKind k : kAllClassifierKinds) {
    const TrainedModel m = fit_kind(k, d);
    for (int i = 0; i < 100; ++i) {
      const Prediction p = predict(m, point(d, {std::abs(g(rng)), std::abs(g(rng)), std::abs(g(rng))}));
      ASSERT_EQ(p.label, p.score > 0 ? 1 : 0);
    }
  }
}

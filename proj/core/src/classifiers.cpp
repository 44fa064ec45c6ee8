#include "qid/classifiers.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "qid/error.hpp"
#include "random.hpp"

namespace qid {

std::string_view to_string(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::KernelSvm: return "svm";
    case ClassifierKind::LinearSvm: return "linsvm";
    case ClassifierKind::MultinomialNB: return "nb";
    case ClassifierKind::LogisticRegression: return "logreg";
    case ClassifierKind::GaussianNB: return "gnb";
  }
  return "?";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view name) noexcept {
  for (const ClassifierKind kind : kAllClassifierKinds) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

Hyperparams Hyperparams::defaults(ClassifierKind kind, std::uint64_t seed) {
  Hyperparams hp;
  hp.kind = kind;
  hp.seed = seed;
  return hp;
}

void Hyperparams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0) || !std::isfinite(v)) {
      throw Error(ErrorCode::BadParams, std::string(name) + " must be a positive finite number");
    }
  };
  positive(learning_rate, "lr");
  positive(l2, "l2");
  positive(tol, "tol");
  positive(lambda, "lambda");
  positive(c, "C");
  positive(svm_tol, "svm_tol");
  positive(alpha, "alpha");
  positive(var_smoothing, "var_smoothing");
  if (!(gamma >= 0) || !std::isfinite(gamma)) {
    throw Error(ErrorCode::BadParams, "gamma must be >= 0 (0 selects the scale heuristic)");
  }
  if (epochs < 1) {
    throw Error(ErrorCode::BadParams, "epochs must be >= 1");
  }
  if (max_passes < 1) {
    throw Error(ErrorCode::BadParams, "max_passes must be >= 1");
  }
}

namespace {

double parse_double(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(value), &used);
    if (used == value.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadParams, "bad value for " + std::string(key) + ": " + std::string(value));
}

std::uint64_t parse_uint(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::BadParams, "bad value for " + std::string(key) + ": " + std::string(value));
  }
  return v;
}

}  // namespace

void Hyperparams::set(std::string_view key, std::string_view value) {
  if (key == "lr") learning_rate = parse_double(key, value);
  else if (key == "l2") l2 = parse_double(key, value);
  else if (key == "max_iters") max_iters = parse_uint(key, value);
  else if (key == "tol") tol = parse_double(key, value);
  else if (key == "lambda") lambda = parse_double(key, value);
  else if (key == "epochs") epochs = parse_uint(key, value);
  else if (key == "C" || key == "c") c = parse_double(key, value);
  else if (key == "svm_tol") svm_tol = parse_double(key, value);
  else if (key == "max_passes") max_passes = parse_uint(key, value);
  else if (key == "gamma") gamma = parse_double(key, value);
  else if (key == "alpha") alpha = parse_double(key, value);
  else if (key == "var_smoothing") var_smoothing = parse_double(key, value);
  else if (key == "seed") seed = parse_uint(key, value);
  else throw Error(ErrorCode::BadParams, "unknown hyperparameter: " + std::string(key));
}

namespace {

// Row-major copy of the training matrix after shape and label checks.
struct TrainingSet {
  std::shared_ptr<const FeatureSchema> schema;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  std::vector<Label> labels;
  std::array<std::size_t, 2> class_counts{};

  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  bool single_class() const { return class_counts[0] == 0 || class_counts[1] == 0; }
};

TrainingSet make_training_set(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp) {
  hp.validate();
  if (x.empty()) {
    throw Error(ErrorCode::EmptyDataset, "no training examples");
  }
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "feature rows and labels differ in count");
  }
  TrainingSet ts;
  ts.schema = x.front().schema_ptr();
  ts.rows = x.size();
  ts.cols = ts.schema->size();
  ts.data.reserve(ts.rows * ts.cols);
  for (const FeatureVector& v : x) {
    if (v.schema().fingerprint() != ts.schema->fingerprint() || v.size() != ts.cols) {
      throw Error(ErrorCode::DimensionMismatch, "training rows use different feature schemas");
    }
    for (const double value : v.values()) {
      if (!std::isfinite(value)) {
        throw Error(ErrorCode::BadParams, "non-finite feature value");
      }
    }
    ts.data.insert(ts.data.end(), v.values().begin(), v.values().end());
  }
  for (const Label label : y) {
    if (label != 0 && label != 1) {
      throw Error(ErrorCode::InvalidLabel, "labels must be 0 or 1, got " + std::to_string(label));
    }
    ++ts.class_counts[static_cast<std::size_t>(label)];
  }
  ts.labels.assign(y.begin(), y.end());
  return ts;
}

void require_both_classes(const TrainingSet& ts, ClassifierKind kind) {
  if (ts.single_class()) {
    throw Error(ErrorCode::SingleClass,
                std::string(to_string(kind)) + " needs at least one example of each class");
  }
}

TrainedModel make_model(const TrainingSet& ts, const Hyperparams& hp, ClassifierKind kind, ModelParams params) {
  TrainedModel m;
  m.kind = kind;
  m.schema = ts.schema;
  m.hyperparams = hp;
  m.hyperparams.kind = kind;
  m.training_size = ts.rows;
  m.params = std::move(params);
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

double log_or_neg_inf(double p) { return p > 0 ? std::log(p) : -std::numeric_limits<double>::infinity(); }

// Score of a two-class generative model from its joint log-likelihoods. A
// class never seen in training has prior 0 and loses outright.
double log_odds(const std::array<double, 2>& prior, double jll0, double jll1) {
  if (prior[0] == 0) {
    return std::numeric_limits<double>::infinity();
  }
  if (prior[1] == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  return jll1 - jll0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gaussian naive Bayes

TrainedModel fit_gaussian_nb(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp) {
  const TrainingSet ts = make_training_set(x, y, hp);
  const std::size_t d = ts.cols;
  GaussianNbParams p;

  // Variance of each column over all rows sets the smoothing scale.
  double max_var = 0;
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0;
    for (std::size_t i = 0; i < ts.rows; ++i) mean += ts.row(i)[j];
    mean /= static_cast<double>(ts.rows);
    double var = 0;
    for (std::size_t i = 0; i < ts.rows; ++i) var += (ts.row(i)[j] - mean) * (ts.row(i)[j] - mean);
    max_var = std::max(max_var, var / static_cast<double>(ts.rows));
  }
  p.epsilon = hp.var_smoothing * (max_var > 0 ? max_var : 1.0);

  for (std::size_t c = 0; c < 2; ++c) {
    const auto n = static_cast<double>(ts.class_counts[c]);
    p.prior[c] = n / static_cast<double>(ts.rows);
    p.mean[c].assign(d, 0.0);
    p.var[c].assign(d, 0.0);
    if (ts.class_counts[c] == 0) {
      p.var[c].assign(d, 1.0);
      continue;
    }
    for (std::size_t i = 0; i < ts.rows; ++i) {
      if (static_cast<std::size_t>(ts.labels[i]) != c) continue;
      for (std::size_t j = 0; j < d; ++j) p.mean[c][j] += ts.row(i)[j];
    }
    for (double& m : p.mean[c]) m /= n;
    for (std::size_t i = 0; i < ts.rows; ++i) {
      if (static_cast<std::size_t>(ts.labels[i]) != c) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const double diff = ts.row(i)[j] - p.mean[c][j];
        p.var[c][j] += diff * diff;
      }
    }
    for (double& v : p.var[c]) v = v / n + p.epsilon;
  }
  return make_model(ts, hp, ClassifierKind::GaussianNB, std::move(p));
}

namespace {

double gaussian_nb_score(const GaussianNbParams& p, std::span<const double> x) {
  std::array<double, 2> jll{};
  for (std::size_t c = 0; c < 2; ++c) {
    double s = log_or_neg_inf(p.prior[c]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double diff = x[j] - p.mean[c][j];
      s -= 0.5 * std::log(2.0 * std::numbers::pi * p.var[c][j]) + diff * diff / (2.0 * p.var[c][j]);
    }
    jll[c] = s;
  }
  return log_odds(p.prior, jll[0], jll[1]);
}

}  // namespace

// ---------------------------------------------------------------------------
// Multinomial naive Bayes

TrainedModel fit_multinomial_nb(std::span<const FeatureVector> x, std::span<const Label> y,
                                const Hyperparams& hp) {
  const TrainingSet ts = make_training_set(x, y, hp);
  for (const double v : ts.data) {
    if (v < 0) {
      throw Error(ErrorCode::NegativeFeature, "multinomial naive Bayes needs non-negative features");
    }
  }
  const std::size_t d = ts.cols;
  MultinomialNbParams p;
  for (std::size_t c = 0; c < 2; ++c) {
    p.prior[c] = static_cast<double>(ts.class_counts[c]) / static_cast<double>(ts.rows);
    std::vector<double> mass(d, 0.0);
    for (std::size_t i = 0; i < ts.rows; ++i) {
      if (static_cast<std::size_t>(ts.labels[i]) != c) continue;
      for (std::size_t j = 0; j < d; ++j) mass[j] += ts.row(i)[j];
    }
    double total = 0;
    for (const double m : mass) total += m;
    const double log_denominator = std::log(total + hp.alpha * static_cast<double>(d));
    p.log_likelihood[c].resize(d);
    for (std::size_t j = 0; j < d; ++j) {
      p.log_likelihood[c][j] = std::log(mass[j] + hp.alpha) - log_denominator;
    }
  }
  return make_model(ts, hp, ClassifierKind::MultinomialNB, std::move(p));
}

namespace {

double multinomial_nb_score(const MultinomialNbParams& p, std::span<const double> x) {
  std::array<double, 2> jll{};
  for (std::size_t c = 0; c < 2; ++c) {
    jll[c] = log_or_neg_inf(p.prior[c]) + dot(x, p.log_likelihood[c]);
  }
  return log_odds(p.prior, jll[0], jll[1]);
}

}  // namespace

// ---------------------------------------------------------------------------
// Standardization

Standardizer Standardizer::fit(std::span<const double> rows, std::size_t cols) {
  Standardizer s;
  const std::size_t n = cols == 0 ? 0 : rows.size() / cols;
  s.mean.assign(cols, 0.0);
  s.stddev.assign(cols, 0.0);
  if (n == 0) {
    return s;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) s.mean[j] += rows[i * cols + j];
  for (double& m : s.mean) m /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double diff = rows[i * cols + j] - s.mean[j];
      s.stddev[j] += diff * diff;
    }
  for (double& v : s.stddev) v = std::sqrt(v / static_cast<double>(n));
  return s;
}

void Standardizer::apply(std::span<const double> x, std::span<double> out) const {
  for (std::size_t j = 0; j < x.size(); ++j) {
    out[j] = stddev[j] > 0 ? (x[j] - mean[j]) / stddev[j] : 0.0;
  }
}

namespace {

std::vector<double> standardize_rows(const TrainingSet& ts, const Standardizer& scaler) {
  std::vector<double> z(ts.data.size());
  for (std::size_t i = 0; i < ts.rows; ++i) {
    scaler.apply(ts.row(i), std::span<double>(z.data() + i * ts.cols, ts.cols));
  }
  return z;
}

double linear_score(const LinearParams& p, std::span<const double> x) {
  std::vector<double> z(x.size());
  p.scaler.apply(x, z);
  return dot(z, p.weights) + p.bias;
}

}  // namespace

// ---------------------------------------------------------------------------
// Logistic regression

namespace logistic {

namespace {

double softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

double sigmoid(double z) {
  if (z >= 0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

double loss(std::span<const double> rows, std::span<const Label> y, std::span<const double> weights, double bias,
            double l2) {
  const std::size_t d = weights.size();
  const std::size_t n = y.size();
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = dot(rows.subspan(i * d, d), weights) + bias;
    total += softplus(z) - static_cast<double>(y[i]) * z;
  }
  return total / static_cast<double>(n) + 0.5 * l2 * dot(weights, weights);
}

std::vector<double> gradient(std::span<const double> rows, std::span<const Label> y,
                             std::span<const double> weights, double bias, double l2) {
  const std::size_t d = weights.size();
  const std::size_t n = y.size();
  std::vector<double> g(d + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = rows.subspan(i * d, d);
    const double r = sigmoid(dot(row, weights) + bias) - static_cast<double>(y[i]);
    for (std::size_t j = 0; j < d; ++j) g[j] += r * row[j];
    g[d] += r;
  }
  for (double& v : g) v /= static_cast<double>(n);
  for (std::size_t j = 0; j < d; ++j) g[j] += l2 * weights[j];
  return g;
}

TrainedModel fit_traced(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp,
                        Trace& trace) {
  const TrainingSet ts = make_training_set(x, y, hp);
  require_both_classes(ts, ClassifierKind::LogisticRegression);
  const std::size_t d = ts.cols;

  LinearParams p;
  p.scaler = Standardizer::fit(ts.data, d);
  const std::vector<double> z = standardize_rows(ts, p.scaler);
  p.weights.assign(d, 0.0);

  double current = loss(z, ts.labels, p.weights, p.bias, hp.l2);
  trace.loss = {current};
  double step = hp.learning_rate;
  std::vector<double> candidate(d);

  for (std::size_t iter = 0; iter < hp.max_iters; ++iter) {
    const std::vector<double> g = gradient(z, ts.labels, p.weights, p.bias, hp.l2);
    double next = current;
    double next_bias = p.bias;
    // Halve the step until the loss does not go up; gradient descent with a
    // step below 2/L never needs this on standardized data.
    for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
      for (std::size_t j = 0; j < d; ++j) candidate[j] = p.weights[j] - step * g[j];
      next_bias = p.bias - step * g[d];
      next = loss(z, ts.labels, candidate, next_bias, hp.l2);
      if (next <= current) break;
    }
    if (next > current) {
      break;
    }
    p.weights = candidate;
    p.bias = next_bias;
    p.iterations = iter + 1;
    trace.loss.push_back(next);
    const double decrease = current - next;
    current = next;
    if (decrease < hp.tol) {
      break;
    }
  }
  return make_model(ts, hp, ClassifierKind::LogisticRegression, std::move(p));
}

}  // namespace logistic

TrainedModel fit_logistic_regression(std::span<const FeatureVector> x, std::span<const Label> y,
                                     const Hyperparams& hp) {
  logistic::Trace trace;
  return logistic::fit_traced(x, y, hp, trace);
}

// ---------------------------------------------------------------------------
// Linear SVM: Pegasos with the bias folded in as a constant column.

TrainedModel fit_linear_svm(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp) {
  const TrainingSet ts = make_training_set(x, y, hp);
  require_both_classes(ts, ClassifierKind::LinearSvm);
  const std::size_t d = ts.cols;

  LinearParams p;
  p.scaler = Standardizer::fit(ts.data, d);
  const std::vector<double> z = standardize_rows(ts, p.scaler);

  std::vector<double> w(d + 1, 0.0);
  std::vector<double> xi(d + 1, 1.0);
  const double radius = 1.0 / std::sqrt(hp.lambda);
  detail::Rng rng(hp.seed);
  std::vector<std::size_t> order = detail::iota_indices(ts.rows);
  std::size_t t = 0;

  for (std::size_t epoch = 0; epoch < hp.epochs; ++epoch) {
    rng.shuffle(order);
    for (const std::size_t i : order) {
      ++t;
      std::copy_n(z.begin() + static_cast<std::ptrdiff_t>(i * d), d, xi.begin());
      const double yi = ts.labels[i] == 1 ? 1.0 : -1.0;
      const double eta = 1.0 / (hp.lambda * static_cast<double>(t));
      const double margin = yi * dot(w, xi);
      const double shrink = 1.0 - eta * hp.lambda;
      for (double& v : w) v *= shrink;
      if (margin < 1.0) {
        for (std::size_t j = 0; j <= d; ++j) w[j] += eta * yi * xi[j];
      }
      const double norm = std::sqrt(dot(w, w));
      if (norm > radius) {
        for (double& v : w) v *= radius / norm;
      }
    }
  }
  p.bias = w[d];
  w.pop_back();
  p.weights = std::move(w);
  p.iterations = t;
  return make_model(ts, hp, ClassifierKind::LinearSvm, std::move(p));
}

// ---------------------------------------------------------------------------
// Kernel SVM: RBF kernel, simplified SMO.

namespace {

double rbf(std::span<const double> a, std::span<const double> b, double gamma) {
  double s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    s += diff * diff;
  }
  return std::exp(-gamma * s);
}

// 1 / (d * mean variance), written as 1 / total variance so that appending
// constant columns leaves gamma bit-identical.
double scale_gamma(const TrainingSet& ts) {
  const Standardizer stats = Standardizer::fit(ts.data, ts.cols);
  double total_var = 0;
  for (const double s : stats.stddev) total_var += s * s;
  return total_var > 0 ? 1.0 / total_var : 1.0;
}

constexpr double kSupportThreshold = 1e-8;
constexpr std::size_t kMaxSweeps = 10000;

}  // namespace

TrainedModel fit_kernel_svm(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp) {
  const TrainingSet ts = make_training_set(x, y, hp);
  require_both_classes(ts, ClassifierKind::KernelSvm);
  if (ts.rows > kKernelSvmMaxExamples) {
    throw Error(ErrorCode::TooLarge, "kernel SVM is limited to " + std::to_string(kKernelSvmMaxExamples) +
                                         " training examples");
  }
  const std::size_t n = ts.rows;
  const double gamma = hp.gamma > 0 ? hp.gamma : scale_gamma(ts);
  const double c = hp.c;
  auto kernel = [&](std::size_t a, std::size_t b) { return a == b ? 1.0 : rbf(ts.row(a), ts.row(b), gamma); };

  std::vector<double> yy(n);
  for (std::size_t i = 0; i < n; ++i) yy[i] = ts.labels[i] == 1 ? 1.0 : -1.0;
  std::vector<double> alpha(n, 0.0);
  std::vector<double> g(n, 0.0);  // sum_m alpha_m y_m K(m, k), without the bias
  double b = 0;
  detail::Rng rng(hp.seed);

  std::size_t passes = 0;
  for (std::size_t sweep = 0; passes < hp.max_passes && sweep < kMaxSweeps; ++sweep) {
    std::size_t changed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ei = g[i] + b - yy[i];
      const bool violates = (yy[i] * ei < -hp.svm_tol && alpha[i] < c) || (yy[i] * ei > hp.svm_tol && alpha[i] > 0);
      if (!violates || n < 2) continue;

      std::size_t j = static_cast<std::size_t>(rng.below(n - 1));
      if (j >= i) ++j;
      const double ej = g[j] + b - yy[j];
      const double ai_old = alpha[i];
      const double aj_old = alpha[j];
      double lo = 0;
      double hi = 0;
      if (yy[i] != yy[j]) {
        lo = std::max(0.0, aj_old - ai_old);
        hi = std::min(c, c + aj_old - ai_old);
      } else {
        lo = std::max(0.0, ai_old + aj_old - c);
        hi = std::min(c, ai_old + aj_old);
      }
      if (lo == hi) continue;
      const double kij = kernel(i, j);
      const double eta = 2.0 * kij - 2.0;  // K(i,i) = K(j,j) = 1 for RBF
      if (eta >= 0) continue;

      double aj = aj_old - yy[j] * (ei - ej) / eta;
      aj = std::clamp(aj, lo, hi);
      if (std::abs(aj - aj_old) < 1e-5) continue;
      const double ai = ai_old + yy[i] * yy[j] * (aj_old - aj);
      alpha[i] = ai;
      alpha[j] = aj;

      const double di = yy[i] * (ai - ai_old);
      const double dj = yy[j] * (aj - aj_old);
      const double b1 = b - ei - di - dj * kij;
      const double b2 = b - ej - di * kij - dj;
      if (ai > 0 && ai < c) b = b1;
      else if (aj > 0 && aj < c) b = b2;
      else b = 0.5 * (b1 + b2);

      for (std::size_t k = 0; k < n; ++k) g[k] += di * kernel(i, k) + dj * kernel(j, k);
      ++changed;
    }
    passes = changed == 0 ? passes + 1 : 0;
  }

  KernelSvmParams p;
  p.gamma = gamma;
  p.bias = b;
  for (std::size_t i = 0; i < n; ++i) {
    if (alpha[i] > kSupportThreshold) {
      p.coef.push_back(alpha[i] * yy[i]);
      const auto row = ts.row(i);
      p.support_vectors.emplace_back(row.begin(), row.end());
    }
  }
  return make_model(ts, hp, ClassifierKind::KernelSvm, std::move(p));
}

namespace {

double kernel_svm_score(const KernelSvmParams& p, std::span<const double> x) {
  double s = p.bias;
  for (std::size_t i = 0; i < p.coef.size(); ++i) {
    s += p.coef[i] * rbf(p.support_vectors[i], x, p.gamma);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

TrainedModel fit(std::span<const FeatureVector> x, std::span<const Label> y, const Hyperparams& hp) {
  switch (hp.kind) {
    case ClassifierKind::KernelSvm: return fit_kernel_svm(x, y, hp);
    case ClassifierKind::LinearSvm: return fit_linear_svm(x, y, hp);
    case ClassifierKind::MultinomialNB: return fit_multinomial_nb(x, y, hp);
    case ClassifierKind::LogisticRegression: return fit_logistic_regression(x, y, hp);
    case ClassifierKind::GaussianNB: return fit_gaussian_nb(x, y, hp);
  }
  throw Error(ErrorCode::BadParams, "unknown classifier kind");
}

Prediction predict(const TrainedModel& model, const FeatureVector& x) {
  if (!model.schema || x.schema().fingerprint() != model.schema->fingerprint()) {
    throw Error(ErrorCode::SchemaMismatch, "feature schema " + x.schema().fingerprint() +
                                               " does not match model schema " +
                                               (model.schema ? model.schema->fingerprint() : "<none>"));
  }
  const std::span<const double> v = x.values();
  const double score = std::visit(
      [&](const auto& p) -> double {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GaussianNbParams>) return gaussian_nb_score(p, v);
        else if constexpr (std::is_same_v<P, MultinomialNbParams>) return multinomial_nb_score(p, v);
        else if constexpr (std::is_same_v<P, LinearParams>) return linear_score(p, v);
        else return kernel_svm_score(p, v);
      },
      model.params);
  return Prediction{score > 0 ? 1 : 0, score};
}

}  // namespace qid

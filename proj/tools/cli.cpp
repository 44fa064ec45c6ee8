#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qid/classifiers.hpp"
#include "qid/dataset.hpp"
#include "qid/error.hpp"
#include "qid/eval.hpp"
#include "qid/features.hpp"
#include "qid/lexicon.hpp"
#include "qid/synthetic.hpp"
#include "report.hpp"

namespace qid::cli {

namespace {

struct RunConfig {
  std::string data_path;
  std::string lexicon_path;
  std::string model_path;
  std::string classifier = "logreg";
  std::string features;  // empty: "all" for training, inferred from the model otherwise
  std::uint64_t seed = 42;
  bool holdout = false;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> params;  // key=value overrides
  std::size_t n = 1000;
  std::string text;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaMismatch: return kSchemaError;
    case ErrorCode::EmptyDataset:
    case ErrorCode::SingleClass:
    case ErrorCode::NegativeFeature:
    case ErrorCode::TooLarge:
    case ErrorCode::DimensionMismatch: return kTrainingError;
    default: return kConfigError;
  }
}

OutputFormat output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  return OutputFormat::Text;
}

FeatureMode feature_mode(const std::string& name) {
  return name == "baseline" ? FeatureMode::BaselineOnly : FeatureMode::All;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw Error(ErrorCode::BadParams, std::string(flag) + " is required (or set QID_LEXICON for --lexicon)");
  }
}

Hyperparams hyperparams_for(ClassifierKind kind, const RunConfig& cfg) {
  Hyperparams hp = Hyperparams::defaults(kind, cfg.seed);
  for (const std::string& kv : cfg.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::BadParams, "--param expects key=value, got '" + kv + "'");
    }
    hp.set(std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
  }
  hp.kind = kind;
  hp.validate();
  return hp;
}

// Feature mode a model expects; --features, when given, must agree with it.
FeatureMode resolve_mode(const TrainedModel& model, const RunConfig& cfg) {
  const std::string& fp = model.schema->fingerprint();
  if (!cfg.features.empty()) {
    const FeatureMode mode = feature_mode(cfg.features);
    if (FeatureSchema::for_mode(mode)->fingerprint() != fp) {
      throw Error(ErrorCode::SchemaMismatch, "model schema " + fp + " was not built from --features " + cfg.features);
    }
    return mode;
  }
  if (fp == FeatureSchema::full()->fingerprint()) return FeatureMode::All;
  if (fp == FeatureSchema::baseline()->fingerprint()) return FeatureMode::BaselineOnly;
  throw Error(ErrorCode::SchemaMismatch, "model schema " + fp + " matches no known feature set");
}

int cmd_train(const RunConfig& cfg, std::ostream& out) {
  require(cfg.data_path, "--data");
  require(cfg.lexicon_path, "--lexicon");
  require(cfg.model_path, "--model");
  const auto kind = parse_classifier_kind(cfg.classifier);
  const FeatureMode mode = feature_mode(cfg.features.empty() ? "all" : cfg.features);
  const Hyperparams hp = hyperparams_for(*kind, cfg);
  const Dataset dataset = load_dataset(cfg.data_path);
  const SentimentLexicon lexicon = load_lexicon(cfg.lexicon_path);

  std::vector<std::size_t> train_rows;
  std::optional<Split> split;
  if (cfg.holdout) {
    split = split_dataset(dataset, cfg.seed);
    train_rows = split->train;
  } else {
    for (std::size_t i = 0; i < dataset.size(); ++i) train_rows.push_back(i);
  }
  std::vector<FeatureVector> x;
  std::vector<Label> y;
  for (const std::size_t i : train_rows) {
    x.push_back(extract_features(dataset[i].text, lexicon, mode));
    y.push_back(dataset[i].label);
  }
  const TrainedModel model = fit(x, y, hp);
  save_model(model, cfg.model_path);

  std::vector<Label> predicted;
  for (const auto& v : x) predicted.push_back(predict(model, v).label);
  const EvalReport train_report = compute_metrics(predicted, y);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < y.size(); ++i) correct += predicted[i] == y[i] ? 1 : 0;

  out << "model            " << cfg.model_path << '\n'
      << "classifier       " << to_string(model.kind) << '\n'
      << "features         " << to_string(mode) << " (" << model.schema->size() << ")\n"
      << "schema           " << model.schema->fingerprint() << '\n'
      << "trained on       " << model.training_size << " examples\n"
      << "train accuracy   " << static_cast<double>(correct) / static_cast<double>(y.size()) << '\n'
      << "train f1         " << train_report.f1 << '\n';
  if (split) {
    std::vector<Label> held_pred;
    std::vector<Label> held_gold;
    for (const std::size_t i : split->test) {
      held_pred.push_back(predict(model, extract_features(dataset[i].text, lexicon, mode)).label);
      held_gold.push_back(dataset[i].label);
    }
    if (!held_gold.empty()) {
      out << "holdout (" << held_gold.size() << " examples)\n";
      print_report(compute_metrics(held_pred, held_gold), OutputFormat::Text, out);
    }
  }
  return kOk;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  require(cfg.model_path, "--model");
  require(cfg.data_path, "--data");
  require(cfg.lexicon_path, "--lexicon");
  const TrainedModel model = load_model(cfg.model_path);
  const FeatureMode mode = resolve_mode(model, cfg);
  const Dataset dataset = load_dataset(cfg.data_path);
  const SentimentLexicon lexicon = load_lexicon(cfg.lexicon_path);
  std::vector<Label> predicted;
  std::vector<Label> gold;
  for (const LabeledExample& ex : dataset) {
    predicted.push_back(predict(model, extract_features(ex.text, lexicon, mode)).label);
    gold.push_back(ex.label);
  }
  print_report(compute_metrics(predicted, gold), output_format(cfg.format), out);
  return kOk;
}

int cmd_ablate(const RunConfig& cfg, std::ostream& out) {
  require(cfg.data_path, "--data");
  require(cfg.lexicon_path, "--lexicon");
  HyperparamsByKind hps;
  for (const ClassifierKind kind : kAllClassifierKinds) hps.emplace(kind, hyperparams_for(kind, cfg));
  const Dataset dataset = load_dataset(cfg.data_path);
  const SentimentLexicon lexicon = load_lexicon(cfg.lexicon_path);
  const AblationTable table = run_ablation(dataset, lexicon, cfg.seed, hps);
  print_ablation(table, output_format(cfg.format), out);
  for (const AblationRow& row : table.rows) {
    if (row.before.ok() || row.after.ok()) return kOk;
  }
  return kTrainingError;
}

int cmd_classify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  require(cfg.model_path, "--model");
  require(cfg.lexicon_path, "--lexicon");
  const TrainedModel model = load_model(cfg.model_path);
  const FeatureMode mode = resolve_mode(model, cfg);
  const SentimentLexicon lexicon = load_lexicon(cfg.lexicon_path);
  const OutputFormat format = output_format(cfg.format);

  if (format == OutputFormat::Csv) out << "label,score\n";
  auto emit = [&](const std::string& line) {
    const Prediction p = predict(model, extract_features(line, lexicon, mode));
    switch (format) {
      case OutputFormat::Json: out << nlohmann::json{{"label", p.label}, {"score", p.score}}.dump() << '\n'; break;
      case OutputFormat::Csv: out << p.label << ',' << p.score << '\n'; break;
      case OutputFormat::Text: out << p.label << '\t' << p.score << '\n'; break;
    }
  };
  if (!cfg.text.empty()) {
    emit(cfg.text);
    return kOk;
  }
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    emit(line);
  }
  return kOk;
}

int cmd_synth(const RunConfig& cfg, std::ostream& out) {
  require(cfg.lexicon_path, "--lexicon");
  if (cfg.n < 10) {
    throw Error(ErrorCode::BadParams, "-n must be at least 10");
  }
  const SentimentLexicon lexicon = load_lexicon(cfg.lexicon_path);
  const Dataset dataset = generate_synthetic(cfg.n, cfg.seed, lexicon);
  if (cfg.out_path.empty()) {
    write_jsonl(dataset, out);
    return kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::IoError, "cannot write " + cfg.out_path);
  }
  write_jsonl(dataset, file);
  if (!file) {
    throw Error(ErrorCode::IoError, "error while writing " + cfg.out_path);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Question identification for Arabic social-media text", "qid"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"svm", "linsvm", "nb", "logreg", "gnb"};
  auto add_lexicon = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", cfg.lexicon_path, "Sentiment lexicon directory")->envname("QID_LEXICON");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_features = [&](CLI::App* cmd) {
    cmd->add_option("--features", cfg.features, "Feature set")->check(CLI::IsMember({"baseline", "all"}));
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--param", cfg.params, "Hyperparameter override key=value (repeatable)");
  };

  CLI::App* train = app.add_subcommand("train", "Train one classifier and write a model file");
  train->add_option("--data", cfg.data_path, "Dataset (JSONL or CSV)");
  add_lexicon(train);
  train->add_option("--model", cfg.model_path, "Output model file");
  train->add_option("--classifier", cfg.classifier, "svm | linsvm | nb | logreg | gnb")->check(CLI::IsMember(kinds));
  add_features(train);
  train->add_option("--seed", cfg.seed, "Random seed");
  train->add_flag("--holdout", cfg.holdout, "Train on a stratified 80% and report the other 20%");
  add_params(train);

  CLI::App* eval = app.add_subcommand("eval", "Score a model on a labeled dataset");
  eval->add_option("--model", cfg.model_path, "Model file");
  eval->add_option("--data", cfg.data_path, "Dataset (JSONL or CSV)");
  add_lexicon(eval);
  add_features(eval);
  add_format(eval);

  CLI::App* ablate = app.add_subcommand("ablate", "Before/after table for all five classifiers");
  ablate->add_option("--data", cfg.data_path, "Dataset (JSONL or CSV)");
  add_lexicon(ablate);
  ablate->add_option("--seed", cfg.seed, "Split and training seed");
  add_format(ablate);
  add_params(ablate);

  CLI::App* classify = app.add_subcommand("classify", "Label text given as an argument or one per stdin line");
  classify->add_option("--model", cfg.model_path, "Model file");
  add_lexicon(classify);
  add_features(classify);
  add_format(classify);
  classify->add_option("text", cfg.text, "Text to classify (reads stdin when omitted)");

  CLI::App* synth = app.add_subcommand("synth", "Write a synthetic labeled corpus as JSONL");
  synth->add_option("-n,--n", cfg.n, "Number of examples (>= 10)");
  synth->add_option("--seed", cfg.seed, "Random seed");
  add_lexicon(synth);
  synth->add_option("--out", cfg.out_path, "Output file (stdout when omitted)");

  std::vector<const char*> argv{"qid"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*train) return cmd_train(cfg, out);
    if (*eval) return cmd_eval(cfg, out);
    if (*ablate) return cmd_ablate(cfg, out);
    if (*classify) return cmd_classify(cfg, in, out);
    if (*synth) return cmd_synth(cfg, out);
  } catch (const Error& e) {
    err << "qid: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "qid: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace qid::cli

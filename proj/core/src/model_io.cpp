#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hash.hpp"
#include "qid/classifiers.hpp"
#include "qid/error.hpp"

namespace qid {

using nlohmann::json;

namespace {

json hyperparams_to_json(const Hyperparams& hp) {
  return json{{"kind", std::string(to_string(hp.kind))},
              {"seed", hp.seed},
              {"lr", hp.learning_rate},
              {"l2", hp.l2},
              {"max_iters", hp.max_iters},
              {"tol", hp.tol},
              {"lambda", hp.lambda},
              {"epochs", hp.epochs},
              {"C", hp.c},
              {"svm_tol", hp.svm_tol},
              {"max_passes", hp.max_passes},
              {"gamma", hp.gamma},
              {"alpha", hp.alpha},
              {"var_smoothing", hp.var_smoothing}};
}

ClassifierKind kind_from_json(const json& j) {
  const auto kind = parse_classifier_kind(j.get<std::string>());
  if (!kind) {
    throw Error(ErrorCode::CorruptModel, "unknown classifier kind " + j.dump());
  }
  return *kind;
}

Hyperparams hyperparams_from_json(const json& j) {
  Hyperparams hp;
  hp.kind = kind_from_json(j.at("kind"));
  hp.seed = j.at("seed").get<std::uint64_t>();
  hp.learning_rate = j.at("lr").get<double>();
  hp.l2 = j.at("l2").get<double>();
  hp.max_iters = j.at("max_iters").get<std::size_t>();
  hp.tol = j.at("tol").get<double>();
  hp.lambda = j.at("lambda").get<double>();
  hp.epochs = j.at("epochs").get<std::size_t>();
  hp.c = j.at("C").get<double>();
  hp.svm_tol = j.at("svm_tol").get<double>();
  hp.max_passes = j.at("max_passes").get<std::size_t>();
  hp.gamma = j.at("gamma").get<double>();
  hp.alpha = j.at("alpha").get<double>();
  hp.var_smoothing = j.at("var_smoothing").get<double>();
  return hp;
}

json params_to_json(const ModelParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, GaussianNbParams>) {
          return json{{"prior", p.prior}, {"mean", p.mean}, {"var", p.var}, {"epsilon", p.epsilon}};
        } else if constexpr (std::is_same_v<P, MultinomialNbParams>) {
          return json{{"prior", p.prior}, {"log_likelihood", p.log_likelihood}};
        } else if constexpr (std::is_same_v<P, LinearParams>) {
          return json{{"mean", p.scaler.mean},
                      {"stddev", p.scaler.stddev},
                      {"weights", p.weights},
                      {"bias", p.bias},
                      {"iterations", p.iterations}};
        } else {
          return json{{"gamma", p.gamma}, {"bias", p.bias}, {"coef", p.coef}, {"support_vectors", p.support_vectors}};
        }
      },
      params);
}

void expect_size(std::size_t actual, std::size_t expected, const char* what) {
  if (actual != expected) {
    throw Error(ErrorCode::CorruptModel, std::string(what) + " has " + std::to_string(actual) +
                                             " entries, expected " + std::to_string(expected));
  }
}

ModelParams params_from_json(ClassifierKind kind, const json& j, std::size_t d) {
  switch (kind) {
    case ClassifierKind::GaussianNB: {
      GaussianNbParams p;
      p.prior = j.at("prior").get<std::array<double, 2>>();
      p.mean = j.at("mean").get<std::array<std::vector<double>, 2>>();
      p.var = j.at("var").get<std::array<std::vector<double>, 2>>();
      p.epsilon = j.at("epsilon").get<double>();
      for (std::size_t c = 0; c < 2; ++c) {
        expect_size(p.mean[c].size(), d, "mean");
        expect_size(p.var[c].size(), d, "var");
      }
      return p;
    }
    case ClassifierKind::MultinomialNB: {
      MultinomialNbParams p;
      p.prior = j.at("prior").get<std::array<double, 2>>();
      p.log_likelihood = j.at("log_likelihood").get<std::array<std::vector<double>, 2>>();
      for (std::size_t c = 0; c < 2; ++c) expect_size(p.log_likelihood[c].size(), d, "log_likelihood");
      return p;
    }
    case ClassifierKind::LogisticRegression:
    case ClassifierKind::LinearSvm: {
      LinearParams p;
      p.scaler.mean = j.at("mean").get<std::vector<double>>();
      p.scaler.stddev = j.at("stddev").get<std::vector<double>>();
      p.weights = j.at("weights").get<std::vector<double>>();
      p.bias = j.at("bias").get<double>();
      p.iterations = j.at("iterations").get<std::size_t>();
      expect_size(p.scaler.mean.size(), d, "mean");
      expect_size(p.scaler.stddev.size(), d, "stddev");
      expect_size(p.weights.size(), d, "weights");
      return p;
    }
    case ClassifierKind::KernelSvm: {
      KernelSvmParams p;
      p.gamma = j.at("gamma").get<double>();
      p.bias = j.at("bias").get<double>();
      p.coef = j.at("coef").get<std::vector<double>>();
      p.support_vectors = j.at("support_vectors").get<std::vector<std::vector<double>>>();
      expect_size(p.support_vectors.size(), p.coef.size(), "support_vectors");
      for (const auto& sv : p.support_vectors) expect_size(sv.size(), d, "support vector");
      return p;
    }
  }
  throw Error(ErrorCode::CorruptModel, "unknown classifier kind");
}

// Checksum over the compact dump of every field except "checksum". Object
// keys are ordered, so the dump is canonical.
std::string checksum_of(json doc) {
  doc.erase("checksum");
  return detail::hex64(detail::fnv1a64(doc.dump()));
}

}  // namespace

std::string serialize_model(const TrainedModel& model) {
  json doc;
  doc["formatVersion"] = kModelFormatVersion;
  doc["kind"] = std::string(to_string(model.kind));
  doc["schemaFingerprint"] = model.schema->fingerprint();
  doc["schemaNames"] = model.schema->names();
  doc["hyperparams"] = hyperparams_to_json(model.hyperparams);
  doc["trainingSize"] = model.training_size;
  doc["params"] = params_to_json(model.params);
  doc["checksum"] = checksum_of(doc);
  return doc.dump(2) + "\n";
}

TrainedModel deserialize_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CorruptModel, std::string("unparseable model file: ") + e.what());
  }
  try {
    if (!doc.is_object()) {
      throw Error(ErrorCode::CorruptModel, "model file is not a JSON object");
    }
    const int version = doc.at("formatVersion").get<int>();
    if (version > kModelFormatVersion || version < 1) {
      throw Error(ErrorCode::VersionMismatch, "model format version " + std::to_string(version) +
                                                  " is not supported (this build reads up to " +
                                                  std::to_string(kModelFormatVersion) + ")");
    }
    if (doc.at("checksum").get<std::string>() != checksum_of(doc)) {
      throw Error(ErrorCode::CorruptModel, "checksum mismatch");
    }
    TrainedModel model;
    model.kind = kind_from_json(doc.at("kind"));
    auto names = doc.at("schemaNames").get<std::vector<std::string>>();
    const std::size_t d = names.size();
    auto fingerprint = doc.at("schemaFingerprint").get<std::string>();
    if (fingerprint == FeatureSchema::full()->fingerprint() && names == FeatureSchema::full()->names()) {
      model.schema = FeatureSchema::full();
    } else if (fingerprint == FeatureSchema::baseline()->fingerprint() &&
               names == FeatureSchema::baseline()->names()) {
      model.schema = FeatureSchema::baseline();
    } else {
      model.schema = std::make_shared<const FeatureSchema>(FeatureSchema::restored(std::move(names), std::move(fingerprint)));
    }
    model.hyperparams = hyperparams_from_json(doc.at("hyperparams"));
    model.training_size = doc.at("trainingSize").get<std::size_t>();
    model.params = params_from_json(model.kind, doc.at("params"), d);
    return model;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CorruptModel, std::string("malformed model file: ") + e.what());
  }
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  const std::string text = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << text;
  out.close();
  if (!out) {
    throw Error(ErrorCode::IoError, "error while writing " + path.string());
  }
}

TrainedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_model(buf.str());
}

}  // namespace qid

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qid/classifiers.hpp"
#include "qid/error.hpp"

using namespace qid;
namespace fs = std::filesystem;

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

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("qid_model_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Trained {
  std::vector<TrainedModel> models;
  std::shared_ptr<const FeatureSchema> schema;
};

const Trained& trained() {
  static const Trained t = [] {
    Trained out{{}, FeatureSchema::full()};
    std::mt19937 rng(99);
    std::poisson_distribution<int> count(1.5);
    std::vector<FeatureVector> x;
    std::vector<Label> y;
    for (int i = 0; i < 80; ++i) {
      std::vector<double> v(22);
      for (double& e : v) e = count(rng);
      const Label l = i % 2;
      v[12] += 2 * l;
      x.emplace_back(out.schema, v);
      y.push_back(l);
    }
    for (const ClassifierKind k : kAllClassifierKinds) out.models.push_back(fit(x, y, Hyperparams::defaults(k, 3)));
    return out;
  }();
  return t;
}

}  // namespace

TEST(ModelIo, RoundTripPreservesPredictionsBitForBit) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0, 10);
  for (const TrainedModel& m : trained().models) {
    const fs::path path = temp_file(std::string(to_string(m.kind)) + ".json");
    save_model(m, path);
    const TrainedModel back = load_model(path);
    fs::remove(path);
    EXPECT_EQ(back.kind, m.kind);
    EXPECT_EQ(back.hyperparams, m.hyperparams);
    EXPECT_EQ(back.training_size, m.training_size);
    EXPECT_EQ(back.schema->fingerprint(), m.schema->fingerprint());
    EXPECT_EQ(serialize_model(back), serialize_model(m));
    for (int i = 0; i < 100; ++i) {
      std::vector<double> v(22);
      for (double& e : v) e = u(rng);
      const FeatureVector x(trained().schema, v);
      const Prediction a = predict(m, x), b = predict(back, x);
      ASSERT_EQ(a.label, b.label);
      ASSERT_EQ(a.score, b.score);  // exact
    }
  }
}

TEST(ModelIo, DocumentHasRequiredFields) {
  const auto doc = nlohmann::json::parse(serialize_model(trained().models.front()));
  for (const char* key :
       {"formatVersion", "kind", "schemaFingerprint", "schemaNames", "hyperparams", "params", "checksum"})
    EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["formatVersion"], kModelFormatVersion);
  EXPECT_EQ(doc["schemaNames"].size(), 22u);
}

TEST(ModelIo, TruncatedFileIsCorrupt) {
  const std::string text = serialize_model(trained().models[2]);
  for (const std::size_t keep : {std::size_t{0}, std::size_t{1}, text.size() / 2, text.size() - 3}) {
    EXPECT_EQ(code_of([&] { deserialize_model(text.substr(0, keep)); }), ErrorCode::CorruptModel) << keep;
  }
}

TEST(ModelIo, TamperedParamsFailTheChecksum) {
  auto doc = nlohmann::json::parse(serialize_model(trained().models[4]));
  doc["trainingSize"] = 81;
  EXPECT_EQ(code_of([&] { deserialize_model(doc.dump()); }), ErrorCode::CorruptModel);
}

TEST(ModelIo, NewerFormatVersionIsRejected) {
  auto doc = nlohmann::json::parse(serialize_model(trained().models[3]));
  doc["formatVersion"] = kModelFormatVersion + 1;
  EXPECT_EQ(code_of([&] { deserialize_model(doc.dump()); }), ErrorCode::VersionMismatch);
}

TEST(ModelIo, MissingFileIsIoError) {
  EXPECT_EQ(code_of([] { load_model("/nonexistent/qid/model.json"); }), ErrorCode::IoError);
}

TEST(ModelIo, CustomSchemaSurvivesRoundTrip) {
  const auto schema = FeatureSchema::custom({"a", "b"});
  const auto x = oracle::rows_of(schema, {{0, 1}, {1, 0}, {0, 2}});
  const std::vector<Label> y = {0, 1, 0};
  const TrainedModel m = fit(x, y, Hyperparams::defaults(ClassifierKind::LogisticRegression));
  const TrainedModel back = deserialize_model(serialize_model(m));
  EXPECT_EQ(back.schema->names(), schema->names());
  EXPECT_EQ(back.schema->fingerprint(), schema->fingerprint());
  EXPECT_EQ(predict(back, x[1]).score, predict(m, x[1]).score);
}

TEST(ModelIo, SavedFileIsStable) {
  const fs::path a = temp_file("a.json"), b = temp_file("b.json");
  save_model(trained().models[0], a);
  save_model(load_model(a), b);
  EXPECT_EQ(slurp(a), slurp(b));
  fs::remove(a);
  fs::remove(b);
}

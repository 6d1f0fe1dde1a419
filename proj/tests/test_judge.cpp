#include "patentscore/judge.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "patentscore/errors.hpp"

using namespace patentscore;
using namespace patentscore::judge;

namespace {

const char* kTemplateDir = PATENTSCORE_TEMPLATE_DIR;

ClaimText sample_claim() {
  return make_claim_text("P1", "A device comprising: a memory; and a processor.",
                         Provenance::generated);
}

JudgeConfig test_config() {
  JudgeConfig config;
  config.model_name = "test-model";
  config.temperature = 0.7;
  config.samples_per_metric = 10;
  config.quorum = 8;
  config.parallelism = 2;
  return config;
}

const PromptLibrary& library() {
  static PromptLibrary lib = PromptLibrary::load(kTemplateDir);
  return lib;
}

TEST(ParseScore, IntegerAndDecimal) {
  EXPECT_DOUBLE_EQ(parse_score("...analysis... Score: 4"), 4.0);
  EXPECT_DOUBLE_EQ(parse_score("Score: 3.5 - partial compliance"), 3.5);
  EXPECT_DOUBLE_EQ(parse_score("score=2"), 2.0);
  EXPECT_DOUBLE_EQ(parse_score("SCORE:\n5"), 5.0);
}

TEST(ParseScore, LastMarkerWins) {
  EXPECT_DOUBLE_EQ(parse_score("A preliminary score of 2 was revised. Score: 3.5"), 3.5);
  EXPECT_DOUBLE_EQ(parse_score("The scoring rubric has 5 bands. My score: 2"), 2.0);
}

TEST(ParseScore, Errors) {
  EXPECT_THROW(parse_score("the claim is excellent"), NoScoreFound);
  EXPECT_THROW(parse_score("Score: none"), NoScoreFound);
  try {
    parse_score("Score: 7");
    FAIL() << "expected ParsedScoreOutOfRange";
  } catch (const ParsedScoreOutOfRange& e) {
    EXPECT_DOUBLE_EQ(e.value(), 7.0);
  }
  EXPECT_THROW(parse_score("Score: 0.5"), ParsedScoreOutOfRange);
}

TEST(EvaluateMetric, ConstantProviderGivesConstantMean) {
  ScriptedProvider provider = ScriptedProvider::constant("Score: 4");
  MetricEvaluation evaluation =
      evaluate_metric(sample_claim(), MetricId::CS, test_config(), provider, library());
  EXPECT_EQ(evaluation.samples.size(), 10u);
  EXPECT_DOUBLE_EQ(evaluation.mean, 4.0);
  EXPECT_EQ(evaluation.raw_responses.size(), 10u);
  EXPECT_FALSE(evaluation.request_hash.empty());
}

TEST(EvaluateMetric, AlternatingProviderGivesMeanOfSamples) {
  ScriptedProvider provider({"Score: 3", "Score: 4"});
  MetricEvaluation evaluation =
      evaluate_metric(sample_claim(), MetricId::AB, test_config(), provider, library());
  EXPECT_EQ(evaluation.samples.size(), 10u);
  EXPECT_DOUBLE_EQ(evaluation.mean, 3.5);
}

TEST(EvaluateMetric, MeanEqualsMeanOfSamples) {
  ScriptedProvider provider({"Score: 1", "Score: 2", "Score: 5"});
  MetricEvaluation evaluation =
      evaluate_metric(sample_claim(), MetricId::ER, test_config(), provider, library());
  double sum = 0.0;
  for (double s : evaluation.samples) sum += s;
  EXPECT_NEAR(evaluation.mean, sum / static_cast<double>(evaluation.samples.size()),
              1e-9);
}

TEST(EvaluateMetric, QuorumFailure) {
  // 5 of 10 samples unparseable -> below the 8-of-10 quorum
  ScriptedProvider provider({"Score: 4", "no score here"});
  try {
    evaluate_metric(sample_claim(), MetricId::CP, test_config(), provider, library());
    FAIL() << "expected PartialFailure";
  } catch (const PartialFailure& e) {
    EXPECT_EQ(e.metric(), MetricId::CP);
    EXPECT_EQ(e.parsed(), 5u);
  }
}

TEST(EvaluateMetric, ToleratesFailuresAboveQuorum) {
  // sample_index 7 of 10 fails to parse; 9 parsed >= quorum 8
  ScriptedProvider provider({"Score: 4", "Score: 4", "Score: 4", "Score: 4", "Score: 4",
                             "Score: 4", "Score: 4", "garbage", "Score: 4", "Score: 4"});
  MetricEvaluation evaluation =
      evaluate_metric(sample_claim(), MetricId::VU, test_config(), provider, library());
  EXPECT_EQ(evaluation.samples.size(), 9u);
  EXPECT_EQ(evaluation.raw_responses.size(), 10u);
  EXPECT_DOUBLE_EQ(evaluation.mean, 4.0);
}

TEST(EvaluateMetric, BsIsRejected) {
  ScriptedProvider provider = ScriptedProvider::constant("Score: 4");
  EXPECT_THROW(
      evaluate_metric(sample_claim(), MetricId::BS, test_config(), provider, library()),
      DomainError);
}

TEST(EvaluationKey, SensitiveToEveryField) {
  std::string base = evaluation_key(MetricId::CS, "body", "model", 0.7, "v1");
  EXPECT_NE(base, evaluation_key(MetricId::CP, "body", "model", 0.7, "v1"));
  EXPECT_NE(base, evaluation_key(MetricId::CS, "other body", "model", 0.7, "v1"));
  EXPECT_NE(base, evaluation_key(MetricId::CS, "body", "model-2", 0.7, "v1"));
  EXPECT_NE(base, evaluation_key(MetricId::CS, "body", "model", 0.71, "v1"));
  EXPECT_NE(base, evaluation_key(MetricId::CS, "body", "model", 0.7, "v2"));
  EXPECT_EQ(base, evaluation_key(MetricId::CS, "body", "model", 0.7, "v1"));
}

TEST(EvaluationCache, HitSkipsProviderCalls) {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "ps_cache_test_hit";
  std::filesystem::remove_all(dir);
  EvaluationCache cache(dir);

  ScriptedProvider provider = ScriptedProvider::constant("Score: 4");
  MetricEvaluation first = evaluate_metric(sample_claim(), MetricId::CS, test_config(),
                                           provider, library(), &cache);

  // A provider that would fail loudly if consulted again.
  struct Exploding : ChatProvider {
    std::string complete(const ChatRequest&) override {
      throw ProviderUnavailable("must not be called");
    }
    std::string id() const override { return "exploding"; }
  } exploding;

  MetricEvaluation second = evaluate_metric(sample_claim(), MetricId::CS, test_config(),
                                            exploding, library(), &cache);
  EXPECT_EQ(second.samples, first.samples);
  EXPECT_EQ(second.mean, first.mean);
  EXPECT_EQ(second.request_hash, first.request_hash);

  // A fresh cache instance reads the persisted record.
  EvaluationCache reopened(dir);
  MetricEvaluation third = evaluate_metric(sample_claim(), MetricId::CS, test_config(),
                                           exploding, library(), &reopened);
  EXPECT_EQ(third.mean, first.mean);
  std::filesystem::remove_all(dir);
}

TEST(EvaluationCache, KeyFieldChangeMisses) {
  EvaluationCache cache;  // memory-only
  ScriptedProvider provider({"Score: 3", "Score: 4"});
  JudgeConfig config = test_config();
  MetricEvaluation a = evaluate_metric(sample_claim(), MetricId::CS, config, provider,
                                       library(), &cache);
  config.temperature = 0.9;
  ScriptedProvider other = ScriptedProvider::constant("Score: 5");
  MetricEvaluation b = evaluate_metric(sample_claim(), MetricId::CS, config, other,
                                       library(), &cache);
  EXPECT_NE(a.mean, b.mean);  // second call missed the cache and re-sampled
}

TEST(EvaluateAll, AllSixMetricsPresent) {
  ScriptedProvider provider = ScriptedProvider::constant("Score: 4");
  auto evaluations =
      evaluate_all(sample_claim(), test_config(), provider, library());
  ASSERT_EQ(evaluations.size(), 6u);
  for (MetricId id : kJudgeMetrics) {
    ASSERT_TRUE(evaluations.contains(id));
    EXPECT_DOUBLE_EQ(evaluations.at(id).mean, 4.0);
  }
  EXPECT_FALSE(evaluations.contains(MetricId::BS));
}

TEST(EvaluateAll, IndependentOfParallelism) {
  ScriptedProvider provider({"Score: 2", "Score: 3", "Score: 4", "Score: 5"});
  provider.set_purpose_responses("AS", {"Score: 1", "Score: 5"});

  JudgeConfig serial = test_config();
  serial.parallelism = 1;
  JudgeConfig wide = test_config();
  wide.parallelism = 6;

  auto a = evaluate_all(sample_claim(), serial, provider, library());
  auto b = evaluate_all(sample_claim(), wide, provider, library());
  ASSERT_EQ(a.size(), b.size());
  for (MetricId id : kJudgeMetrics) {
    EXPECT_EQ(a.at(id).samples, b.at(id).samples) << to_string(id);
    EXPECT_DOUBLE_EQ(a.at(id).mean, b.at(id).mean);
  }
}

TEST(EvaluateAll, ProviderDownCarriesFailedMetrics) {
  struct Down : ChatProvider {
    std::string complete(const ChatRequest&) override {
      throw ProviderUnavailable("connection refused");
    }
    std::string id() const override { return "down"; }
  } down;
  try {
    evaluate_all(sample_claim(), test_config(), down, library());
    FAIL() << "expected ProviderUnavailable";
  } catch (const ProviderUnavailable& e) {
    EXPECT_EQ(e.failed_metrics().size(), 6u);
  }
}

TEST(GenerateClaim, StubPassthrough) {
  const std::string fixture_claim =
      "A method for testing, comprising: running a test; and checking a result.";
  ScriptedProvider provider = ScriptedProvider::constant(fixture_claim);
  ClaimText claim = generate_claim("A title", "An abstract", "A description",
                                   test_config(), provider, library());
  EXPECT_EQ(claim.body, fixture_claim);
  EXPECT_EQ(claim.provenance, Provenance::generated);
}

TEST(GenerateClaim, EmptyTitleRejected) {
  ScriptedProvider provider = ScriptedProvider::constant("x");
  EXPECT_THROW(generate_claim("", "abstract", "description", test_config(), provider,
                              library()),
               UsageError);
}

}  // namespace

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "patentscore/claim.hpp"
#include "patentscore/metric.hpp"
#include "patentscore/prompt.hpp"
#include "patentscore/provider.hpp"

namespace patentscore::judge {

struct JudgeConfig {
  std::string provider_base_url;
  std::string model_name;
  double temperature = 0.7;
  int samples_per_metric = 10;
  int max_retries = 2;
  int parallelism = 4;
  std::string credential_env_var = "PATENTSCORE_API_KEY";
  /// Minimum parsed samples before the evaluation counts; below it the
  /// evaluation fails with PartialFailure.
  int quorum = 8;
  /// When set, request i carries seed_base + i.
  std::optional<std::uint64_t> seed_base;
};

/// The repeated samples for one metric and their mean. `samples` holds every
/// sample that parsed; its length equals samples_per_metric unless some
/// responses failed to parse while the quorum still held.
struct MetricEvaluation {
  MetricId metric = MetricId::CS;
  std::vector<double> samples;
  double mean = 0.0;
  std::vector<std::string> raw_responses;
  std::string request_hash;
};

/// Extracts the numeric token after the last case-insensitive "score" marker.
/// Accepts integers and decimals. Throws NoScoreFound, ParsedScoreOutOfRange.
double parse_score(std::string_view response);

/// Canonical cache key over everything that defines an evaluation.
std::string evaluation_key(MetricId metric, const std::string& claim_body,
                           const std::string& model, double temperature,
                           const std::string& template_version);

/// FNV-1a 64-bit hex digest of the canonical key.
std::string evaluation_hash(const std::string& key);

/// Content-addressed store of MetricEvaluation records, one JSON file per
/// hash. Safe for concurrent readers and writers; identical keys overwrite
/// with identical content. A default-constructed cache is memory-only.
class EvaluationCache {
 public:
  EvaluationCache() = default;
  explicit EvaluationCache(std::filesystem::path dir);

  std::optional<MetricEvaluation> lookup(const std::string& key) const;
  void store(const std::string& key, const MetricEvaluation& evaluation);

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, MetricEvaluation> memory_;
};

/// Samples the provider samples_per_metric times for one metric and returns
/// the parsed scores and their mean. Served from `cache` when a record with
/// the same key exists. Throws PartialFailure below the quorum and
/// ProviderUnavailable when the provider keeps failing.
MetricEvaluation evaluate_metric(const ClaimText& claim, MetricId metric,
                                 const JudgeConfig& config, ChatProvider& provider,
                                 const PromptLibrary& library,
                                 EvaluationCache* cache = nullptr);

/// Evaluates the six judge metrics, up to config.parallelism at a time. The
/// result map does not depend on the parallelism setting. On failure throws
/// ProviderUnavailable carrying the metrics that failed.
std::map<MetricId, MetricEvaluation> evaluate_all(const ClaimText& claim,
                                                  const JudgeConfig& config,
                                                  ChatProvider& provider,
                                                  const PromptLibrary& library,
                                                  EvaluationCache* cache = nullptr);

/// Renders the drafting prompt for (title, abstract, description) and returns
/// the completion as a generated claim. Throws UsageError on an empty title.
ClaimText generate_claim(const std::string& title, const std::string& abstract,
                         const std::string& description, const JudgeConfig& config,
                         ChatProvider& provider, const PromptLibrary& library,
                         const std::string& patent_id = "generated");

}  // namespace patentscore::judge

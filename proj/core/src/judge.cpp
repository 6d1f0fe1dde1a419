#include "patentscore/judge.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "patentscore/errors.hpp"

namespace patentscore::judge {

namespace {

using nlohmann::json;

std::optional<double> leading_number(std::string_view text, std::size_t& length) {
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
    ++digits;
  if (digits == 0) return std::nullopt;
  std::size_t end = digits;
  if (end + 1 < text.size() && text[end] == '.' &&
      std::isdigit(static_cast<unsigned char>(text[end + 1]))) {
    ++end;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
  }
  double value = 0.0;
  auto result = std::from_chars(text.data(), text.data() + end, value);
  if (result.ec != std::errc{}) return std::nullopt;
  length = end;
  return value;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

json evaluation_to_json(const std::string& key, const MetricEvaluation& evaluation) {
  return json{{"key", key},
              {"metric", to_string(evaluation.metric)},
              {"samples", evaluation.samples},
              {"mean", evaluation.mean},
              {"raw_responses", evaluation.raw_responses},
              {"request_hash", evaluation.request_hash}};
}

std::optional<MetricEvaluation> evaluation_from_json(const json& record,
                                                     const std::string& expected_key) {
  if (!record.is_object() || record.value("key", "") != expected_key)
    return std::nullopt;
  auto metric = parse_metric(record.value("metric", ""));
  if (!metric) return std::nullopt;
  MetricEvaluation evaluation;
  evaluation.metric = *metric;
  evaluation.samples = record.value("samples", std::vector<double>{});
  evaluation.mean = record.value("mean", 0.0);
  evaluation.raw_responses = record.value("raw_responses", std::vector<std::string>{});
  evaluation.request_hash = record.value("request_hash", "");
  return evaluation;
}

}  // namespace

double parse_score(std::string_view response) {
  // Last case-insensitive "score" marker.
  std::optional<std::size_t> marker;
  for (std::size_t i = 0; i + 5 <= response.size(); ++i) {
    if ((response[i] == 's' || response[i] == 'S') &&
        (response[i + 1] == 'c' || response[i + 1] == 'C') &&
        (response[i + 2] == 'o' || response[i + 2] == 'O') &&
        (response[i + 3] == 'r' || response[i + 3] == 'R') &&
        (response[i + 4] == 'e' || response[i + 4] == 'E')) {
      marker = i + 5;
    }
  }
  if (!marker) throw NoScoreFound();

  for (std::size_t i = *marker; i < response.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(response[i]))) continue;
    std::size_t length = 0;
    auto value = leading_number(response.substr(i), length);
    if (!value) break;
    if (*value < 1.0 || *value > 5.0) throw ParsedScoreOutOfRange(*value);
    return *value;
  }
  throw NoScoreFound();
}

std::string evaluation_key(MetricId metric, const std::string& claim_body,
                           const std::string& model, double temperature,
                           const std::string& template_version) {
  std::ostringstream key;
  key << "metric=" << to_string(metric) << '\n'
      << "model=" << model << '\n'
      << "temperature=" << std::setprecision(17) << temperature << '\n'
      << "templates=" << template_version << '\n'
      << "claim=" << claim_body;
  return key.str();
}

std::string evaluation_hash(const std::string& key) { return fnv1a_hex(key); }

EvaluationCache::EvaluationCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::optional<MetricEvaluation> EvaluationCache::lookup(const std::string& key) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memory_.find(key);
    if (it != memory_.end()) return it->second;
  }
  if (dir_.empty()) return std::nullopt;
  std::filesystem::path file = dir_ / (evaluation_hash(key) + ".json");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json record = json::parse(in, nullptr, false);
  if (record.is_discarded()) return std::nullopt;
  auto evaluation = evaluation_from_json(record, key);
  if (evaluation) {
    std::lock_guard<std::mutex> lock(mutex_);
    memory_.emplace(key, *evaluation);
  }
  return evaluation;
}

void EvaluationCache::store(const std::string& key, const MetricEvaluation& evaluation) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    memory_[key] = evaluation;
  }
  if (dir_.empty()) return;
  std::string hash = evaluation_hash(key);
  std::filesystem::path file = dir_ / (hash + ".json");
  std::filesystem::path tmp = dir_ / (hash + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write cache record " + file.string());
    out << evaluation_to_json(key, evaluation).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

MetricEvaluation evaluate_metric(const ClaimText& claim, MetricId metric,
                                 const JudgeConfig& config, ChatProvider& provider,
                                 const PromptLibrary& library, EvaluationCache* cache) {
  if (metric == MetricId::BS)
    throw DomainError("BS is computed by the semantic module, not the judge");
  if (config.samples_per_metric < 1)
    throw UsageError("samples_per_metric must be positive");

  std::string prompt = render_prompt(library.metric_template(metric), claim);
  std::string key = evaluation_key(metric, claim.body, config.model_name,
                                   config.temperature, library.version_tag());
  if (cache) {
    if (auto hit = cache->lookup(key)) return *hit;
  }

  MetricEvaluation evaluation;
  evaluation.metric = metric;
  evaluation.request_hash = evaluation_hash(key);

  for (int i = 0; i < config.samples_per_metric; ++i) {
    ChatRequest request;
    request.prompt = prompt;
    request.model = config.model_name;
    request.temperature = config.temperature;
    request.purpose = std::string(to_string(metric));
    request.sample_index = i;
    request.request_hash = evaluation.request_hash;
    if (config.seed_base) request.seed = *config.seed_base + static_cast<std::uint64_t>(i);

    std::string response = provider.complete(request);
    evaluation.raw_responses.push_back(response);
    try {
      evaluation.samples.push_back(parse_score(response));
    } catch (const DomainError&) {
      // unparseable sample; quorum check below decides
    }
  }

  std::size_t quorum = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(config.quorum, 1)),
      static_cast<std::size_t>(config.samples_per_metric));
  if (evaluation.samples.size() < quorum) {
    throw PartialFailure(metric, evaluation.samples.size(),
                         static_cast<std::size_t>(config.samples_per_metric), quorum);
  }

  evaluation.mean =
      std::accumulate(evaluation.samples.begin(), evaluation.samples.end(), 0.0) /
      static_cast<double>(evaluation.samples.size());
  if (cache) cache->store(key, evaluation);
  return evaluation;
}

std::map<MetricId, MetricEvaluation> evaluate_all(const ClaimText& claim,
                                                  const JudgeConfig& config,
                                                  ChatProvider& provider,
                                                  const PromptLibrary& library,
                                                  EvaluationCache* cache) {
  constexpr std::size_t kJudgeCount = kJudgeMetrics.size();
  std::array<std::optional<MetricEvaluation>, kJudgeCount> results;
  std::array<std::exception_ptr, kJudgeCount> failures{};

  std::size_t workers = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(config.parallelism, 1)), 1, kJudgeCount);
  std::atomic<std::size_t> next{0};

  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < kJudgeCount; i = next.fetch_add(1)) {
      try {
        results[i] =
            evaluate_metric(claim, kJudgeMetrics[i], config, provider, library, cache);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();

  std::vector<MetricId> failed;
  std::string first_message;
  std::exception_ptr first_other;
  for (std::size_t i = 0; i < kJudgeCount; ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const AvailabilityError& e) {
      failed.push_back(kJudgeMetrics[i]);
      if (first_message.empty()) first_message = e.what();
    } catch (...) {
      if (!first_other) first_other = failures[i];
    }
  }
  if (first_other) std::rethrow_exception(first_other);
  if (!failed.empty()) {
    std::string metrics;
    for (MetricId id : failed) {
      if (!metrics.empty()) metrics += ", ";
      metrics += to_string(id);
    }
    throw ProviderUnavailable("evaluation failed for " + metrics + ": " + first_message,
                              std::move(failed));
  }

  std::map<MetricId, MetricEvaluation> evaluations;
  for (std::size_t i = 0; i < kJudgeCount; ++i)
    evaluations.emplace(kJudgeMetrics[i], std::move(*results[i]));
  return evaluations;
}

ClaimText generate_claim(const std::string& title, const std::string& abstract,
                         const std::string& description, const JudgeConfig& config,
                         ChatProvider& provider, const PromptLibrary& library,
                         const std::string& patent_id) {
  if (title.empty()) throw UsageError("title must not be empty");

  ChatRequest request;
  request.prompt =
      render_generation_prompt(library.generation(), title, abstract, description);
  request.model = config.model_name;
  request.temperature = config.temperature;
  request.purpose = "generate";
  request.sample_index = 0;
  request.request_hash = evaluation_hash(request.prompt);
  if (config.seed_base) request.seed = *config.seed_base;

  std::string body = provider.complete(request);
  return make_claim_text(patent_id, body, Provenance::generated);
}

}  // namespace patentscore::judge

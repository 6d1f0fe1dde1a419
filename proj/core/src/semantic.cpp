#include "patentscore/semantic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <map>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "http_util.hpp"
#include "patentscore/errors.hpp"

namespace patentscore::semantic {

namespace {

using nlohmann::json;

bool all_whitespace(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> tokenize_lower(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

/// Shared retrying POST for the two remote backends.
std::string post_json(const RemoteBackendConfig& config, const std::string& path,
                      const std::string& body) {
  internal::ParsedUrl url = internal::parse_base_url(config.base_url);
  httplib::Headers headers;
  if (!config.credential_env_var.empty()) {
    std::string token = internal::getenv_or_empty(config.credential_env_var.c_str());
    if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);
  }

  std::string last_error;
  int attempts = config.max_retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(250) * (1 << (attempt - 1)));
    httplib::Client client(url.origin);
    client.set_connection_timeout(config.timeout);
    client.set_read_timeout(config.timeout);
    auto result = client.Post(url.path_prefix + path, headers, body, "application/json");
    if (!result) {
      last_error = "transport error: " + httplib::to_string(result.error());
      continue;
    }
    if (result->status == 429 || result->status >= 500) {
      last_error = "status " + std::to_string(result->status);
      continue;
    }
    if (result->status != 200)
      throw BackendUnavailable("backend returned status " +
                               std::to_string(result->status) + ": " + result->body);
    return result->body;
  }
  throw BackendUnavailable("backend unreachable after " + std::to_string(attempts) +
                           " attempts (" + last_error + ")");
}

}  // namespace

double rescale(double raw) {
  if (!(raw >= 0.0 && raw <= 1.0)) throw RawScoreOutOfRange(raw);
  return 1.0 + 4.0 * raw;
}

SemanticScore similarity(const ClaimText& gold, const ClaimText& generated,
                         EmbeddingBackend& backend) {
  if (gold.body.empty() || all_whitespace(gold.body)) throw EmptyText();
  if (generated.body.empty() || all_whitespace(generated.body)) throw EmptyText();

  double raw = backend.score(gold.body, generated.body);
  if (raw < 0.0) {
    std::cerr << "patentscore: semantic backend " << backend.id() << " returned raw="
              << raw << "; clamping to 0\n";
    raw = 0.0;
  }
  if (raw > 1.0) raw = 1.0;
  return SemanticScore{raw, rescale(raw), backend.id()};
}

double LexicalOverlapBackend::score(const std::string& gold, const std::string& generated) {
  std::vector<std::string> a = tokenize_lower(gold);
  std::vector<std::string> b = tokenize_lower(generated);
  if (a.empty() || b.empty()) return 0.0;

  std::map<std::string, std::size_t> counts;
  for (const std::string& token : a) ++counts[token];
  std::size_t matches = 0;
  for (const std::string& token : b) {
    auto it = counts.find(token);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++matches;
    }
  }
  if (matches == 0) return 0.0;
  double precision = static_cast<double>(matches) / static_cast<double>(b.size());
  double recall = static_cast<double>(matches) / static_cast<double>(a.size());
  return 2.0 * precision * recall / (precision + recall);
}

struct RemoteScoreBackend::Impl {
  RemoteBackendConfig config;
};

RemoteScoreBackend::RemoteScoreBackend(RemoteBackendConfig config)
    : impl_(std::make_unique<Impl>(Impl{std::move(config)})) {}

RemoteScoreBackend::~RemoteScoreBackend() = default;

std::string RemoteScoreBackend::id() const {
  return "remote-score:" + impl_->config.model;
}

double RemoteScoreBackend::score(const std::string& gold, const std::string& generated) {
  json payload = {{"reference", gold},
                  {"candidate", generated},
                  {"model", impl_->config.model}};
  std::string body = post_json(impl_->config, "/score", payload.dump());
  try {
    return json::parse(body).at("f1").get<double>();
  } catch (const json::exception& e) {
    throw BackendUnavailable(std::string("malformed scoring response: ") + e.what());
  }
}

struct EmbeddingCosineBackend::Impl {
  RemoteBackendConfig config;
};

EmbeddingCosineBackend::EmbeddingCosineBackend(RemoteBackendConfig config)
    : impl_(std::make_unique<Impl>(Impl{std::move(config)})) {}

EmbeddingCosineBackend::~EmbeddingCosineBackend() = default;

std::string EmbeddingCosineBackend::id() const {
  return "embedding-cosine:" + impl_->config.model;
}

double EmbeddingCosineBackend::score(const std::string& gold,
                                     const std::string& generated) {
  json payload = {{"model", impl_->config.model},
                  {"input", json::array({gold, generated})}};
  std::string body = post_json(impl_->config, "/embeddings", payload.dump());

  std::vector<double> a, b;
  try {
    json response = json::parse(body);
    a = response.at("data").at(0).at("embedding").get<std::vector<double>>();
    b = response.at("data").at(1).at("embedding").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw BackendUnavailable(std::string("malformed embeddings response: ") + e.what());
  }
  if (a.size() != b.size() || a.empty())
    throw BackendUnavailable("embedding vectors have mismatched or zero length");

  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0)
    throw BackendUnavailable("embedding vector has zero norm");
  double cosine = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return std::clamp(cosine, 0.0, 1.0);
}

}  // namespace patentscore::semantic

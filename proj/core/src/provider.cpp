#include "patentscore/provider.hpp"

#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "http_util.hpp"
#include "patentscore/errors.hpp"

namespace patentscore::judge {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

bool retryable_status(int status) {
  return status == 429 || (status >= 500 && status < 600);
}

}  // namespace

struct HttpChatProvider::Impl {
  HttpProviderConfig config;
  internal::ParsedUrl url;
  std::mutex log_mutex;

  explicit Impl(HttpProviderConfig cfg)
      : config(std::move(cfg)), url(internal::parse_base_url(config.base_url)) {}

  void log(const ChatRequest& request, const std::string& status, int attempt) {
    if (config.log_path.empty()) return;
    json entry = {{"timestamp", utc_timestamp()},
                  {"request_hash", request.request_hash},
                  {"model", request.model},
                  {"temperature", request.temperature},
                  {"purpose", request.purpose},
                  {"sample_index", request.sample_index},
                  {"attempt", attempt},
                  {"status", status}};
    std::lock_guard<std::mutex> lock(log_mutex);
    std::ofstream out(config.log_path, std::ios::app);
    out << entry.dump() << '\n';
  }
};

HttpChatProvider::HttpChatProvider(HttpProviderConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpChatProvider::~HttpChatProvider() = default;

std::string HttpChatProvider::id() const {
  return "http:" + impl_->config.base_url;
}

std::string HttpChatProvider::complete(const ChatRequest& request) {
  json payload = {
      {"model", request.model},
      {"temperature", request.temperature},
      {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})}};
  if (request.seed) payload["seed"] = *request.seed;
  const std::string body = payload.dump();

  httplib::Headers headers;
  if (!impl_->config.credential_env_var.empty()) {
    std::string token =
        internal::getenv_or_empty(impl_->config.credential_env_var.c_str());
    if (!token.empty()) headers.emplace("Authorization", "Bearer " + token);
  }

  std::string last_error;
  int attempts = impl_->config.max_retries + 1;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      auto backoff = impl_->config.initial_backoff * (1 << (attempt - 1));
      std::this_thread::sleep_for(backoff);
    }
    httplib::Client client(impl_->url.origin);
    client.set_connection_timeout(impl_->config.timeout);
    client.set_read_timeout(impl_->config.timeout);

    auto result = client.Post(impl_->url.path_prefix + "/chat/completions", headers,
                              body, "application/json");
    if (!result) {
      last_error = "transport error: " + httplib::to_string(result.error());
      impl_->log(request, last_error, attempt);
      continue;
    }
    if (retryable_status(result->status)) {
      last_error = "status " + std::to_string(result->status);
      impl_->log(request, last_error, attempt);
      continue;
    }
    if (result->status != 200) {
      impl_->log(request, "status " + std::to_string(result->status), attempt);
      throw ProviderUnavailable("provider returned status " +
                                std::to_string(result->status) + ": " + result->body);
    }
    try {
      json response = json::parse(result->body);
      std::string content =
          response.at("choices").at(0).at("message").at("content").get<std::string>();
      impl_->log(request, "ok", attempt);
      return content;
    } catch (const json::exception& e) {
      impl_->log(request, "malformed response", attempt);
      throw ProviderUnavailable(std::string("malformed provider response: ") + e.what());
    }
  }
  throw ProviderUnavailable("provider unreachable after " + std::to_string(attempts) +
                            " attempts (" + last_error + ")");
}

ScriptedProvider::ScriptedProvider(std::vector<std::string> responses)
    : responses_(std::move(responses)) {
  if (responses_.empty())
    throw UsageError("scripted provider needs at least one response");
}

ScriptedProvider ScriptedProvider::constant(std::string response) {
  return ScriptedProvider(std::vector<std::string>{std::move(response)});
}

void ScriptedProvider::set_purpose_responses(std::string purpose,
                                             std::vector<std::string> responses) {
  if (responses.empty())
    throw UsageError("scripted provider needs at least one response");
  purpose_responses_.emplace_back(std::move(purpose), std::move(responses));
}

std::string ScriptedProvider::complete(const ChatRequest& request) {
  const std::vector<std::string>* pool = &responses_;
  for (const auto& [purpose, responses] : purpose_responses_) {
    if (purpose == request.purpose) {
      pool = &responses;
      break;
    }
  }
  std::size_t index = static_cast<std::size_t>(request.sample_index) % pool->size();
  return (*pool)[index];
}

}  // namespace patentscore::judge

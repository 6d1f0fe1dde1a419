#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace patentscore::judge {

/// One chat completion request. `purpose` tags the metric ("CS".."AS") or
/// "generate"; `sample_index` distinguishes repeated samples and keeps
/// scripted providers deterministic under concurrency.
struct ChatRequest {
  std::string prompt;
  std::string model;
  double temperature = 0.7;
  std::optional<std::uint64_t> seed;
  std::string purpose;
  int sample_index = 0;
  std::string request_hash;  // evaluation-level hash, for logging
};

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;

  /// Returns the completion text. Throws ProviderUnavailable.
  virtual std::string complete(const ChatRequest& request) = 0;
  virtual std::string id() const = 0;
};

struct HttpProviderConfig {
  std::string base_url;  // e.g. https://api.openai.com/v1
  std::string credential_env_var;
  int max_retries = 2;
  std::chrono::milliseconds timeout{60000};
  std::chrono::milliseconds initial_backoff{250};
  std::string log_path;  // JSON-lines request log; empty disables
};

/// OpenAI-style chat-completions client with exponential backoff on 429/5xx
/// and transport errors.
class HttpChatProvider : public ChatProvider {
 public:
  explicit HttpChatProvider(HttpProviderConfig config);
  ~HttpChatProvider() override;

  std::string complete(const ChatRequest& request) override;
  std::string id() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Deterministic in-process provider for tests and offline runs. Responses
/// are selected by sample_index (modulo the list), optionally overridden per
/// purpose, so results do not depend on call order.
class ScriptedProvider : public ChatProvider {
 public:
  explicit ScriptedProvider(std::vector<std::string> responses);
  static ScriptedProvider constant(std::string response);

  /// Responses used only for requests with the given purpose tag.
  void set_purpose_responses(std::string purpose, std::vector<std::string> responses);

  std::string complete(const ChatRequest& request) override;
  std::string id() const override { return "scripted"; }

 private:
  std::vector<std::string> responses_;
  std::vector<std::pair<std::string, std::vector<std::string>>> purpose_responses_;
};

}  // namespace patentscore::judge

#include "patentscore/provider.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "patentscore/errors.hpp"
#include "patentscore/semantic.hpp"

using namespace patentscore;
using namespace patentscore::judge;
using nlohmann::json;

namespace {

// A local chat-completions endpoint that echoes a scripted score and records
// what it was asked.
class LocalProviderServer {
 public:
  LocalProviderServer() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      ++requests_;
      last_body_ = req.body;
      last_auth_ = req.get_header_value("Authorization");
      json body = json::parse(req.body);
      if (fail_next_ > 0) {
        --fail_next_;
        res.status = 503;
        res.set_content("overloaded", "text/plain");
        return;
      }
      json response = {
          {"choices",
           json::array({{{"message",
                          {{"role", "assistant"}, {"content", content_}}}}})}};
      res.set_content(response.dump(), "application/json");
    });
    server_.Post("/score", [](const httplib::Request& req, httplib::Response& res) {
      json body = json::parse(req.body);
      double f1 =
          body.at("reference").get<std::string>() == body.at("candidate").get<std::string>()
              ? 1.0
              : 0.25;
      res.set_content(json{{"f1", f1}}.dump(), "application/json");
    });
    server_.Post("/embeddings", [](const httplib::Request& req, httplib::Response& res) {
      json body = json::parse(req.body);
      auto embed = [](const std::string& text) {
        std::vector<double> v = {0.0, 0.0, 1.0};
        for (char c : text) v[static_cast<unsigned char>(c) % 2] += 1.0;
        return v;
      };
      json data = json::array();
      for (const auto& input : body.at("input"))
        data.push_back({{"embedding", embed(input.get<std::string>())}});
      res.set_content(json{{"data", data}}.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~LocalProviderServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  void set_content(std::string content) { content_ = std::move(content); }
  void fail_next(int n) { fail_next_ = n; }
  int requests() const { return requests_; }
  std::string last_body() const { return last_body_; }
  std::string last_auth() const { return last_auth_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::string content_ = "Score: 4";
  std::atomic<int> fail_next_{0};
  std::atomic<int> requests_{0};
  std::string last_body_;
  std::string last_auth_;
};

ChatRequest sample_request() {
  ChatRequest request;
  request.prompt = "Assess this claim.";
  request.model = "test-model";
  request.temperature = 0.7;
  request.purpose = "CS";
  request.sample_index = 0;
  request.request_hash = "deadbeef";
  return request;
}

TEST(HttpChatProvider, RoundTrip) {
  LocalProviderServer server;
  HttpProviderConfig config;
  config.base_url = server.base_url() + "/v1";
  config.max_retries = 0;
  HttpChatProvider provider(config);
  EXPECT_EQ(provider.complete(sample_request()), "Score: 4");

  json sent = json::parse(server.last_body());
  EXPECT_EQ(sent["model"], "test-model");
  EXPECT_DOUBLE_EQ(sent["temperature"].get<double>(), 0.7);
  EXPECT_EQ(sent["messages"][0]["content"], "Assess this claim.");
}

TEST(HttpChatProvider, SeedForwardedWhenSet) {
  LocalProviderServer server;
  HttpProviderConfig config;
  config.base_url = server.base_url() + "/v1";
  HttpChatProvider provider(config);
  ChatRequest request = sample_request();
  request.seed = 1234;
  provider.complete(request);
  EXPECT_EQ(json::parse(server.last_body())["seed"], 1234);
}

TEST(HttpChatProvider, CredentialFromNamedEnvVar) {
  LocalProviderServer server;
  setenv("PS_TEST_TOKEN", "sekrit", 1);
  HttpProviderConfig config;
  config.base_url = server.base_url() + "/v1";
  config.credential_env_var = "PS_TEST_TOKEN";
  HttpChatProvider provider(config);
  provider.complete(sample_request());
  EXPECT_EQ(server.last_auth(), "Bearer sekrit");
  unsetenv("PS_TEST_TOKEN");
}

TEST(HttpChatProvider, RetriesTransientFailures) {
  LocalProviderServer server;
  server.fail_next(2);
  HttpProviderConfig config;
  config.base_url = server.base_url() + "/v1";
  config.max_retries = 3;
  config.initial_backoff = std::chrono::milliseconds(1);
  HttpChatProvider provider(config);
  EXPECT_EQ(provider.complete(sample_request()), "Score: 4");
  EXPECT_EQ(server.requests(), 3);
}

TEST(HttpChatProvider, GivesUpAfterMaxRetries) {
  LocalProviderServer server;
  server.fail_next(10);
  HttpProviderConfig config;
  config.base_url = server.base_url() + "/v1";
  config.max_retries = 1;
  config.initial_backoff = std::chrono::milliseconds(1);
  HttpChatProvider provider(config);
  EXPECT_THROW(provider.complete(sample_request()), ProviderUnavailable);
}

TEST(HttpChatProvider, UnreachableHost) {
  HttpProviderConfig config;
  config.base_url = "http://127.0.0.1:1/v1";  // nothing listens there
  config.max_retries = 0;
  config.timeout = std::chrono::milliseconds(300);
  HttpChatProvider provider(config);
  EXPECT_THROW(provider.complete(sample_request()), ProviderUnavailable);
}

TEST(HttpChatProvider, RequestLogIsJsonLines) {
  LocalProviderServer server;
  std::filesystem::path log =
      std::filesystem::temp_directory_path() / "ps_provider_log.jsonl";
  std::filesystem::remove(log);
  HttpProviderConfig config;
  config.base_url = server.base_url() + "/v1";
  config.log_path = log.string();
  HttpChatProvider provider(config);
  provider.complete(sample_request());

  std::ifstream in(log);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  json entry = json::parse(line);
  EXPECT_EQ(entry["request_hash"], "deadbeef");
  EXPECT_EQ(entry["model"], "test-model");
  EXPECT_DOUBLE_EQ(entry["temperature"].get<double>(), 0.7);
  EXPECT_EQ(entry["status"], "ok");
  EXPECT_TRUE(entry.contains("timestamp"));
  std::filesystem::remove(log);
}

TEST(RemoteScoreBackend, ParsesF1) {
  LocalProviderServer server;
  semantic::RemoteBackendConfig config;
  config.base_url = server.base_url();
  config.model = "scorer";
  semantic::RemoteScoreBackend backend(config);
  EXPECT_DOUBLE_EQ(backend.score("same text", "same text"), 1.0);
  EXPECT_DOUBLE_EQ(backend.score("one text", "another"), 0.25);
  EXPECT_EQ(backend.id(), "remote-score:scorer");
}

TEST(EmbeddingCosineBackend, CosineOfServedVectors) {
  LocalProviderServer server;
  semantic::RemoteBackendConfig config;
  config.base_url = server.base_url();
  config.model = "embedder";
  semantic::EmbeddingCosineBackend backend(config);
  double self = backend.score("identical input", "identical input");
  EXPECT_NEAR(self, 1.0, 1e-9);
  double cross = backend.score("aaaa", "abababab");
  EXPECT_GE(cross, 0.0);
  EXPECT_LE(cross, 1.0);
}

TEST(RemoteBackends, UnreachableHostThrowsBackendUnavailable) {
  semantic::RemoteBackendConfig config;
  config.base_url = "http://127.0.0.1:1";
  config.max_retries = 0;
  config.timeout = std::chrono::milliseconds(300);
  semantic::RemoteScoreBackend backend(config);
  EXPECT_THROW(backend.score("a", "b"), BackendUnavailable);
}

TEST(ScriptedProvider, SampleIndexSelectsResponse) {
  ScriptedProvider provider({"one", "two", "three"});
  ChatRequest request = sample_request();
  request.sample_index = 4;
  EXPECT_EQ(provider.complete(request), "two");  // 4 % 3 == 1
  request.purpose = "AS";
  provider.set_purpose_responses("AS", {"only"});
  EXPECT_EQ(provider.complete(request), "only");
}

}  // namespace

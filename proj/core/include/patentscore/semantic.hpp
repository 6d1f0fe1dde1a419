#pragma once

#include <chrono>
#include <memory>
#include <string>

#include "patentscore/claim.hpp"

namespace patentscore::semantic {

/// Raw backend similarity in [0, 1] and its affine rescale to [1, 5].
struct SemanticScore {
  double raw = 0.0;
  double rescaled = 1.0;
  std::string backend_id;
};

/// 1 + 4 * raw. Throws RawScoreOutOfRange outside [0, 1].
double rescale(double raw);

/// Produces a similarity in [0, 1] for a gold/generated claim pair.
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual double score(const std::string& gold, const std::string& generated) = 0;
  virtual std::string id() const = 0;
};

/// Runs the backend, clamps stray negatives to 0 (with a stderr warning) and
/// applies the rescale. Throws EmptyText, BackendUnavailable.
SemanticScore similarity(const ClaimText& gold, const ClaimText& generated,
                         EmbeddingBackend& backend);

/// Offline fallback: token-level greedy matching F1 with exact-match token
/// similarity. Deterministic and dependency-free; also the test backend.
class LexicalOverlapBackend : public EmbeddingBackend {
 public:
  double score(const std::string& gold, const std::string& generated) override;
  std::string id() const override { return "lexical-f1"; }
};

struct RemoteBackendConfig {
  std::string base_url;  // e.g. http://localhost:9090
  std::string model;
  std::string credential_env_var;  // empty: no auth header
  int max_retries = 2;
  std::chrono::milliseconds timeout{60000};
};

/// Client for a scoring service: POST /score {"reference","candidate","model"}
/// returning {"f1": x} with x in [0, 1].
class RemoteScoreBackend : public EmbeddingBackend {
 public:
  explicit RemoteScoreBackend(RemoteBackendConfig config);
  ~RemoteScoreBackend() override;
  double score(const std::string& gold, const std::string& generated) override;
  std::string id() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Client for an embeddings endpoint: POST /embeddings {"input":[...],"model"}
/// returning one vector per input; similarity is their cosine clamped to
/// [0, 1].
class EmbeddingCosineBackend : public EmbeddingBackend {
 public:
  explicit EmbeddingCosineBackend(RemoteBackendConfig config);
  ~EmbeddingCosineBackend() override;
  double score(const std::string& gold, const std::string& generated) override;
  std::string id() const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace patentscore::semantic

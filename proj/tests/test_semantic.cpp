#include "patentscore/semantic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "patentscore/errors.hpp"

using namespace patentscore;
using namespace patentscore::semantic;

namespace {

ClaimText gold(const std::string& body) {
  return make_claim_text("P1", body, Provenance::gold);
}

ClaimText generated(const std::string& body) {
  return make_claim_text("P1", body, Provenance::generated);
}

TEST(Rescale, Endpoints) {
  EXPECT_DOUBLE_EQ(rescale(0.0), 1.0);
  EXPECT_DOUBLE_EQ(rescale(1.0), 5.0);
  EXPECT_DOUBLE_EQ(rescale(0.5), 3.0);
  EXPECT_DOUBLE_EQ(rescale(0.25), 2.0);  // 1 + 4 * 0.25
}

TEST(Rescale, OutOfRangeRejected) {
  EXPECT_THROW(rescale(-0.01), RawScoreOutOfRange);
  EXPECT_THROW(rescale(1.01), RawScoreOutOfRange);
  EXPECT_THROW(rescale(std::nan("")), RawScoreOutOfRange);
}

// Strictly monotone and affine: midpoints map to midpoints.
TEST(Rescale, AffineProperty) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    double a = dist(rng), b = dist(rng);
    if (a > b) std::swap(a, b);
    if (a < b) {
      EXPECT_LT(rescale(a), rescale(b));
    }
    EXPECT_NEAR(rescale((a + b) / 2.0), (rescale(a) + rescale(b)) / 2.0, 1e-12);
  }
}

TEST(LexicalBackend, SelfSimilarityIsOne) {
  LexicalOverlapBackend backend;
  ClaimText claim = gold("A device comprising: a memory; and a processor.");
  SemanticScore score = similarity(claim, generated(claim.body), backend);
  EXPECT_NEAR(score.raw, 1.0, 1e-6);
  EXPECT_NEAR(score.rescaled, 5.0, 1e-6);
  EXPECT_EQ(score.backend_id, "lexical-f1");
}

TEST(LexicalBackend, Symmetry) {
  LexicalOverlapBackend backend;
  std::vector<std::pair<std::string, std::string>> cases = {
      {"A method for processing biometric data, comprising: receiving sensor data.",
       "A method for biometric processing, comprising: obtaining sensor data."},
      {"a display; a battery.", "a display; a processor; a battery."},
      {"alpha beta gamma", "delta epsilon"},
  };
  for (const auto& [x, y] : cases) {
    SemanticScore xy = similarity(gold(x), generated(y), backend);
    SemanticScore yx = similarity(gold(y), generated(x), backend);
    EXPECT_NEAR(xy.raw, yx.raw, 1e-9);
  }
}

TEST(LexicalBackend, DisjointTextsScoreZero) {
  LexicalOverlapBackend backend;
  SemanticScore score = similarity(gold("alpha beta"), generated("gamma delta"), backend);
  EXPECT_DOUBLE_EQ(score.raw, 0.0);
  EXPECT_DOUBLE_EQ(score.rescaled, 1.0);
}

TEST(LexicalBackend, RawStaysInUnitInterval) {
  LexicalOverlapBackend backend;
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> word(0, 9);
  std::uniform_int_distribution<int> length(1, 30);
  const char* words[] = {"memory",  "processor", "interface", "display", "battery",
                         "sensor",  "signal",    "module",    "circuit", "housing"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string a, b;
    for (int i = 0; i < length(rng); ++i) a += std::string(words[word(rng)]) + " ";
    for (int i = 0; i < length(rng); ++i) b += std::string(words[word(rng)]) + " ";
    SemanticScore score = similarity(gold(a), generated(b), backend);
    EXPECT_GE(score.raw, 0.0);
    EXPECT_LE(score.raw, 1.0);
    EXPECT_GE(score.rescaled, 1.0);
    EXPECT_LE(score.rescaled, 5.0);
  }
}

TEST(Similarity, EmptyTextRejected) {
  LexicalOverlapBackend backend;
  ClaimText ok = gold("a device.");
  ClaimText blank{"P1", "   ", Provenance::generated};
  EXPECT_THROW(similarity(ok, blank, backend), EmptyText);
  ClaimText blank_gold{"P1", "\n", Provenance::gold};
  EXPECT_THROW(similarity(blank_gold, generated("a device."), backend), EmptyText);
}

TEST(Similarity, NegativeRawClampsToZero) {
  struct Negative : EmbeddingBackend {
    double score(const std::string&, const std::string&) override { return -0.25; }
    std::string id() const override { return "negative"; }
  } backend;
  SemanticScore score = similarity(gold("a."), generated("b."), backend);
  EXPECT_DOUBLE_EQ(score.raw, 0.0);
  EXPECT_DOUBLE_EQ(score.rescaled, 1.0);
}

TEST(Similarity, RecordsBackendId) {
  struct Half : EmbeddingBackend {
    double score(const std::string&, const std::string&) override { return 0.5; }
    std::string id() const override { return "half-backend"; }
  } backend;
  SemanticScore score = similarity(gold("a."), generated("b."), backend);
  EXPECT_EQ(score.backend_id, "half-backend");
  EXPECT_DOUBLE_EQ(score.rescaled, 3.0);
}

}  // namespace

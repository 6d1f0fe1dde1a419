#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patentscore/claim.hpp"
#include "patentscore/metric.hpp"

namespace patentscore::data {

inline constexpr std::string_view kDatasetSchema = "patentscore/dataset@1";
inline constexpr std::string_view kRunSchema = "patentscore/run@1";

/// One line of a dataset file.
struct DatasetRecord {
  std::string patent_id;
  std::optional<std::string> ipc_section;
  std::string gold_claim;
  std::string llm_claim;
  std::optional<std::vector<double>> expert_scores;
  std::optional<double> mean_score;
};

struct LoadIssue {
  std::size_t line = 0;
  std::string field;
  std::string message;
};

struct LoadResult {
  std::vector<ClaimPair> pairs;
  std::vector<LoadIssue> issues;  // empty in strict mode (it throws instead)
};

/// Reads a line-delimited JSON dataset. Strict mode throws SchemaViolation at
/// the first malformed line; lenient mode skips it and records the issue.
/// Throws FileNotFound.
LoadResult load_dataset(const std::filesystem::path& path, bool strict = true);

struct JudgeMetadata {
  std::string model;
  double temperature = 0.0;
  int samples = 0;
  std::string template_version;
  std::string timestamp;  // excluded from idempotence comparisons
};

/// One evaluated claim pair. `scores` has all seven metrics in judge mode and
/// a subset in deterministic mode; `weights` are the ones the aggregate was
/// computed with (renormalized when partial).
struct RunRecord {
  std::string patent_id;
  std::map<MetricId, double> scores;
  double aggregate = 0.0;
  std::map<MetricId, double> weights;
  std::string semantic_backend;
  JudgeMetadata judge;
  std::string mode = "judge";  // "judge" | "deterministic-lint"
};

/// Writes a schema header line plus one JSON record per result with stable
/// field ordering; identical input produces identical bytes. Throws IoFailure.
void save_run(std::span<const RunRecord> results, const std::filesystem::path& path);

/// Throws FileNotFound, SchemaViolation. Checks the aggregate invariant
/// (weighted sum of scores) on every record.
std::vector<RunRecord> load_run(const std::filesystem::path& path);

/// Joins results with annotated pairs on patent_id, ordered by patent_id.
/// Throws UnmatchedResult for a result with no pair, MissingAnnotation for a
/// matched pair without expert scores.
std::pair<std::vector<double>, std::vector<double>> align(
    std::span<const RunRecord> results, std::span<const ClaimPair> pairs);

/// Advisory composition check against the reference corpus shape
/// (200 records per IPC section A and G).
struct BalanceReport {
  std::map<std::string, std::size_t> section_counts;  // "" for unlabeled
  std::vector<std::string> warnings;
};

BalanceReport check_balance(std::span<const ClaimPair> pairs);

/// Rater-major matrix of expert scores (raters x items) for the reliability
/// statistics; cells are missing where a record has fewer scores. Items keep
/// dataset order. Throws DegenerateVariance if fewer than 2 raters or items.
std::vector<std::vector<std::optional<double>>> expert_score_matrix(
    std::span<const ClaimPair> pairs);

}  // namespace patentscore::data

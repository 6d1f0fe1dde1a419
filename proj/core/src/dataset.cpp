#include "patentscore/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "patentscore/errors.hpp"

namespace patentscore::data {

namespace {

using ordered_json = nlohmann::ordered_json;

/// mean_score in dataset files is commonly rounded to two decimals; accept
/// that while still catching genuine mismatches.
constexpr double kMeanTolerance = 5e-3;

ClaimPair record_to_pair(const DatasetRecord& record, std::size_t line) {
  if (record.patent_id.empty())
    throw SchemaViolation(line, "patent_id", "must be a non-empty string");

  std::optional<ExpertAnnotation> annotation;
  if (record.expert_scores) {
    if (!record.mean_score)
      throw SchemaViolation(line, "mean_score",
                            "required when expert_scores is present");
    ExpertAnnotation computed;
    try {
      computed = make_expert_annotation(*record.expert_scores);
    } catch (const DomainError& e) {
      throw SchemaViolation(line, "expert_scores", e.what());
    }
    if (std::abs(computed.mean - *record.mean_score) > kMeanTolerance) {
      std::ostringstream message;
      message << "mean_score " << *record.mean_score
              << " does not match the mean of expert_scores (" << computed.mean << ")";
      throw SchemaViolation(line, "mean_score", message.str());
    }
    annotation = std::move(computed);
  } else if (record.mean_score) {
    throw SchemaViolation(line, "expert_scores",
                          "required when mean_score is present");
  }

  ClaimText gold, generated;
  try {
    gold = make_claim_text(record.patent_id, record.gold_claim, Provenance::gold);
  } catch (const DomainError& e) {
    throw SchemaViolation(line, "gold_claim", e.what());
  }
  try {
    generated = make_claim_text(record.patent_id, record.llm_claim, Provenance::generated);
  } catch (const DomainError& e) {
    throw SchemaViolation(line, "llm_claim", e.what());
  }
  return make_claim_pair(std::move(gold), std::move(generated), std::move(annotation),
                         record.ipc_section);
}

DatasetRecord parse_record(const ordered_json& object, std::size_t line) {
  DatasetRecord record;
  if (!object.is_object())
    throw SchemaViolation(line, "", "expected a JSON object");

  auto string_field = [&](const char* name, bool required) -> std::optional<std::string> {
    auto it = object.find(name);
    if (it == object.end() || it->is_null()) {
      if (required) throw SchemaViolation(line, name, "missing required field");
      return std::nullopt;
    }
    if (!it->is_string()) throw SchemaViolation(line, name, "expected a string");
    return it->get<std::string>();
  };

  record.patent_id = *string_field("patent_id", true);
  record.gold_claim = *string_field("gold_claim", true);
  record.llm_claim = *string_field("llm_claim", true);
  record.ipc_section = string_field("ipc_section", false);

  if (auto it = object.find("expert_scores"); it != object.end() && !it->is_null()) {
    if (!it->is_array())
      throw SchemaViolation(line, "expert_scores", "expected an array of numbers");
    std::vector<double> scores;
    for (const auto& value : *it) {
      if (!value.is_number())
        throw SchemaViolation(line, "expert_scores", "expected an array of numbers");
      scores.push_back(value.get<double>());
    }
    record.expert_scores = std::move(scores);
  }
  if (auto it = object.find("mean_score"); it != object.end() && !it->is_null()) {
    if (!it->is_number())
      throw SchemaViolation(line, "mean_score", "expected a number");
    record.mean_score = it->get<double>();
  }
  return record;
}

std::string metric_key(MetricId id) {
  return std::string(to_string(id));
}

}  // namespace

LoadResult load_dataset(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path.string());

  LoadResult result;
  std::string line;
  std::size_t line_number = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;

    ordered_json object = ordered_json::parse(line, nullptr, false);
    if (object.is_discarded()) {
      SchemaViolation violation(line_number, "", "line is not valid JSON");
      if (strict) throw violation;
      result.issues.push_back({line_number, "", violation.what()});
      continue;
    }
    if (first_content_line && object.is_object() && object.contains("schema")) {
      first_content_line = false;
      std::string schema = object.value("schema", "");
      if (schema != kDatasetSchema) {
        SchemaViolation violation(line_number, "schema",
                                  "expected \"" + std::string(kDatasetSchema) + "\", got \"" +
                                      schema + "\"");
        if (strict) throw violation;
        result.issues.push_back({line_number, "schema", violation.what()});
      }
      continue;
    }
    first_content_line = false;

    try {
      DatasetRecord record = parse_record(object, line_number);
      result.pairs.push_back(record_to_pair(record, line_number));
    } catch (const SchemaViolation& violation) {
      if (strict) throw;
      result.issues.push_back({violation.line(), violation.field(), violation.what()});
    }
  }
  return result;
}

void save_run(std::span<const RunRecord> results, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot write run file " + path.string());

  out << ordered_json{{"schema", kRunSchema}}.dump() << '\n';
  for (const RunRecord& record : results) {
    ordered_json scores = ordered_json::object();
    for (MetricId id : kAllMetrics) {
      auto it = record.scores.find(id);
      if (it != record.scores.end()) scores[metric_key(id)] = it->second;
    }
    ordered_json weights = ordered_json::object();
    for (MetricId id : kAllMetrics) {
      auto it = record.weights.find(id);
      if (it != record.weights.end()) weights[metric_key(id)] = it->second;
    }
    ordered_json object = {
        {"patent_id", record.patent_id},
        {"mode", record.mode},
        {"scores", scores},
        {"aggregate", record.aggregate},
        {"weights", weights},
        {"semantic_backend", record.semantic_backend},
        {"judge",
         {{"model", record.judge.model},
          {"temperature", record.judge.temperature},
          {"samples", record.judge.samples},
          {"template_version", record.judge.template_version}}},
        {"meta", {{"timestamp", record.judge.timestamp}}}};
    out << object.dump() << '\n';
  }
  if (!out) throw IoFailure("failed while writing run file " + path.string());
}

std::vector<RunRecord> load_run(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound(path.string());

  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;

    ordered_json object = ordered_json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object())
      throw SchemaViolation(line_number, "", "line is not a JSON object");

    if (!header_seen) {
      header_seen = true;
      std::string schema = object.value("schema", "");
      if (schema != kRunSchema)
        throw SchemaViolation(line_number, "schema",
                              "expected \"" + std::string(kRunSchema) + "\", got \"" +
                                  schema + "\"");
      continue;
    }

    RunRecord record;
    record.patent_id = object.value("patent_id", "");
    if (record.patent_id.empty())
      throw SchemaViolation(line_number, "patent_id", "must be a non-empty string");
    record.mode = object.value("mode", "judge");
    record.aggregate = object.value("aggregate", 0.0);
    record.semantic_backend = object.value("semantic_backend", "");

    auto read_metric_map = [&](const char* name) {
      std::map<MetricId, double> values;
      auto it = object.find(name);
      if (it == object.end() || !it->is_object())
        throw SchemaViolation(line_number, name, "expected an object keyed by metric id");
      for (const auto& [key, value] : it->items()) {
        auto id = parse_metric(key);
        if (!id) throw SchemaViolation(line_number, name, "unknown metric id " + key);
        if (!value.is_number())
          throw SchemaViolation(line_number, name, "expected numeric values");
        values[*id] = value.get<double>();
      }
      return values;
    };
    record.scores = read_metric_map("scores");
    record.weights = read_metric_map("weights");

    if (auto it = object.find("judge"); it != object.end() && it->is_object()) {
      record.judge.model = it->value("model", "");
      record.judge.temperature = it->value("temperature", 0.0);
      record.judge.samples = it->value("samples", 0);
      record.judge.template_version = it->value("template_version", "");
    }
    if (auto it = object.find("meta"); it != object.end() && it->is_object())
      record.judge.timestamp = it->value("timestamp", "");

    double expected = 0.0;
    for (const auto& [id, score] : record.scores) {
      auto weight = record.weights.find(id);
      if (weight == record.weights.end())
        throw SchemaViolation(line_number, "weights",
                              "missing weight for metric " + std::string(to_string(id)));
      expected += weight->second * score;
    }
    if (std::abs(expected - record.aggregate) > 1e-9)
      throw SchemaViolation(line_number, "aggregate",
                            "aggregate does not equal the weighted sum of scores");
    records.push_back(std::move(record));
  }
  return records;
}

std::pair<std::vector<double>, std::vector<double>> align(
    std::span<const RunRecord> results, std::span<const ClaimPair> pairs) {
  std::map<std::string, const ClaimPair*> by_id;
  for (const ClaimPair& pair : pairs) by_id.emplace(pair.patent_id, &pair);

  std::vector<std::pair<std::string, std::pair<double, double>>> joined;
  for (const RunRecord& record : results) {
    auto it = by_id.find(record.patent_id);
    if (it == by_id.end()) throw UnmatchedResult(record.patent_id);
    if (!it->second->annotation) throw MissingAnnotation(record.patent_id);
    joined.push_back(
        {record.patent_id, {record.aggregate, it->second->annotation->mean}});
  }
  std::sort(joined.begin(), joined.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::pair<std::vector<double>, std::vector<double>> aligned;
  for (const auto& [id, values] : joined) {
    aligned.first.push_back(values.first);
    aligned.second.push_back(values.second);
  }
  return aligned;
}

BalanceReport check_balance(std::span<const ClaimPair> pairs) {
  BalanceReport report;
  for (const ClaimPair& pair : pairs)
    ++report.section_counts[pair.ipc_section.value_or("")];

  // Reference corpus composition: 200 records per section A and G.
  for (const auto& [section, count] : report.section_counts) {
    if (section.empty()) {
      report.warnings.push_back(std::to_string(count) +
                                " record(s) carry no IPC section label");
    } else if (section != "A" && section != "G") {
      report.warnings.push_back("unexpected IPC section \"" + section + "\" with " +
                                std::to_string(count) + " record(s)");
    } else if (count != 200) {
      report.warnings.push_back("section " + section + " has " + std::to_string(count) +
                                " record(s); the reference corpus has 200");
    }
  }
  for (const char* required : {"A", "G"}) {
    if (!report.section_counts.contains(required))
      report.warnings.push_back("section " + std::string(required) +
                                " is absent; the reference corpus has 200 records");
  }
  return report;
}

std::vector<std::vector<std::optional<double>>> expert_score_matrix(
    std::span<const ClaimPair> pairs) {
  std::size_t raters = 0;
  std::size_t items = 0;
  for (const ClaimPair& pair : pairs) {
    if (!pair.annotation) continue;
    ++items;
    raters = std::max(raters, pair.annotation->scores.size());
  }
  if (raters < 2 || items < 2)
    throw DegenerateVariance("need at least 2 raters and 2 annotated items");

  std::vector<std::vector<std::optional<double>>> matrix(
      raters, std::vector<std::optional<double>>(items));
  std::size_t item = 0;
  for (const ClaimPair& pair : pairs) {
    if (!pair.annotation) continue;
    const std::vector<double>& scores = pair.annotation->scores;
    for (std::size_t r = 0; r < scores.size(); ++r) matrix[r][item] = scores[r];
    ++item;
  }
  return matrix;
}

}  // namespace patentscore::data

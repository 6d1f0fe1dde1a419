#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "patentscore/analyzer.hpp"
#include "patentscore/dataset.hpp"
#include "patentscore/errors.hpp"
#include "patentscore/judge.hpp"
#include "patentscore/rules.hpp"
#include "patentscore/scoring.hpp"
#include "patentscore/semantic.hpp"
#include "patentscore/stats.hpp"

namespace ps = patentscore;
namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProvider = 3;

struct CliConfig {
  // provider
  std::string provider_mode = "http";  // http | scripted
  std::string provider_base_url;
  std::string model_name;
  std::string credential_env_var = "PATENTSCORE_API_KEY";
  int max_retries = 2;
  std::string request_log;
  std::string scripted_file;
  // judge
  double temperature = 0.7;
  int samples_per_metric = 10;
  int parallelism = 4;
  int quorum = 8;
  std::optional<std::uint64_t> seed_base;
  // semantic
  std::string semantic_backend = "lexical";  // lexical | remote-score | embedding
  std::string semantic_base_url;
  std::string semantic_model;
  std::string semantic_credential_env_var;
  // run
  std::string weight_mode = "paper";
  std::string template_dir = "templates";
  std::string cache_dir;
  std::string out_dir = ".";
  bool strict = true;
  bool no_judge = false;
};

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ps::FileNotFound(path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string trim_copy(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

void apply_config_file(CliConfig& config, const fs::path& path) {
  json root = json::parse(read_text_file(path), nullptr, false);
  if (root.is_discarded() || !root.is_object())
    throw ps::UsageError("config file " + path.string() + " is not a JSON object");

  if (auto it = root.find("provider"); it != root.end()) {
    config.provider_mode = it->value("mode", config.provider_mode);
    config.provider_base_url = it->value("base_url", config.provider_base_url);
    config.model_name = it->value("model", config.model_name);
    config.credential_env_var =
        it->value("credential_env_var", config.credential_env_var);
    config.max_retries = it->value("max_retries", config.max_retries);
    config.request_log = it->value("log_path", config.request_log);
    config.scripted_file = it->value("scripted_file", config.scripted_file);
  }
  if (auto it = root.find("judge"); it != root.end()) {
    config.temperature = it->value("temperature", config.temperature);
    config.samples_per_metric =
        it->value("samples_per_metric", config.samples_per_metric);
    config.parallelism = it->value("parallelism", config.parallelism);
    config.quorum = it->value("quorum", config.quorum);
    if (it->contains("seed_base")) config.seed_base = (*it)["seed_base"].get<std::uint64_t>();
  }
  if (auto it = root.find("semantic"); it != root.end()) {
    config.semantic_backend = it->value("backend", config.semantic_backend);
    config.semantic_base_url = it->value("base_url", config.semantic_base_url);
    config.semantic_model = it->value("model", config.semantic_model);
    config.semantic_credential_env_var =
        it->value("credential_env_var", config.semantic_credential_env_var);
  }
  config.weight_mode = root.value("weights", config.weight_mode);
  config.template_dir = root.value("templates", config.template_dir);
  config.cache_dir = root.value("cache", config.cache_dir);
  config.out_dir = root.value("out", config.out_dir);
}

void apply_environment(CliConfig& config) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* value = std::getenv(name);
    if (!value || !*value) return std::nullopt;
    return std::string(value);
  };
  if (auto v = env("PATENTSCORE_BASE_URL")) config.provider_base_url = *v;
  if (auto v = env("PATENTSCORE_MODEL")) config.model_name = *v;
  if (auto v = env("PATENTSCORE_TEMPERATURE")) config.temperature = std::stod(*v);
  if (auto v = env("PATENTSCORE_SAMPLES")) config.samples_per_metric = std::stoi(*v);
  if (auto v = env("PATENTSCORE_PARALLELISM")) config.parallelism = std::stoi(*v);
  if (auto v = env("PATENTSCORE_TEMPLATES")) config.template_dir = *v;
  if (auto v = env("PATENTSCORE_CACHE")) config.cache_dir = *v;
  if (auto v = env("PATENTSCORE_WEIGHTS")) config.weight_mode = *v;
}

ps::WeightVector load_weight_file(const fs::path& path) {
  json root = json::parse(read_text_file(path), nullptr, false);
  if (root.is_discarded() || !root.contains("weights"))
    throw ps::UsageError("weight file " + path.string() +
                         " must be a JSON object with a \"weights\" field");
  std::map<ps::MetricId, double> weights;
  for (const auto& [key, value] : root["weights"].items()) {
    auto id = ps::parse_metric(key);
    if (!id) throw ps::UsageError("weight file has unknown metric id " + key);
    weights[*id] = value.get<double>();
  }
  return ps::make_weight_vector(weights);
}

struct AblationFile {
  ps::scoring::BaselinePerformance baseline;
  std::vector<ps::scoring::AblationRecord> records;
};

AblationFile load_ablation_file(const fs::path& path) {
  json root = json::parse(read_text_file(path), nullptr, false);
  if (root.is_discarded() || !root.contains("baseline") || !root.contains("ablations"))
    throw ps::UsageError("ablation file " + path.string() +
                         " needs \"baseline\" and \"ablations\" fields");
  AblationFile file;
  file.baseline.r_full = root["baseline"].at("r").get<double>();
  file.baseline.mae_full = root["baseline"].at("mae").get<double>();
  for (const auto& entry : root["ablations"]) {
    auto id = ps::parse_metric(entry.at("metric").get<std::string>());
    if (!id) throw ps::UsageError("ablation file has unknown metric id");
    file.records.push_back(
        {*id, entry.at("r").get<double>(), entry.at("mae").get<double>()});
  }
  return file;
}

ps::WeightVector resolve_weights(const std::string& mode) {
  if (mode == "paper") return ps::scoring::published_weights();
  if (mode == "uniform") return ps::WeightVector::uniform();
  if (mode.starts_with("derived:")) {
    AblationFile file = load_ablation_file(mode.substr(8));
    return ps::scoring::derive_weights(file.baseline, file.records).weights;
  }
  if (mode.starts_with("explicit:")) return load_weight_file(mode.substr(9));
  throw ps::UsageError("unknown weight mode \"" + mode +
                       "\"; use paper, uniform, derived:<file> or explicit:<file>");
}

std::unique_ptr<ps::judge::ChatProvider> make_provider(const CliConfig& config) {
  if (config.provider_mode == "scripted") {
    if (config.scripted_file.empty())
      throw ps::UsageError("scripted provider needs provider.scripted_file");
    json root = json::parse(read_text_file(config.scripted_file), nullptr, false);
    if (root.is_discarded())
      throw ps::UsageError("scripted provider file is not valid JSON");
    std::vector<std::string> responses =
        root.value("responses", std::vector<std::string>{});
    if (responses.empty())
      throw ps::UsageError("scripted provider file needs a \"responses\" array");
    auto provider = std::make_unique<ps::judge::ScriptedProvider>(std::move(responses));
    if (auto it = root.find("purposes"); it != root.end()) {
      for (const auto& [purpose, list] : it->items())
        provider->set_purpose_responses(purpose, list.get<std::vector<std::string>>());
    }
    return provider;
  }
  if (config.provider_mode == "http") {
    if (config.provider_base_url.empty())
      throw ps::UsageError("provider.base_url is required for the http provider");
    ps::judge::HttpProviderConfig http;
    http.base_url = config.provider_base_url;
    http.credential_env_var = config.credential_env_var;
    http.max_retries = config.max_retries;
    http.log_path = config.request_log;
    return std::make_unique<ps::judge::HttpChatProvider>(std::move(http));
  }
  throw ps::UsageError("unknown provider mode \"" + config.provider_mode + "\"");
}

std::unique_ptr<ps::semantic::EmbeddingBackend> make_semantic_backend(
    const CliConfig& config) {
  if (config.semantic_backend == "lexical")
    return std::make_unique<ps::semantic::LexicalOverlapBackend>();
  ps::semantic::RemoteBackendConfig remote;
  remote.base_url = config.semantic_base_url;
  remote.model = config.semantic_model;
  remote.credential_env_var = config.semantic_credential_env_var;
  remote.max_retries = config.max_retries;
  if (config.semantic_backend == "remote-score") {
    if (remote.base_url.empty())
      throw ps::UsageError("semantic.base_url is required for remote-score");
    return std::make_unique<ps::semantic::RemoteScoreBackend>(std::move(remote));
  }
  if (config.semantic_backend == "embedding") {
    if (remote.base_url.empty())
      throw ps::UsageError("semantic.base_url is required for embedding");
    return std::make_unique<ps::semantic::EmbeddingCosineBackend>(std::move(remote));
  }
  throw ps::UsageError("unknown semantic backend \"" + config.semantic_backend + "\"");
}

ps::judge::JudgeConfig make_judge_config(const CliConfig& config) {
  ps::judge::JudgeConfig judge;
  judge.provider_base_url = config.provider_base_url;
  judge.model_name = config.model_name;
  judge.temperature = config.temperature;
  judge.samples_per_metric = config.samples_per_metric;
  judge.max_retries = config.max_retries;
  judge.parallelism = config.parallelism;
  judge.credential_env_var = config.credential_env_var;
  judge.quorum = config.quorum;
  judge.seed_base = config.seed_base;
  return judge;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// --- lint --------------------------------------------------------------

std::vector<ps::analyzer::Finding> lint_claim(const std::string& body) {
  using namespace ps::analyzer;
  std::vector<Finding> findings;
  try {
    ParsedClaim parsed = parse_claim(body);
    std::vector<Finding> punctuation = check_punctuation(parsed);
    findings.insert(findings.end(), punctuation.begin(), punctuation.end());
  } catch (const ps::EmptyBody&) {
    findings.push_back({"STRUCT-EMPTY", Severity::error,
                        "claim body is empty after trimming whitespace", {}});
  } catch (const ps::NoTransition& e) {
    findings.push_back({"STRUCT-NOTRANS", Severity::error, e.what(), {}});
  } catch (const ps::DomainError& e) {
    findings.push_back({"STRUCT-NOELEM", Severity::error, e.what(), {}});
  }
  try {
    AntecedentReport report = scan_antecedents(body);
    findings.insert(findings.end(), report.violations.begin(),
                    report.violations.end());
  } catch (const ps::EmptyBody&) {
    // already reported as STRUCT-EMPTY
  }
  return findings;
}

bool looks_like_dataset(const std::string& text) {
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

int cmd_lint(const CliConfig& config, const std::string& input,
             const std::string& which, bool print_rules) {
  if (print_rules) {
    std::cout << "# rule registry v" << ps::analyzer::kRuleRegistryVersion << "\n";
    for (const auto& rule : ps::analyzer::rule_registry()) {
      std::cout << rule.id << '\t' << rule.category << '\t'
                << ps::analyzer::to_string(rule.severity) << '\t' << rule.description
                << "\n";
    }
    return kExitOk;
  }

  std::string text = read_text_file(input);
  std::vector<std::pair<std::string, std::string>> claims;  // (label, body)
  if (looks_like_dataset(text)) {
    ps::data::LoadResult loaded = ps::data::load_dataset(input, config.strict);
    for (const auto& issue : loaded.issues)
      std::cerr << "warning: " << input << ":" << issue.line << ": " << issue.message
                << "\n";
    for (const ps::ClaimPair& pair : loaded.pairs) {
      if (which == "gold" || which == "both")
        claims.emplace_back(pair.patent_id + "\tgold", pair.gold.body);
      if (which == "generated" || which == "both")
        claims.emplace_back(pair.patent_id + "\tgenerated", pair.generated.body);
    }
  } else {
    if (trim_copy(text).empty())
      throw ps::UsageError("input file " + input + " contains no claim text");
    claims.emplace_back("", trim_copy(text));
  }
  if (claims.empty())
    throw ps::UsageError("no claims to lint in " + input);

  std::size_t error_findings = 0;
  for (const auto& [label, body] : claims) {
    if (!label.empty()) std::cout << "# " << label << "\n";
    for (const ps::analyzer::Finding& finding : lint_claim(body)) {
      std::cout << ps::analyzer::format_finding(finding) << "\n";
      if (finding.severity == ps::analyzer::Severity::error) ++error_findings;
    }
  }
  return error_findings == 0 ? kExitOk : kExitDomain;
}

// --- evaluate ----------------------------------------------------------

std::map<ps::MetricId, double> deterministic_scores(const std::string& body) {
  using namespace ps::analyzer;
  std::map<ps::MetricId, double> scores;
  // Parse failures band the structure dimension to the floor.
  static const RubricBands kStructureBands{{5.0, 1.0}};
  try {
    ParsedClaim parsed = parse_claim(body);
    scores[ps::MetricId::CS] = rule_score({}, kStructureBands);
    scores[ps::MetricId::CP] = rule_score(check_punctuation(parsed));
  } catch (const ps::DomainError&) {
    scores[ps::MetricId::CS] = kStructureBands.band_by_count.back();
  }
  try {
    scores[ps::MetricId::AB] = rule_score(scan_antecedents(body).violations);
  } catch (const ps::DomainError&) {
  }
  return scores;
}

int cmd_evaluate(const CliConfig& config, const std::string& dataset_path,
                 std::string out_path) {
  ps::data::LoadResult loaded = ps::data::load_dataset(dataset_path, config.strict);
  for (const auto& issue : loaded.issues)
    std::cerr << "warning: " << dataset_path << ":" << issue.line << ": "
              << issue.message << "\n";

  ps::WeightVector weights = resolve_weights(config.weight_mode);
  auto backend = make_semantic_backend(config);

  std::unique_ptr<ps::judge::ChatProvider> provider;
  std::optional<ps::judge::PromptLibrary> library;
  std::optional<ps::judge::EvaluationCache> cache;
  ps::judge::JudgeConfig judge_config = make_judge_config(config);
  if (!config.no_judge) {
    provider = make_provider(config);
    library = ps::judge::PromptLibrary::load(config.template_dir);
    if (!config.cache_dir.empty()) cache.emplace(config.cache_dir);
  }

  if (out_path.empty()) {
    fs::path stem = fs::path(dataset_path).stem();
    out_path = (fs::path(config.out_dir) / (stem.string() + ".run.jsonl")).string();
  }
  if (!fs::path(out_path).parent_path().empty())
    fs::create_directories(fs::path(out_path).parent_path());

  std::string timestamp = utc_timestamp();
  std::vector<ps::data::RunRecord> records;
  std::size_t provider_failures = 0;
  for (const ps::ClaimPair& pair : loaded.pairs) {
    try {
      ps::data::RunRecord record;
      record.patent_id = pair.patent_id;
      ps::semantic::SemanticScore semantic =
          ps::semantic::similarity(pair.gold, pair.generated, *backend);
      record.semantic_backend = semantic.backend_id;
      record.judge.timestamp = timestamp;

      if (config.no_judge) {
        std::map<ps::MetricId, double> scores = deterministic_scores(pair.generated.body);
        scores[ps::MetricId::BS] = semantic.rescaled;
        ps::scoring::PartialAggregate partial =
            ps::scoring::aggregate_available(scores, weights);
        record.mode = "deterministic-lint";
        record.scores = partial.components;
        record.weights = partial.weights;
        record.aggregate = partial.value;
      } else {
        std::map<ps::MetricId, ps::judge::MetricEvaluation> evaluations =
            ps::judge::evaluate_all(pair.generated, judge_config, *provider, *library,
                                    cache ? &*cache : nullptr);
        std::map<ps::MetricId, double> scores;
        for (const auto& [id, evaluation] : evaluations) scores[id] = evaluation.mean;
        scores[ps::MetricId::BS] = semantic.rescaled;
        ps::AggregateScore aggregate =
            ps::scoring::aggregate(ps::make_score_vector(scores), weights);
        record.mode = "judge";
        for (ps::MetricId id : ps::kAllMetrics) {
          record.scores[id] = aggregate.components[id];
          record.weights[id] = aggregate.weights[id];
        }
        record.aggregate = aggregate.value;
        record.judge.model = judge_config.model_name;
        record.judge.temperature = judge_config.temperature;
        record.judge.samples = judge_config.samples_per_metric;
        record.judge.template_version = library->version_tag();
      }
      records.push_back(std::move(record));
    } catch (const ps::AvailabilityError& e) {
      if (config.strict) throw;
      ++provider_failures;
      std::cerr << "error: " << pair.patent_id << ": " << e.what() << "\n";
    } catch (const ps::DomainError& e) {
      if (config.strict) throw;
      std::cerr << "error: " << pair.patent_id << ": " << e.what() << "\n";
    }
  }

  ps::data::save_run(records, out_path);
  std::cout << "evaluated " << records.size() << " of " << loaded.pairs.size()
            << " pair(s) -> " << out_path << "\n";
  return provider_failures > 0 ? kExitProvider : kExitOk;
}

// --- benchmark / agreement / weights / report ---------------------------

ordered_json correlation_to_json(const ps::stats::CorrelationReport& report) {
  return ordered_json{{"r", report.pearson_r},
                      {"rho", report.spearman_rho},
                      {"tau", report.kendall_tau},
                      {"mae", report.mae},
                      {"n", report.n}};
}

int cmd_benchmark(const std::string& run_path, const std::string& dataset_path,
                  bool as_json) {
  std::vector<ps::data::RunRecord> run = ps::data::load_run(run_path);
  ps::data::LoadResult loaded = ps::data::load_dataset(dataset_path, true);
  auto [predicted, expert] = ps::data::align(run, loaded.pairs);
  ps::stats::CorrelationReport report = ps::stats::correlate(predicted, expert);

  if (as_json) {
    std::cout << correlation_to_json(report).dump() << "\n";
  } else {
    std::cout << std::left << std::setw(12) << "n" << report.n << "\n"
              << std::setw(12) << "r" << std::setprecision(10) << report.pearson_r;
    if (report.n >= 3 && ps::stats::pearson_p_value(report.pearson_r, report.n) < 0.01)
      std::cout << "  (p < 0.01)";
    std::cout << "\n"
              << std::setw(12) << "rho" << report.spearman_rho << "\n"
              << std::setw(12) << "tau" << report.kendall_tau << "\n"
              << std::setw(12) << "mae" << report.mae << "\n";
  }
  return kExitOk;
}

int cmd_weights(const std::string& ablation_path, const std::string& out_path,
                bool as_json) {
  AblationFile file = load_ablation_file(ablation_path);
  ps::scoring::WeightDerivation derivation =
      ps::scoring::derive_weights(file.baseline, file.records);

  ordered_json weights = ordered_json::object();
  ordered_json deltas_r = ordered_json::object();
  ordered_json deltas_mae = ordered_json::object();
  for (ps::MetricId id : ps::kAllMetrics) {
    std::string key(ps::to_string(id));
    weights[key] = derivation.weights[id];
    deltas_r[key] = derivation.deltas_r.at(id);
    deltas_mae[key] = derivation.deltas_mae.at(id);
  }
  ordered_json output = {{"version", 1},
                         {"weights", weights},
                         {"derivation",
                          {{"deltas_r", deltas_r}, {"deltas_mae", deltas_mae}}}};

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ps::IoFailure("cannot write weight file " + out_path);
    out << output.dump(2) << "\n";
  }
  if (as_json || out_path.empty()) {
    std::cout << output.dump(2) << "\n";
  } else {
    std::cout << "weights";
    for (ps::MetricId id : ps::kAllMetrics)
      std::cout << "  " << ps::to_string(id) << "=" << std::fixed
                << std::setprecision(3) << derivation.weights[id];
    std::cout << std::defaultfloat << "\n-> " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_agreement(const std::string& dataset_path, bool as_json) {
  ps::data::LoadResult loaded = ps::data::load_dataset(dataset_path, true);
  auto matrix = ps::data::expert_score_matrix(loaded.pairs);
  ps::stats::ReliabilityReport report = ps::stats::reliability(matrix);

  ordered_json pairwise = ordered_json::object();
  for (const auto& [pair, r] : report.pairwise_pearson)
    pairwise["E" + std::to_string(pair.first + 1) + "-E" +
             std::to_string(pair.second + 1)] = r;
  ordered_json output = {{"cronbach_alpha", report.cronbach_alpha},
                         {"icc_3k", report.icc_3k},
                         {"krippendorff_alpha", report.krippendorff_alpha},
                         {"pairwise_pearson", pairwise}};
  if (as_json) {
    std::cout << output.dump() << "\n";
  } else {
    std::cout << std::setprecision(10) << "cronbach_alpha      "
              << report.cronbach_alpha << "\n"
              << "icc_3k              " << report.icc_3k << "\n"
              << "krippendorff_alpha  " << report.krippendorff_alpha << "\n";
    for (const auto& [pair, r] : report.pairwise_pearson)
      std::cout << "pearson E" << pair.first + 1 << "-E" << pair.second + 1 << "     "
                << r << "\n";
  }
  return kExitOk;
}

int cmd_generate(const CliConfig& config, const std::string& title_path,
                 const std::string& abstract_path, const std::string& description_path,
                 const std::string& out_path) {
  std::string title = trim_copy(read_text_file(title_path));
  if (title.empty()) throw ps::UsageError("title file is empty");
  std::string abstract =
      abstract_path.empty() ? "" : trim_copy(read_text_file(abstract_path));
  std::string description =
      description_path.empty() ? "" : trim_copy(read_text_file(description_path));

  auto provider = make_provider(config);
  ps::judge::PromptLibrary library = ps::judge::PromptLibrary::load(config.template_dir);
  ps::ClaimText claim = ps::judge::generate_claim(
      title, abstract, description, make_judge_config(config), *provider, library);

  if (out_path.empty()) {
    std::cout << claim.body << "\n";
  } else {
    if (!fs::path(out_path).parent_path().empty())
      fs::create_directories(fs::path(out_path).parent_path());
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ps::IoFailure("cannot write " + out_path);
    out << claim.body << "\n";
    std::cout << "-> " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_report(const std::string& run_path, const std::string& dataset_path) {
  std::vector<ps::data::RunRecord> run = ps::data::load_run(run_path);
  std::cout << "run file        " << run_path << "\n"
            << "records         " << run.size() << "\n";
  if (!run.empty()) {
    double sum = 0.0, lo = run.front().aggregate, hi = run.front().aggregate;
    std::map<ps::MetricId, std::pair<double, std::size_t>> metric_sums;
    for (const auto& record : run) {
      sum += record.aggregate;
      lo = std::min(lo, record.aggregate);
      hi = std::max(hi, record.aggregate);
      for (const auto& [id, score] : record.scores) {
        metric_sums[id].first += score;
        metric_sums[id].second += 1;
      }
    }
    std::cout << std::setprecision(4) << "aggregate mean  "
              << sum / static_cast<double>(run.size()) << "  (min " << lo << ", max "
              << hi << ")\n";
    for (const auto& [id, acc] : metric_sums)
      std::cout << "mean " << ps::to_string(id) << "         "
                << acc.first / static_cast<double>(acc.second) << "  (" << acc.second
                << " record(s))\n";
  }
  if (!dataset_path.empty()) {
    ps::data::LoadResult loaded = ps::data::load_dataset(dataset_path, true);
    ps::data::BalanceReport balance = ps::data::check_balance(loaded.pairs);
    for (const auto& [section, count] : balance.section_counts)
      std::cout << "section " << (section.empty() ? "(none)" : section) << "     "
                << count << " record(s)\n";
    for (const std::string& warning : balance.warnings)
      std::cout << "note: " << warning << "\n";
    auto [predicted, expert] = ps::data::align(run, loaded.pairs);
    ps::stats::CorrelationReport report = ps::stats::correlate(predicted, expert);
    std::cout << "benchmark       " << correlation_to_json(report).dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig config;

  // --config applies first so flags and environment can override it.
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    try {
      if (arg == "--config" && i + 1 < argc) {
        apply_config_file(config, argv[i + 1]);
      } else if (arg.starts_with("--config=")) {
        apply_config_file(config, arg.substr(9));
      } else {
        continue;
      }
    } catch (const ps::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  apply_environment(config);

  CLI::App app{"patent Claim 1 evaluation toolkit"};
  app.require_subcommand(1);
  std::string config_path;  // consumed above; declared so CLI11 accepts it
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--weights", config.weight_mode,
                 "paper | uniform | derived:<file> | explicit:<file>");
  app.add_option("--out", config.out_dir, "default output directory");
  app.add_option("--templates", config.template_dir, "prompt template directory");
  app.add_option("--cache", config.cache_dir, "evaluation cache directory");
  app.add_option("--parallelism", config.parallelism, "concurrent judge requests");
  auto* strict_flag =
      app.add_flag("--strict", "abort on the first malformed record or failure");
  auto* lenient_flag = app.add_flag("--lenient", "skip failures and keep going");
  app.add_flag("--no-judge", config.no_judge,
               "deterministic lint scoring only; no provider calls");

  std::string lint_input, lint_which = "generated";
  bool lint_print_rules = false;
  CLI::App* lint = app.add_subcommand("lint", "deterministic structural findings");
  lint->add_option("input", lint_input, "dataset (JSONL) or single claim text file");
  lint->add_option("--which", lint_which, "gold | generated | both")
      ->check(CLI::IsMember({"gold", "generated", "both"}));
  lint->add_flag("--print-rules", lint_print_rules, "print the rule registry and exit");

  std::string eval_dataset, eval_out;
  CLI::App* evaluate = app.add_subcommand("evaluate", "score a dataset of claim pairs");
  evaluate->add_option("dataset", eval_dataset, "dataset JSONL file")->required();
  evaluate->add_option("--out", eval_out, "run file to write");

  std::string bench_run, bench_dataset;
  bool bench_json = false;
  CLI::App* benchmark =
      app.add_subcommand("benchmark", "correlate a run against expert annotations");
  benchmark->add_option("--run", bench_run, "run JSONL file")->required();
  benchmark->add_option("--dataset", bench_dataset, "dataset JSONL file")->required();
  benchmark->add_flag("--json", bench_json, "print a flat JSON record");

  std::string weights_ablation, weights_out;
  bool weights_json = false;
  CLI::App* weights =
      app.add_subcommand("weights", "derive component weights from ablation results");
  weights->add_option("--ablation", weights_ablation, "ablation results JSON file")
      ->required();
  weights->add_option("--out", weights_out, "weight file to write");
  weights->add_flag("--json", weights_json, "print the full derivation as JSON");

  std::string agree_dataset;
  bool agree_json = false;
  CLI::App* agreement =
      app.add_subcommand("agreement", "inter-rater reliability of expert scores");
  agreement->add_option("--dataset", agree_dataset, "dataset JSONL file")->required();
  agreement->add_flag("--json", agree_json, "print a flat JSON record");

  std::string gen_title, gen_abstract, gen_description, gen_out;
  CLI::App* generate = app.add_subcommand("generate", "draft a Claim 1 via the provider");
  generate->add_option("--title", gen_title, "title text file")->required();
  generate->add_option("--abstract", gen_abstract, "abstract text file");
  generate->add_option("--description", gen_description, "description text file");
  generate->add_option("--out", gen_out, "output claim file");

  std::string report_run, report_dataset;
  CLI::App* report = app.add_subcommand("report", "summarize a run file");
  report->add_option("--run", report_run, "run JSONL file")->required();
  report->add_option("--dataset", report_dataset, "dataset for benchmark context");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (strict_flag->count() > 0 && lenient_flag->count() > 0) {
    std::cerr << "error: --strict and --lenient are mutually exclusive\n";
    return kExitUsage;
  }
  if (lenient_flag->count() > 0) config.strict = false;

  try {
    if (lint->parsed()) {
      if (!lint_print_rules && lint_input.empty())
        throw ps::UsageError("lint needs an input file (or --print-rules)");
      return cmd_lint(config, lint_input, lint_which, lint_print_rules);
    }
    if (evaluate->parsed()) return cmd_evaluate(config, eval_dataset, eval_out);
    if (benchmark->parsed()) return cmd_benchmark(bench_run, bench_dataset, bench_json);
    if (weights->parsed()) return cmd_weights(weights_ablation, weights_out, weights_json);
    if (agreement->parsed()) return cmd_agreement(agree_dataset, agree_json);
    if (generate->parsed())
      return cmd_generate(config, gen_title, gen_abstract, gen_description, gen_out);
    if (report->parsed()) return cmd_report(report_run, report_dataset);
    return kExitUsage;
  } catch (const ps::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ps::AvailabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProvider;
  } catch (const ps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

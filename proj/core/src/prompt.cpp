#include "patentscore/prompt.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "patentscore/errors.hpp"

namespace patentscore::judge {

namespace {

std::string trim(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FileNotFound(file.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::optional<std::size_t> section_index(std::string_view name) {
  for (std::size_t i = 0; i < kSectionNames.size(); ++i) {
    if (kSectionNames[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace

std::string substitute_placeholders(std::string_view text,
                                    const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t open = text.find("{{", pos);
    if (open == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    std::size_t close = text.find("}}", open + 2);
    if (close == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, open - pos));
    std::string key = trim(text.substr(open + 2, close - open - 2));
    auto it = values.find(key);
    if (it == values.end()) throw UnresolvedPlaceholder(key);
    out.append(it->second);
    pos = close + 2;
  }
  return out;
}

PromptTemplate parse_template(std::string_view text) {
  PromptTemplate tmpl;
  bool metric_seen = false;
  std::array<bool, kSectionNames.size()> section_seen{};
  std::optional<std::size_t> current;

  std::istringstream stream{std::string(text)};
  std::string line;
  std::array<std::string, kSectionNames.size()> sections;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!current && !line.empty() && line.front() == '#') {
      std::string header = trim(line.substr(1));
      if (header.starts_with("metric:")) {
        std::string value = trim(header.substr(7));
        auto metric = parse_metric(value);
        if (!metric) throw TemplateFormatError("unknown metric id \"" + value + "\"");
        tmpl.metric = *metric;
        metric_seen = true;
      } else if (header.starts_with("version:")) {
        tmpl.version = std::stoi(trim(header.substr(8)));
      }
      continue;
    }
    if (line.size() >= 2 && line.front() == '[' && line.back() == ']') {
      std::string name = trim(line.substr(1, line.size() - 2));
      auto index = section_index(name);
      if (!index) throw TemplateFormatError("unknown section [" + name + "]");
      if (section_seen[*index])
        throw TemplateFormatError("duplicate section [" + name + "]");
      section_seen[*index] = true;
      current = index;
      continue;
    }
    if (current) {
      sections[*current] += line;
      sections[*current] += '\n';
    } else if (!trim(line).empty()) {
      throw TemplateFormatError("content before the first [section] header");
    }
  }

  if (!metric_seen) throw TemplateFormatError("missing \"# metric:\" header");
  for (std::size_t i = 0; i < kSectionNames.size(); ++i) {
    if (!section_seen[i])
      throw TemplateFormatError("missing section [" + std::string(kSectionNames[i]) + "]");
    tmpl.sections[i] = trim(sections[i]);
  }
  return tmpl;
}

PromptTemplate load_template(const std::filesystem::path& file) {
  return parse_template(read_file(file));
}

std::string render_prompt(const PromptTemplate& tmpl, const ClaimText& claim) {
  if (trim(claim.body).empty()) throw EmptyBody();
  std::string joined;
  for (std::size_t i = 0; i < tmpl.sections.size(); ++i) {
    if (i > 0) joined += "\n\n";
    joined += tmpl.sections[i];
  }
  return substitute_placeholders(joined, {{"claim_body", claim.body}});
}

GenerationTemplate load_generation_template(const std::filesystem::path& file) {
  std::string text = read_file(file);
  GenerationTemplate tmpl;
  std::istringstream stream(text);
  std::string line;
  std::string body;
  bool in_header = true;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (in_header && !line.empty() && line.front() == '#') {
      std::string header = trim(line.substr(1));
      if (header.starts_with("version:")) tmpl.version = std::stoi(trim(header.substr(8)));
      continue;
    }
    if (in_header && trim(line).empty()) continue;
    in_header = false;
    body += line;
    body += '\n';
  }
  tmpl.text = trim(body);
  if (tmpl.text.empty()) throw TemplateFormatError("generation template is empty");
  return tmpl;
}

std::string render_generation_prompt(const GenerationTemplate& tmpl,
                                     const std::string& title,
                                     const std::string& abstract,
                                     const std::string& description) {
  return substitute_placeholders(
      tmpl.text,
      {{"title", title}, {"abstract", abstract}, {"description", description}});
}

PromptLibrary PromptLibrary::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw FileNotFound(dir.string() + " (template directory)");

  PromptLibrary library;
  std::array<int, 6> metric_versions;
  metric_versions.fill(-1);
  int generation_version = -1;

  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    std::string text = read_file(entry.path());
    if (text.find("# metric:") != std::string::npos) {
      PromptTemplate tmpl = parse_template(text);
      std::size_t index = metric_index(tmpl.metric);
      if (index >= 6)
        throw TemplateFormatError("BS is scored by the semantic backend, not a prompt");
      if (tmpl.version > metric_versions[index]) {
        metric_versions[index] = tmpl.version;
        library.metric_templates_[index] = std::move(tmpl);
      }
    } else {
      GenerationTemplate tmpl = load_generation_template(entry.path());
      if (tmpl.version > generation_version) {
        generation_version = tmpl.version;
        library.generation_ = std::move(tmpl);
      }
    }
  }

  for (MetricId id : kJudgeMetrics) {
    if (metric_versions[metric_index(id)] < 0)
      throw TemplateFormatError("no template for metric " + std::string(to_string(id)) +
                                " in " + dir.string());
  }
  if (generation_version < 0)
    throw TemplateFormatError("no generation template in " + dir.string());
  return library;
}

const PromptTemplate& PromptLibrary::metric_template(MetricId id) const {
  std::size_t index = metric_index(id);
  if (index >= metric_templates_.size())
    throw DomainError("metric " + std::string(to_string(id)) +
                      " has no prompt template");
  return metric_templates_[index];
}

std::string PromptLibrary::version_tag() const {
  std::string tag;
  for (MetricId id : kJudgeMetrics) {
    if (!tag.empty()) tag += ',';
    std::string name(to_string(id));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    tag += name + ":" + std::to_string(metric_templates_[metric_index(id)].version);
  }
  return tag;
}

}  // namespace patentscore::judge

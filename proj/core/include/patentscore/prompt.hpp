#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "patentscore/claim.hpp"
#include "patentscore/metric.hpp"

namespace patentscore::judge {

/// Section order of every metric template file.
inline constexpr std::array<std::string_view, 6> kSectionNames = {
    "overview", "key_points", "notes", "standard_examples", "procedure", "rubric"};

/// A rubric prompt for one judge metric, parsed from its versioned text file.
/// Placeholders use the {{name}} form; metric templates take {{claim_body}}.
struct PromptTemplate {
  MetricId metric = MetricId::CS;
  int version = 1;
  std::array<std::string, kSectionNames.size()> sections;
};

/// Parses the `# metric:` / `# version:` header and the six `[section]`
/// blocks. Throws TemplateFormatError.
PromptTemplate parse_template(std::string_view text);

PromptTemplate load_template(const std::filesystem::path& file);

/// Joins the sections and substitutes {{claim_body}}; byte-identical output
/// for identical inputs. Throws UnresolvedPlaceholder when a {{...}} survives
/// substitution.
std::string render_prompt(const PromptTemplate& tmpl, const ClaimText& claim);

/// The claim-drafting prompt; takes {{title}}, {{abstract}}, {{description}}.
struct GenerationTemplate {
  int version = 1;
  std::string text;
};

GenerationTemplate load_generation_template(const std::filesystem::path& file);

std::string render_generation_prompt(const GenerationTemplate& tmpl,
                                     const std::string& title,
                                     const std::string& abstract,
                                     const std::string& description);

/// Substitutes every {{key}} from the map; throws UnresolvedPlaceholder if a
/// placeholder remains afterwards.
std::string substitute_placeholders(std::string_view text,
                                    const std::map<std::string, std::string>& values);

/// The six metric templates plus the generation template, loaded from a
/// directory of `<metric>.v<N>.txt` / `generate.v<N>.txt` files (highest
/// version per name wins).
class PromptLibrary {
 public:
  static PromptLibrary load(const std::filesystem::path& dir);

  const PromptTemplate& metric_template(MetricId id) const;
  const GenerationTemplate& generation() const { return generation_; }

  /// Joined per-metric versions, e.g. "cs:1,cp:1,..."; part of the cache key.
  std::string version_tag() const;

 private:
  std::array<PromptTemplate, 6> metric_templates_;  // indexed by metric_index
  GenerationTemplate generation_;
};

}  // namespace patentscore::judge

#include "patentscore/prompt.hpp"

#include <gtest/gtest.h>

#include "patentscore/errors.hpp"

using namespace patentscore;
using namespace patentscore::judge;

namespace {

const char* kTemplateDir = PATENTSCORE_TEMPLATE_DIR;

ClaimText exemplar() {
  return make_claim_text(
      "P1",
      "A device for processing data, comprising: a memory configured to store data; "
      "a processor coupled to the memory; and an interface connected to the "
      "processor.",
      Provenance::generated);
}

TEST(PromptLibrary, LoadsAllSevenTemplates) {
  PromptLibrary library = PromptLibrary::load(kTemplateDir);
  for (MetricId id : kJudgeMetrics) {
    const PromptTemplate& tmpl = library.metric_template(id);
    EXPECT_EQ(tmpl.metric, id);
    EXPECT_EQ(tmpl.version, 1);
  }
  EXPECT_EQ(library.generation().version, 1);
  EXPECT_EQ(library.version_tag(), "cs:1,cp:1,ab:1,er:1,vu:1,as:1");
}

TEST(RenderPrompt, ContainsRubricLinesAndClaim) {
  PromptLibrary library = PromptLibrary::load(kTemplateDir);
  std::string rendered = render_prompt(library.metric_template(MetricId::CS), exemplar());
  EXPECT_NE(rendered.find("5: Exceeds all requirements with exceptional clarity"),
            std::string::npos);
  EXPECT_NE(rendered.find("1: Fails to meet critical requirements"), std::string::npos);
  EXPECT_NE(rendered.find(exemplar().body), std::string::npos);
  EXPECT_EQ(rendered.find("{{"), std::string::npos);
}

TEST(RenderPrompt, ByteIdenticalAcrossCalls) {
  PromptLibrary library = PromptLibrary::load(kTemplateDir);
  const PromptTemplate& tmpl = library.metric_template(MetricId::CP);
  EXPECT_EQ(render_prompt(tmpl, exemplar()), render_prompt(tmpl, exemplar()));
}

TEST(RenderPrompt, UnresolvedPlaceholderIsRejected) {
  PromptTemplate tmpl;
  tmpl.metric = MetricId::CS;
  tmpl.sections.fill("text");
  tmpl.sections[5] = "claim: {{claim_bod}}";  // typo'd placeholder
  try {
    render_prompt(tmpl, exemplar());
    FAIL() << "expected UnresolvedPlaceholder";
  } catch (const UnresolvedPlaceholder& e) {
    EXPECT_EQ(e.placeholder(), "claim_bod");
  }
}

TEST(ParseTemplate, RequiresAllSections) {
  EXPECT_THROW(parse_template("# metric: CS\n[overview]\nonly one section\n"),
               TemplateFormatError);
  EXPECT_THROW(parse_template("[overview]\nno metric header\n"), TemplateFormatError);
  EXPECT_THROW(parse_template("# metric: ZZ\n"), TemplateFormatError);
}

TEST(ParseTemplate, MinimalTemplateRoundTrips) {
  std::string text =
      "# metric: AS\n# version: 3\n\n[overview]\nO\n[key_points]\nK\n[notes]\nN\n"
      "[standard_examples]\nS\n[procedure]\nP\n[rubric]\nR {{claim_body}}\n";
  PromptTemplate tmpl = parse_template(text);
  EXPECT_EQ(tmpl.metric, MetricId::AS);
  EXPECT_EQ(tmpl.version, 3);
  std::string rendered = render_prompt(tmpl, exemplar());
  EXPECT_NE(rendered.find("R A device"), std::string::npos);
}

TEST(GenerationTemplate, ContainsNumberedCriteria) {
  PromptLibrary library = PromptLibrary::load(kTemplateDir);
  std::string rendered = render_generation_prompt(
      library.generation(), "A widget", "An abstract.", "A description.");
  EXPECT_NE(rendered.find("1. Clarity"), std::string::npos);
  EXPECT_NE(rendered.find("2. Legal Validity"), std::string::npos);
  EXPECT_NE(rendered.find("3. Breadth & Differentiation"), std::string::npos);
  EXPECT_NE(rendered.find("4. Technical Accuracy"), std::string::npos);
  EXPECT_NE(rendered.find("5. Structural Integrity"), std::string::npos);
  EXPECT_NE(rendered.find("A widget"), std::string::npos);
  EXPECT_NE(rendered.find("An abstract."), std::string::npos);
  EXPECT_EQ(rendered.find("{{"), std::string::npos);
}

TEST(SubstitutePlaceholders, WhitespaceInsideBracesTolerated) {
  std::string out = substitute_placeholders("x {{ key }} y", {{"key", "V"}});
  EXPECT_EQ(out, "x V y");
}

}  // namespace

#include "patentscore/rules.hpp"

namespace patentscore::analyzer {

const std::vector<RuleInfo>& rule_registry() {
  static const std::vector<RuleInfo> registry = {
      {"STRUCT-EMPTY", "structure", Severity::error,
       "claim body is empty after trimming whitespace"},
      {"STRUCT-NOTRANS", "structure", Severity::error,
       "no transitional phrase (comprising, consisting of, ...) found"},
      {"STRUCT-NOELEM", "structure", Severity::error,
       "no elements found after the transitional phrase"},
      {"PUNC-COLON", "punctuation", Severity::error,
       "no colon after the transitional phrase"},
      {"PUNC-SEMI", "punctuation", Severity::error,
       "an element is not terminated by a semicolon"},
      {"PUNC-AND", "punctuation", Severity::error,
       "missing \"and\" before the last element"},
      {"PUNC-PERIOD", "punctuation", Severity::error,
       "claim does not end with a period"},
      {"AB-NOANTE", "antecedent", Severity::error,
       "definite reference (\"the X\"/\"said X\") without an earlier \"a X\"/\"an X\""},
      {"AB-REINTRO", "antecedent", Severity::warning,
       "an already-introduced element is reintroduced with \"a\"/\"an\""},
  };
  return registry;
}

const RuleInfo* find_rule(std::string_view id) {
  for (const RuleInfo& rule : rule_registry()) {
    if (rule.id == id) return &rule;
  }
  return nullptr;
}

}  // namespace patentscore::analyzer

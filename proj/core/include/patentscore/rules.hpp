#pragma once

#include <string_view>
#include <vector>

#include "patentscore/analyzer.hpp"

namespace patentscore::analyzer {

inline constexpr std::string_view kRuleRegistryVersion = "1";

struct RuleInfo {
  std::string_view id;
  std::string_view category;  // structure | punctuation | antecedent
  Severity severity;
  std::string_view description;
};

/// The published rule table, version kRuleRegistryVersion. Every Finding
/// emitted by this library carries one of these ids.
const std::vector<RuleInfo>& rule_registry();

const RuleInfo* find_rule(std::string_view id);

}  // namespace patentscore::analyzer

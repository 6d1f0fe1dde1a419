#include "patentscore/metric.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace patentscore {

std::string_view to_string(MetricId id) {
  switch (id) {
    case MetricId::CS: return "CS";
    case MetricId::CP: return "CP";
    case MetricId::AB: return "AB";
    case MetricId::ER: return "ER";
    case MetricId::VU: return "VU";
    case MetricId::AS: return "AS";
    case MetricId::BS: return "BS";
  }
  return "??";
}

std::string_view metric_description(MetricId id) {
  switch (id) {
    case MetricId::CS: return "claim structure";
    case MetricId::CP: return "claim punctuation";
    case MetricId::AB: return "antecedent basis";
    case MetricId::ER: return "element referencing";
    case MetricId::VU: return "validity and uniqueness";
    case MetricId::AS: return "ambiguous scope";
    case MetricId::BS: return "semantic similarity";
  }
  return "unknown";
}

std::optional<MetricId> parse_metric(std::string_view token) {
  std::string upper(token);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (MetricId id : kAllMetrics) {
    if (upper == to_string(id)) return id;
  }
  return std::nullopt;
}

}  // namespace patentscore

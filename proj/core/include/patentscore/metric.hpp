#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace patentscore {

/// The seven evaluation dimensions, in canonical order.
enum class MetricId : std::uint8_t { CS, CP, AB, ER, VU, AS, BS };

inline constexpr std::size_t kMetricCount = 7;

/// Canonical iteration order; stable across the library.
inline constexpr std::array<MetricId, kMetricCount> kAllMetrics = {
    MetricId::CS, MetricId::CP, MetricId::AB, MetricId::ER,
    MetricId::VU, MetricId::AS, MetricId::BS};

/// Dimensions scored by the rubric judge; BS comes from the semantic backend.
inline constexpr std::array<MetricId, 6> kJudgeMetrics = {
    MetricId::CS, MetricId::CP, MetricId::AB,
    MetricId::ER, MetricId::VU, MetricId::AS};

constexpr std::size_t metric_index(MetricId id) {
  return static_cast<std::size_t>(id);
}

std::string_view to_string(MetricId id);

/// Long descriptive name, e.g. "claim structure" for CS.
std::string_view metric_description(MetricId id);

/// Case-insensitive parse of the two-letter id; nullopt when unknown.
std::optional<MetricId> parse_metric(std::string_view token);

}  // namespace patentscore

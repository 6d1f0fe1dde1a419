#include "patentscore/score.hpp"

#include <cmath>

#include "patentscore/errors.hpp"

namespace patentscore {

ScoreVector make_score_vector(const std::map<MetricId, double>& scores) {
  std::array<double, kMetricCount> values{};
  for (MetricId id : kAllMetrics) {
    auto it = scores.find(id);
    if (it == scores.end()) throw MissingMetric(id);
    values[metric_index(id)] = it->second;
  }
  return make_score_vector(values);
}

ScoreVector make_score_vector(const std::array<double, kMetricCount>& values) {
  for (MetricId id : kAllMetrics) {
    double v = values[metric_index(id)];
    if (!(v >= ScoreVector::kMin && v <= ScoreVector::kMax))
      throw ScoreOutOfRange(id, v);
  }
  return ScoreVector(values);
}

WeightVector WeightVector::uniform() {
  std::array<double, kMetricCount> w{};
  w.fill(1.0 / static_cast<double>(kMetricCount));
  return WeightVector(w);
}

WeightVector make_weight_vector(const std::array<double, kMetricCount>& weights) {
  double sum = 0.0;
  for (MetricId id : kAllMetrics) {
    double w = weights[metric_index(id)];
    if (!(w >= 0.0))
      throw InvalidWeights("weight for " + std::string(to_string(id)) +
                           " is negative or not a number");
    sum += w;
  }
  if (std::abs(sum - 1.0) > WeightVector::kSumTolerance)
    throw InvalidWeights("weights sum to " + std::to_string(sum) + ", expected 1");
  return WeightVector(weights);
}

WeightVector make_weight_vector(const std::map<MetricId, double>& weights) {
  std::array<double, kMetricCount> values{};
  for (MetricId id : kAllMetrics) {
    auto it = weights.find(id);
    if (it == weights.end()) throw MissingMetric(id);
    values[metric_index(id)] = it->second;
  }
  return make_weight_vector(values);
}

}  // namespace patentscore

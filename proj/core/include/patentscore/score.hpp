#pragma once

#include <array>
#include <map>

#include "patentscore/metric.hpp"

namespace patentscore {

/// One score per metric, each within [1, 5]. Immutable once built.
class ScoreVector {
 public:
  static constexpr double kMin = 1.0;
  static constexpr double kMax = 5.0;

  double operator[](MetricId id) const { return values_[metric_index(id)]; }
  const std::array<double, kMetricCount>& values() const { return values_; }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  friend ScoreVector make_score_vector(const std::array<double, kMetricCount>&);
  explicit ScoreVector(const std::array<double, kMetricCount>& values) : values_(values) {}

  std::array<double, kMetricCount> values_;
};

/// Validates completeness and range; out-of-range values are rejected, never
/// clamped. Throws MissingMetric / ScoreOutOfRange.
ScoreVector make_score_vector(const std::map<MetricId, double>& scores);
ScoreVector make_score_vector(const std::array<double, kMetricCount>& values);

/// Non-negative weights summing to 1 within 1e-6. Immutable once built.
class WeightVector {
 public:
  static constexpr double kSumTolerance = 1e-6;

  static WeightVector uniform();

  double operator[](MetricId id) const { return weights_[metric_index(id)]; }
  const std::array<double, kMetricCount>& values() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  friend WeightVector make_weight_vector(const std::array<double, kMetricCount>&);
  explicit WeightVector(const std::array<double, kMetricCount>& weights) : weights_(weights) {}

  std::array<double, kMetricCount> weights_;
};

/// Throws InvalidWeights on negative entries or a sum away from 1.
WeightVector make_weight_vector(const std::array<double, kMetricCount>& weights);
WeightVector make_weight_vector(const std::map<MetricId, double>& weights);

/// A weighted sum of component scores, kept with its inputs for audit.
struct AggregateScore {
  double value = 0.0;
  ScoreVector components;
  WeightVector weights;
};

}  // namespace patentscore

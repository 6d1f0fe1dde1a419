#pragma once

#include <map>
#include <span>

#include "patentscore/score.hpp"

namespace patentscore::scoring {

/// Evaluator performance with one metric removed.
struct AblationRecord {
  MetricId metric = MetricId::CS;
  double r_without = 0.0;    // Pearson r of the ablated evaluator
  double mae_without = 0.0;  // MAE of the ablated evaluator
};

/// Performance of the full evaluator, all seven metrics in.
struct BaselinePerformance {
  double r_full = 0.0;
  double mae_full = 0.0;
};

/// Weights with the per-metric deltas they were derived from.
struct WeightDerivation {
  std::map<MetricId, double> deltas_r;    // r_full - r_without
  std::map<MetricId, double> deltas_mae;  // mae_without - mae_full
  WeightVector weights;
};

/// w_i = (dr_i + dmae_i) / sum_j (dr_j + dmae_j) over a complete set of seven
/// ablation records. Throws NegativeContribution when a metric's delta sum is
/// negative, DegenerateDenominator when the total is not positive.
WeightDerivation derive_weights(const BaselinePerformance& baseline,
                                std::span<const AblationRecord> ablations);

/// Weighted sum of the component scores.
AggregateScore aggregate(const ScoreVector& scores, const WeightVector& weights);

/// The published reference weight vector
/// (CS .166, CP .171, AB .167, ER .163, VU .159, AS .173, BS .001).
WeightVector published_weights();

/// Aggregation over a subset of metrics with the weights renormalized to the
/// present ones; used by the deterministic lint mode where some dimensions
/// are absent.
struct PartialAggregate {
  double value = 0.0;
  std::map<MetricId, double> components;
  std::map<MetricId, double> weights;  // renormalized
};

PartialAggregate aggregate_available(const std::map<MetricId, double>& scores,
                                     const WeightVector& weights);

}  // namespace patentscore::scoring

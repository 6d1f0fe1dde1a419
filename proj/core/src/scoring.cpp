#include "patentscore/scoring.hpp"

#include <set>

#include "patentscore/errors.hpp"

namespace patentscore::scoring {

WeightDerivation derive_weights(const BaselinePerformance& baseline,
                                std::span<const AblationRecord> ablations) {
  if (ablations.size() != kMetricCount)
    throw DomainError("expected " + std::to_string(kMetricCount) +
                      " ablation records, got " + std::to_string(ablations.size()));
  std::set<MetricId> seen;
  for (const auto& record : ablations) {
    if (!seen.insert(record.metric).second)
      throw DomainError("duplicate ablation record for " +
                        std::string(to_string(record.metric)));
  }

  std::map<MetricId, double> deltas_r, deltas_mae;
  std::vector<std::pair<MetricId, double>> negative;
  double total = 0.0;
  for (const auto& record : ablations) {
    double dr = baseline.r_full - record.r_without;
    double dmae = record.mae_without - baseline.mae_full;
    deltas_r[record.metric] = dr;
    deltas_mae[record.metric] = dmae;
    double contribution = dr + dmae;
    if (contribution < 0.0) negative.emplace_back(record.metric, contribution);
    total += contribution;
  }
  if (!negative.empty()) throw NegativeContribution(std::move(negative));
  if (total <= 0.0) throw DegenerateDenominator(total);

  std::map<MetricId, double> weights;
  for (MetricId id : kAllMetrics)
    weights[id] = (deltas_r.at(id) + deltas_mae.at(id)) / total;
  return WeightDerivation{std::move(deltas_r), std::move(deltas_mae),
                          make_weight_vector(weights)};
}

AggregateScore aggregate(const ScoreVector& scores, const WeightVector& weights) {
  double value = 0.0;
  for (MetricId id : kAllMetrics) value += weights[id] * scores[id];
  return AggregateScore{value, scores, weights};
}

WeightVector published_weights() {
  // CS, CP, AB, ER, VU, AS, BS; sums to 1.000 exactly.
  return make_weight_vector(
      std::array<double, kMetricCount>{0.166, 0.171, 0.167, 0.163, 0.159, 0.173, 0.001});
}

PartialAggregate aggregate_available(const std::map<MetricId, double>& scores,
                                     const WeightVector& weights) {
  if (scores.empty()) throw DomainError("no metric scores to aggregate");
  double weight_sum = 0.0;
  for (const auto& [id, score] : scores) {
    if (!(score >= ScoreVector::kMin && score <= ScoreVector::kMax))
      throw ScoreOutOfRange(id, score);
    weight_sum += weights[id];
  }
  if (weight_sum <= 0.0)
    throw DomainError("available metrics carry zero total weight");

  PartialAggregate result;
  for (const auto& [id, score] : scores) {
    double w = weights[id] / weight_sum;
    result.weights[id] = w;
    result.components[id] = score;
    result.value += w * score;
  }
  return result;
}

}  // namespace patentscore::scoring

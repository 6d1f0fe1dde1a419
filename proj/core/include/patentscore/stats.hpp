#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace patentscore::stats {

/// Alignment of one evaluator against expert means over n claim pairs.
struct CorrelationReport {
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
  double kendall_tau = 0.0;
  double mae = 0.0;
  std::size_t n = 0;
};

/// Product-moment correlation. Throws LengthMismatch, ZeroVariance; requires
/// length >= 2.
double pearson(std::span<const double> x, std::span<const double> y);

/// Average ranks (ties averaged), 1-based.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson over average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

/// Tau-b with tie correction, computed in O(n log n) via merge counting.
/// Throws LengthMismatch, AllTied.
double kendall(std::span<const double> x, std::span<const double> y);

/// Mean absolute error; requires equal lengths >= 1.
double mae(std::span<const double> x, std::span<const double> y);

/// All four indicators in one pass.
CorrelationReport correlate(std::span<const double> predicted,
                            std::span<const double> expert_means);

/// Two-sided significance of a Pearson r via the t approximation with n-2
/// degrees of freedom.
double pearson_p_value(double r, std::size_t n);

/// Ratings matrix: one row per rater, one column per item.
using RatingsMatrix = std::vector<std::vector<double>>;

/// Rows may have missing cells; used where pairwise computation permits it.
using SparseRatings = std::vector<std::vector<std::optional<double>>>;

/// alpha = k/(k-1) * (1 - sum of rater variances / variance of rater sums),
/// raters acting as the scale items. Throws DegenerateVariance.
double cronbach_alpha(const RatingsMatrix& ratings);

/// Two-way mixed, consistency, average-measures ICC: (MS_items - MS_error) /
/// MS_items from the two-way ANOVA decomposition.
double icc_3k(const RatingsMatrix& ratings);

/// Interval-distance Krippendorff alpha over a coincidence matrix; cells may
/// be missing, items with fewer than two ratings are dropped.
/// Throws InsufficientPairs.
double krippendorff_alpha(const SparseRatings& ratings);

struct ReliabilityReport {
  double cronbach_alpha = 0.0;
  double icc_3k = 0.0;
  double krippendorff_alpha = 0.0;
  /// All unordered rater pairs (i < j) with their Pearson correlation.
  std::map<std::pair<std::size_t, std::size_t>, double> pairwise_pearson;
};

/// Cronbach/ICC over items rated by every rater, Krippendorff over all items,
/// pairwise Pearson over each pair's complete items.
ReliabilityReport reliability(const SparseRatings& ratings);

}  // namespace patentscore::stats

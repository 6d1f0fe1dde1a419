#include "patentscore/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "patentscore/errors.hpp"

namespace patentscore::stats {

namespace {

void require_same_length(std::span<const double> x, std::span<const double> y,
                         std::size_t minimum) {
  if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
  if (x.size() < minimum)
    throw DomainError("need at least " + std::to_string(minimum) + " observations");
}

double sample_variance(std::span<const double> values) {
  double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

/// Stable merge counting strict inversions (left > right) in-place.
std::uint64_t merge_count(std::vector<double>& values, std::vector<double>& buffer,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t count = merge_count(values, buffer, lo, mid) +
                        merge_count(values, buffer, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (values[j] < values[i]) {
      count += mid - i;
      buffer[k++] = values[j++];
    } else {
      buffer[k++] = values[i++];
    }
  }
  while (i < mid) buffer[k++] = values[i++];
  while (j < hi) buffer[k++] = values[j++];
  std::copy(buffer.begin() + static_cast<long>(lo), buffer.begin() + static_cast<long>(hi),
            values.begin() + static_cast<long>(lo));
  return count;
}

std::uint64_t tie_pairs(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::uint64_t pairs = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    std::uint64_t t = j - i;
    pairs += t * (t - 1) / 2;
    i = j;
  }
  return pairs;
}

/// Regularized incomplete beta via the Lentz continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 300;
  constexpr double kEpsilon = 3e-15;
  constexpr double kTiny = 1e-300;

  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEpsilon) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, 2);
  std::size_t n = x.size();
  double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mean_x, dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw ZeroVariance("pearson is undefined for a constant input vector");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
    i = j;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, 2);
  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  return pearson(rx, ry);
}

double kendall(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, 2);
  std::size_t n = x.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  // Tie counts: n1 over x groups, n3 over joint (x, y) groups.
  std::uint64_t n1 = 0, n3 = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && x[order[j]] == x[order[i]]) ++j;
    std::uint64_t t = j - i;
    n1 += t * (t - 1) / 2;
    std::size_t a = i;
    while (a < j) {
      std::size_t b = a;
      while (b < j && y[order[b]] == y[order[a]]) ++b;
      std::uint64_t u = b - a;
      n3 += u * (u - 1) / 2;
      a = b;
    }
    i = j;
  }
  std::uint64_t n2 = tie_pairs(std::vector<double>(y.begin(), y.end()));

  std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (n0 == n1 || n0 == n2) throw AllTied();

  // Discordant pairs = strict inversions of y in x-order (ties in x sorted by
  // y contribute none).
  std::vector<double> y_sorted(n);
  for (std::size_t k = 0; k < n; ++k) y_sorted[k] = y[order[k]];
  std::vector<double> buffer(n);
  std::uint64_t discordant = merge_count(y_sorted, buffer, 0, n);

  double numerator = static_cast<double>(n0) - static_cast<double>(n1) -
                     static_cast<double>(n2) + static_cast<double>(n3) -
                     2.0 * static_cast<double>(discordant);
  double denominator = std::sqrt(static_cast<double>(n0 - n1)) *
                       std::sqrt(static_cast<double>(n0 - n2));
  return numerator / denominator;
}

double mae(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y, 1);
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += std::abs(x[i] - y[i]);
  return total / static_cast<double>(x.size());
}

CorrelationReport correlate(std::span<const double> predicted,
                            std::span<const double> expert_means) {
  CorrelationReport report;
  report.pearson_r = pearson(predicted, expert_means);
  report.spearman_rho = spearman(predicted, expert_means);
  report.kendall_tau = kendall(predicted, expert_means);
  report.mae = mae(predicted, expert_means);
  report.n = predicted.size();
  return report;
}

double pearson_p_value(double r, std::size_t n) {
  if (n < 3) throw DomainError("p-value needs at least 3 observations");
  double df = static_cast<double>(n - 2);
  double one_minus_r2 = 1.0 - r * r;
  if (one_minus_r2 <= 0.0) return 0.0;
  double t2 = r * r * df / one_minus_r2;
  return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t2));
}

double cronbach_alpha(const RatingsMatrix& ratings) {
  std::size_t raters = ratings.size();
  if (raters < 2) throw DegenerateVariance("need at least 2 raters");
  std::size_t items = ratings.front().size();
  if (items < 2) throw DegenerateVariance("need at least 2 items");
  for (const auto& row : ratings) {
    if (row.size() != items) throw LengthMismatch(items, row.size());
  }

  double rater_variances = 0.0;
  for (const auto& row : ratings) rater_variances += sample_variance(row);

  std::vector<double> sums(items, 0.0);
  for (const auto& row : ratings)
    for (std::size_t i = 0; i < items; ++i) sums[i] += row[i];
  double sum_variance = sample_variance(sums);
  if (sum_variance == 0.0)
    throw DegenerateVariance("rater sums have zero variance across items");

  double k = static_cast<double>(raters);
  return (k / (k - 1.0)) * (1.0 - rater_variances / sum_variance);
}

double icc_3k(const RatingsMatrix& ratings) {
  std::size_t raters = ratings.size();
  if (raters < 2) throw DegenerateVariance("need at least 2 raters");
  std::size_t items = ratings.front().size();
  if (items < 2) throw DegenerateVariance("need at least 2 items");
  for (const auto& row : ratings) {
    if (row.size() != items) throw LengthMismatch(items, row.size());
  }

  double n = static_cast<double>(items), k = static_cast<double>(raters);
  double grand = 0.0;
  for (const auto& row : ratings) grand += std::accumulate(row.begin(), row.end(), 0.0);
  grand /= n * k;

  double ss_items = 0.0;
  for (std::size_t i = 0; i < items; ++i) {
    double mean = 0.0;
    for (const auto& row : ratings) mean += row[i];
    mean /= k;
    ss_items += (mean - grand) * (mean - grand);
  }
  ss_items *= k;

  double ss_raters = 0.0;
  for (const auto& row : ratings) {
    double mean = std::accumulate(row.begin(), row.end(), 0.0) / n;
    ss_raters += (mean - grand) * (mean - grand);
  }
  ss_raters *= n;

  double ss_total = 0.0;
  for (const auto& row : ratings)
    for (double v : row) ss_total += (v - grand) * (v - grand);

  double ss_error = ss_total - ss_items - ss_raters;
  double ms_items = ss_items / (n - 1.0);
  double ms_error = ss_error / ((n - 1.0) * (k - 1.0));
  if (ms_items == 0.0)
    throw DegenerateVariance("no between-item variance; ICC is undefined");
  return (ms_items - ms_error) / ms_items;
}

double krippendorff_alpha(const SparseRatings& ratings) {
  if (ratings.size() < 2) throw InsufficientPairs();
  std::size_t items = 0;
  for (const auto& row : ratings) items = std::max(items, row.size());

  // Interval distance admits a moment form: within a unit,
  // sum_{i != j} (v_i - v_j)^2 = 2 * (m * s2 - s1^2).
  double observed = 0.0;
  double n_total = 0.0, grand_s1 = 0.0, grand_s2 = 0.0;
  for (std::size_t item = 0; item < items; ++item) {
    double m = 0.0, s1 = 0.0, s2 = 0.0;
    for (const auto& row : ratings) {
      if (item < row.size() && row[item].has_value()) {
        double v = *row[item];
        m += 1.0;
        s1 += v;
        s2 += v * v;
      }
    }
    if (m < 2.0) continue;  // unpairable unit
    observed += 2.0 * (m * s2 - s1 * s1) / (m - 1.0);
    n_total += m;
    grand_s1 += s1;
    grand_s2 += s2;
  }
  if (n_total < 2.0) throw InsufficientPairs();

  double d_observed = observed / n_total;
  double d_expected =
      2.0 * (n_total * grand_s2 - grand_s1 * grand_s1) / (n_total * (n_total - 1.0));
  if (d_expected == 0.0) return 1.0;  // every pairable value identical
  return 1.0 - d_observed / d_expected;
}

ReliabilityReport reliability(const SparseRatings& ratings) {
  std::size_t raters = ratings.size();
  if (raters < 2) throw DegenerateVariance("need at least 2 raters");
  std::size_t items = 0;
  for (const auto& row : ratings) items = std::max(items, row.size());

  RatingsMatrix complete(raters);
  for (std::size_t item = 0; item < items; ++item) {
    bool all_present = true;
    for (const auto& row : ratings)
      all_present = all_present && item < row.size() && row[item].has_value();
    if (!all_present) continue;
    for (std::size_t r = 0; r < raters; ++r) complete[r].push_back(*ratings[r][item]);
  }

  ReliabilityReport report;
  report.cronbach_alpha = cronbach_alpha(complete);
  report.icc_3k = icc_3k(complete);
  report.krippendorff_alpha = krippendorff_alpha(ratings);

  for (std::size_t a = 0; a < raters; ++a) {
    for (std::size_t b = a + 1; b < raters; ++b) {
      std::vector<double> xs, ys;
      for (std::size_t item = 0; item < items; ++item) {
        bool both = item < ratings[a].size() && ratings[a][item].has_value() &&
                    item < ratings[b].size() && ratings[b][item].has_value();
        if (both) {
          xs.push_back(*ratings[a][item]);
          ys.push_back(*ratings[b][item]);
        }
      }
      report.pairwise_pearson[{a, b}] = pearson(xs, ys);
    }
  }
  return report;
}

}  // namespace patentscore::stats

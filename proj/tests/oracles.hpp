#pragma once

#include <optional>
#include <vector>

// Brute-force reference implementations, kept deliberately independent of the
// library's algorithms: raw-moment formulas, O(n^2) rank counting, pairwise
// enumeration for tau, and a literal coincidence matrix for Krippendorff.
namespace oracle {

double pearson(const std::vector<double>& x, const std::vector<double>& y);
std::vector<double> average_ranks(const std::vector<double>& values);
double spearman(const std::vector<double>& x, const std::vector<double>& y);
double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y);
double mae(const std::vector<double>& x, const std::vector<double>& y);
double krippendorff_interval(
    const std::vector<std::vector<std::optional<double>>>& ratings);

}  // namespace oracle

#pragma once

#include <span>
#include <vector>

namespace solitaire::stats {

inline constexpr int kDefaultTrialSize = 100;
inline constexpr int kDefaultTrialCount = 10;
inline constexpr double kDefaultAlpha = 0.05;

struct TrialSet {
    std::vector<std::vector<bool>> trials;
    int trial_size = kDefaultTrialSize;
    int trial_count = kDefaultTrialCount;

    /// Fraction of true outcomes in each trial.
    std::vector<double> proportions() const;
};

/// Order-preserving chunking. Throws InvalidParams unless
/// outcomes.size() == trial_size * trial_count.
TrialSet partition_trials(const std::vector<bool>& outcomes, int trial_size, int trial_count);

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    bool significant = false;
    double df = 0.0;
    bool operator==(const TestResult&) const = default;
};

/// Two-tailed Welch unequal-variance t-test.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b,
                        double alpha = kDefaultAlpha);

/// Kruskal-Wallis H with tie correction; chi-square p-value on k - 1 df.
TestResult kruskal_wallis(const std::vector<std::vector<double>>& groups,
                          double alpha = kDefaultAlpha);

/// P(Sp) - P(Sr).
inline double interest_metric(double p_solver, double p_random) { return p_solver - p_random; }

double mean(std::span<const double> values);
/// Sample variance (n - 1 denominator).
double variance(std::span<const double> values);

/// Median with the lower-middle element on even counts.
int lower_median(std::span<const int> values);

struct Histogram {
    int bin_width = 1;
    int first_bin = 0;  // lower edge of counts[0]
    std::vector<int> counts;
    int median = 0;
};

Histogram histogram(std::span<const int> values, int bin_width);

}  // namespace solitaire::stats

#include "solitaire/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "solitaire/errors.hpp"

namespace solitaire::stats {

std::vector<double> TrialSet::proportions() const {
    std::vector<double> out;
    out.reserve(trials.size());
    for (const auto& trial : trials) {
        const auto hits = std::count(trial.begin(), trial.end(), true);
        out.push_back(trial.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(trial.size()));
    }
    return out;
}

TrialSet partition_trials(const std::vector<bool>& outcomes, int trial_size, int trial_count) {
    if (trial_size < 1 || trial_count < 1) throw InvalidParams("trial size and count must be positive");
    if (outcomes.size() != static_cast<std::size_t>(trial_size) * static_cast<std::size_t>(trial_count)) {
        throw InvalidParams("outcome count must equal trial_size * trial_count");
    }
    TrialSet set;
    set.trial_size = trial_size;
    set.trial_count = trial_count;
    for (int t = 0; t < trial_count; ++t) {
        const auto begin = outcomes.begin() + static_cast<std::ptrdiff_t>(t) * trial_size;
        set.trials.emplace_back(begin, begin + trial_size);
    }
    return set;
}

double mean(std::span<const double> values) {
    if (values.empty()) throw InvalidParams("mean of an empty sample");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
    if (values.size() < 2) throw InvalidParams("variance needs at least two values");
    const double m = mean(values);
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return ss / static_cast<double>(values.size() - 1);
}

TestResult welch_t_test(std::span<const double> a, std::span<const double> b, double alpha) {
    if (a.size() < 2 || b.size() < 2) throw InvalidParams("welch_t_test needs two values per group");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    const double ma = mean(a);
    const double mb = mean(b);
    const double qa = variance(a) / na;
    const double qb = variance(b) / nb;
    const double se2 = qa + qb;

    TestResult r;
    if (se2 == 0.0) {
        if (ma == mb) {
            r.statistic = 0.0;
            r.p_value = 1.0;
        } else {
            r.statistic = ma > mb ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
            r.p_value = 0.0;
        }
        r.df = na + nb - 2.0;
    } else {
        r.statistic = (ma - mb) / std::sqrt(se2);
        r.df = se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
        const boost::math::students_t dist(r.df);
        r.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.statistic))));
    }
    r.significant = r.p_value < alpha;
    return r;
}

TestResult kruskal_wallis(const std::vector<std::vector<double>>& groups, double alpha) {
    if (groups.size() < 2) throw InvalidParams("kruskal_wallis needs at least two groups");
    struct Item {
        double value;
        std::size_t group;
    };
    std::vector<Item> pooled;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw InvalidParams("kruskal_wallis groups must be nonempty");
        for (double v : groups[g]) pooled.push_back(Item{v, g});
    }
    std::sort(pooled.begin(), pooled.end(), [](const Item& x, const Item& y) { return x.value < y.value; });

    const double n = static_cast<double>(pooled.size());
    std::vector<double> rank_sums(groups.size(), 0.0);
    double tie_term = 0.0;
    for (std::size_t i = 0; i < pooled.size();) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
        const double average_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        const double ties = static_cast<double>(j - i);
        tie_term += ties * ties * ties - ties;
        for (std::size_t k = i; k < j; ++k) rank_sums[pooled[k].group] += average_rank;
        i = j;
    }

    TestResult r;
    r.df = static_cast<double>(groups.size() - 1);
    const double correction = 1.0 - tie_term / (n * n * n - n);
    if (correction <= 0.0) {  // every value identical
        r.statistic = 0.0;
        r.p_value = 1.0;
        r.significant = false;
        return r;
    }
    double h = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        h += rank_sums[g] * rank_sums[g] / static_cast<double>(groups[g].size());
    }
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
    r.statistic = std::max(0.0, h / correction);
    const boost::math::chi_squared dist(r.df);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    r.significant = r.p_value < alpha;
    return r;
}

int lower_median(std::span<const int> values) {
    if (values.empty()) throw InvalidParams("median of an empty sample");
    std::vector<int> sorted(values.begin(), values.end());
    const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>((sorted.size() - 1) / 2);
    std::nth_element(sorted.begin(), mid, sorted.end());
    return *mid;
}

Histogram histogram(std::span<const int> values, int bin_width) {
    if (bin_width < 1) throw InvalidParams("bin width must be positive");
    if (values.empty()) throw InvalidParams("histogram of an empty sample");
    auto floor_div = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    Histogram h;
    h.bin_width = bin_width;
    h.first_bin = floor_div(*lo, bin_width) * bin_width;
    h.counts.assign(static_cast<std::size_t>((*hi - h.first_bin) / bin_width + 1), 0);
    for (int v : values) ++h.counts[static_cast<std::size_t>((v - h.first_bin) / bin_width)];
    h.median = lower_median(values);
    return h;
}

}  // namespace solitaire::stats

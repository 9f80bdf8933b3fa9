#include <doctest.h>

#include <cmath>

#include "solitaire/errors.hpp"
#include "solitaire/rng.hpp"
#include "solitaire/stats.hpp"

using namespace solitaire;
using namespace solitaire::stats;

TEST_CASE("partition_trials") {
    std::vector<bool> outcomes(1000, false);
    for (std::size_t i = 0; i < outcomes.size(); i += 3) outcomes[i] = true;
    const auto set = partition_trials(outcomes, 100, 10);
    CHECK(set.trials.size() == 10);
    for (const auto& t : set.trials) CHECK(t.size() == 100);
    for (double p : set.proportions()) CHECK((p >= 0.0 && p <= 1.0));

    const auto all = partition_trials(std::vector<bool>(20, true), 10, 2).proportions();
    CHECK(all == std::vector<double>{1.0, 1.0});

    const auto small = partition_trials({true, false, false, true}, 2, 2);
    CHECK(small.trials == std::vector<std::vector<bool>>{{true, false}, {false, true}});
    CHECK_THROWS_AS(partition_trials({true, false, true}, 2, 2), InvalidParams);
}

TEST_CASE("trial mean equals the pooled proportion") {
    Rng rng(8);
    std::vector<bool> outcomes;
    for (int i = 0; i < 1000; ++i) outcomes.push_back(rng.below(100) < 37);
    const auto props = partition_trials(outcomes, 100, 10).proportions();
    const double pooled = static_cast<double>(std::count(outcomes.begin(), outcomes.end(), true)) / 1000.0;
    CHECK(mean(props) == doctest::Approx(pooled).epsilon(1e-12));
}

TEST_CASE("Welch t-test") {
    const std::vector<double> same{0.2, 0.3, 0.4};
    const auto r0 = welch_t_test(same, same);
    CHECK(r0.statistic == 0.0);
    CHECK(r0.p_value == doctest::Approx(1.0));
    CHECK_FALSE(r0.significant);

    const std::vector<double> low(10, 0.1), high(10, 0.9);
    const auto r1 = welch_t_test(low, high);
    CHECK(r1.significant);
    CHECK(r1.p_value < 1e-100);
    CHECK(r1.statistic < 0);

    // exactly zero variance in both groups
    const auto r4 = welch_t_test(std::vector<double>{1, 1, 1}, std::vector<double>{2, 2, 2});
    CHECK(std::isinf(r4.statistic));
    CHECK(r4.statistic < 0);
    CHECK(r4.p_value == 0.0);
    CHECK(r4.significant);

    const std::vector<double> a{1, 2, 3, 4, 5}, b{2, 3, 4, 5, 6};
    const auto r2 = welch_t_test(a, b);
    CHECK(r2.statistic == doctest::Approx(-1.0));
    CHECK(r2.df == doctest::Approx(8.0));
    CHECK(std::fabs(r2.p_value - 0.34659350708733416) < 1e-9);

    const std::vector<double> c{0.2, 0.3, 0.25, 0.4}, d{0.5, 0.55, 0.7, 0.6, 0.65, 0.52};
    const auto r3 = welch_t_test(c, d);
    CHECK(r3.statistic == doctest::Approx(-5.619674369098471));
    CHECK(std::fabs(r3.p_value - 0.001267689272754564) < 1e-9);
    CHECK(r3.significant);
    CHECK_FALSE(welch_t_test(c, d, 0.001).significant);

    CHECK_THROWS_AS(welch_t_test(std::vector<double>{1.0}, b), InvalidParams);
}

TEST_CASE("Welch is antisymmetric in its arguments") {
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a, b;
        for (int i = 0; i < 10; ++i) {
            a.push_back(static_cast<double>(rng.below(1000)) / 1000.0);
            b.push_back(static_cast<double>(rng.below(1000)) / 1000.0);
        }
        const auto ab = welch_t_test(a, b);
        const auto ba = welch_t_test(b, a);
        CHECK(ab.statistic == doctest::Approx(-ba.statistic));
        CHECK(ab.p_value == doctest::Approx(ba.p_value));
        CHECK(ab.df == doctest::Approx(ba.df));
        CHECK(ab.significant == (ab.p_value < 0.05));
    }
}

TEST_CASE("Kruskal-Wallis") {
    const std::vector<std::vector<double>> same{{3, 4, 5}, {3, 4, 5}};
    CHECK(kruskal_wallis(same).statistic == doctest::Approx(0.0));

    // ranks {2,2,2}, {8,8,8}, {5,5,5}; tie correction 1 - 72/720
    const auto r = kruskal_wallis({{1, 1, 1}, {9, 9, 9}, {5, 5, 5}});
    CHECK(r.statistic == doctest::Approx(8.0));
    CHECK(r.df == 2.0);
    CHECK(r.p_value == doctest::Approx(std::exp(-4.0)));
    CHECK(r.significant);

    const auto r2 = kruskal_wallis({{1, 3, 5, 7}, {2, 2, 8}, {4, 6, 6, 9, 10}});
    CHECK(r2.statistic == doctest::Approx(2.9281690140845074));
    CHECK(std::fabs(r2.p_value - 0.23128963861716856) < 1e-9);

    const auto flat = kruskal_wallis({{7, 7}, {7, 7, 7}});
    CHECK(flat.statistic == 0.0);
    CHECK(flat.p_value == 1.0);
    CHECK_THROWS_AS(kruskal_wallis({{1, 2}}), InvalidParams);
    CHECK_THROWS_AS(kruskal_wallis({{1, 2}, {}}), InvalidParams);
}

TEST_CASE("Kruskal-Wallis depends only on ranks") {
    Rng rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<double>> groups(3), mapped(3);
        for (int g = 0; g < 3; ++g) {
            for (int i = 0; i < 8; ++i) {
                const double x = static_cast<double>(rng.below(20)) + g;
                groups[g].push_back(x);
                mapped[g].push_back(std::exp(x / 3.0) + 100.0);
            }
        }
        const auto a = kruskal_wallis(groups);
        const auto b = kruskal_wallis(mapped);
        CHECK(a.statistic == doctest::Approx(b.statistic));
        CHECK(a.p_value == doctest::Approx(b.p_value));
    }
}

TEST_CASE("interest, median and histogram") {
    CHECK(interest_metric(0.88, 0.26) == doctest::Approx(0.62));
    CHECK(interest_metric(0.57, 0.07) == doctest::Approx(0.50));
    CHECK(interest_metric(0.4, 0.4) == 0.0);

    CHECK(lower_median(std::vector<int>{42, 42, 42}) == 42);
    CHECK(lower_median(std::vector<int>{4, 1, 3, 2}) == 2);
    CHECK(lower_median(std::vector<int>{5}) == 5);
    CHECK_THROWS_AS(lower_median(std::vector<int>{}), InvalidParams);

    const auto h = histogram(std::vector<int>{8, 9, 9, 12, 13, 13, 13}, 2);
    CHECK(h.first_bin == 8);
    CHECK(h.counts == std::vector<int>{3, 0, 4});
    CHECK(h.median == 12);
    CHECK_THROWS_AS(histogram(std::vector<int>{1}, 0), InvalidParams);

    CHECK(variance(std::vector<double>{1, 2, 3, 4}) == doctest::Approx(5.0 / 3.0));
}

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "solitaire/harness.hpp"

using namespace solitaire;
using namespace solitaire::harness;

namespace {

ExperimentConfig small_config(Game game, std::vector<std::string> algorithms, std::vector<int> params) {
    ExperimentConfig c;
    c.game = game;
    c.algorithms = std::move(algorithms);
    c.params = std::move(params);
    c.challenges = 40;
    c.trial_size = 10;
    c.trial_count = 4;
    c.master_seed = 99;
    return c;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("config validation") {
    auto c = small_config(Game::boxoff, {"shuffled"}, {4, 6, 4});
    CHECK_NOTHROW(validate(c));
    auto bad = c;
    bad.challenges = 41;
    CHECK_THROWS_AS(validate(bad), InvalidParams);
    bad.trial_stats = false;
    CHECK_NOTHROW(validate(bad));
    bad = c;
    bad.algorithms = {"l-tiles", "l-tiles"};
    CHECK_THROWS_AS(validate(bad), InvalidParams);
    bad = c;
    bad.algorithms = {"dominoes"};
    CHECK_THROWS_AS(validate(bad), InvalidParams);
    bad = c;
    bad.params = {4, 4, 4};
    bad.algorithms = {"l-tiles"};
    CHECK_THROWS_AS(validate(bad), InvalidParams);
    bad = c;
    bad.alpha = 1.5;
    CHECK_THROWS_AS(validate(bad), InvalidParams);
    bad = small_config(Game::fujisan, {"shuffled"}, {1});
    CHECK_THROWS_AS(validate(bad), InvalidParams);
}

TEST_CASE("config JSON defaults") {
    const auto j = nlohmann::json::parse(R"({"game": "boxoff", "algorithms": ["shuffled"], "params": [6, 6, 6]})");
    const auto c = config_from_json(j);
    CHECK(c.challenges == 200);
    CHECK(c.trial_size == 20);
    CHECK(c.trial_count == 10);
    auto full = j;
    full["full_scale"] = true;
    CHECK(config_from_json(full).challenges == 1000);
    const auto f = config_from_json(nlohmann::json::parse(R"({"game": "fujisan", "algorithms": ["dominoes"]})"));
    CHECK(f.challenges == 1000);
    CHECK(f.playouts == 1);
    CHECK(config_from_json(config_to_json(f)) == f);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"game": "chess", "algorithms": ["x"]})")),
                    InvalidParams);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"game": "boxoff"})")), InvalidParams);
}

TEST_CASE("challenge seeds do not depend on the algorithm list") {
    auto one = small_config(Game::boxoff, {"l-tiles"}, {4, 6, 4});
    auto two = small_config(Game::boxoff, {"shuffled", "l-tiles"}, {4, 6, 4});
    const auto a = run_experiment(one, 1);
    const auto b = run_experiment(two, 1);
    CHECK(a.algorithms[0].rows == b.algorithms[1].rows);
}

TEST_CASE("serial and parallel pool evaluation agree") {
    auto c = small_config(Game::fujisan, {"engraved-tiles"}, {});
    c.metrics.lengths = true;
    c.metrics.connectivity = true;
    c.metrics.counterintuitive = true;
    c.playouts = 3;
    const auto serial = evaluate_pool_serial(c, "engraved-tiles");
    for (int workers : {1, 2, 3, 8}) CHECK(evaluate_pool_parallel(c, "engraved-tiles", workers) == serial);

    auto p = small_config(Game::pretzel, {"banded-suits"}, {4, 5});
    p.metrics.blockades = true;
    p.metrics.lengths = true;
    const auto pretzel_serial = evaluate_pool_serial(p, "banded-suits");
    CHECK(evaluate_pool_parallel(p, "banded-suits", 4) == pretzel_serial);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    auto c = small_config(Game::boxoff, {"shuffled", "l-tiles"}, {4, 6, 4});
    c.metrics.pair_equality = true;
    c.metrics.lengths = true;
    const auto base = run_experiment(c, 1);
    const auto json = serialize_report(base, Format::json);
    const auto csv = serialize_report(base, Format::csv);
    for (int workers : {1, 2, 5}) {
        const auto again = run_experiment(c, workers);
        CHECK(serialize_report(again, Format::json) == json);
        CHECK(serialize_report(again, Format::csv) == csv);
        CHECK(serialize_summary_csv(again) == serialize_summary_csv(base));
    }
    c.master_seed = 100;
    CHECK(serialize_report(run_experiment(c, 1), Format::json) != json);
}

TEST_CASE("report shape and serialization") {
    auto c = small_config(Game::pretzel, {"shuffled", "sequential-suits", "banded-suits"}, {4, 4});
    c.metrics.blockades = true;
    c.metrics.lengths = true;
    c.playouts = 2;
    const auto report = run_experiment(c, 2);
    CHECK(report.rng == kRngName);
    CHECK(report.version == kCodeVersion);
    CHECK(report.algorithms.size() == 3);
    CHECK(report.solvability_tests.size() == 3);
    CHECK(report.length_test.has_value());
    for (const auto& alg : report.algorithms) {
        CHECK(alg.rows.size() == 40);
        const auto& s = alg.summary;
        for (double p : {s.p_solver, s.p_random}) CHECK((p >= 0.0 && p <= 1.0));
        CHECK(s.trial_solvability.size() == 4);
        CHECK(stats::mean(std::span<const double>(s.trial_solvability)) == doctest::Approx(s.p_solver));
        for (const auto& row : alg.rows) {
            CHECK(row.ducking_crab.has_value());
            CHECK(row.playouts == 2);
            CHECK(row.random_wins <= row.playouts);
            CHECK(row.min_length.has_value() == (row.solvable == Solvability::solvable));
        }
    }

    const auto csv = serialize_report(report, Format::csv);
    CHECK(line_count(csv) == 1 + 3 * 40);
    CHECK(csv.rfind("game,algorithm,index,seed,solvable,min_length", 0) == 0);
    CHECK(line_count(serialize_summary_csv(report)) == 1 + 3);

    const auto parsed = report_from_json(nlohmann::json::parse(serialize_report(report, Format::json)));
    CHECK(parsed == report);
    CHECK(serialize_report(parsed, Format::json) == serialize_report(report, Format::json));
}

TEST_CASE("empty report gives a header-only CSV") {
    ExperimentReport empty;
    empty.config = small_config(Game::boxoff, {"shuffled"}, {4, 6, 4});
    CHECK(line_count(serialize_report(empty, Format::csv)) == 1);
    CHECK(line_count(serialize_summary_csv(empty)) == 1);
    CHECK(report_from_json(report_to_json(empty)) == empty);
}

TEST_CASE("infinite statistics survive the JSON round trip") {
    ExperimentReport r;
    r.config = small_config(Game::boxoff, {"shuffled"}, {4, 6, 4});
    r.solvability_tests.push_back({"a", "b", stats::TestResult{-std::numeric_limits<double>::infinity(), 0.0, true, 18}});
    CHECK(report_from_json(report_to_json(r)) == r);
}

TEST_CASE("budget exhaustion yields indeterminate rows and a warning") {
    auto c = small_config(Game::boxoff, {"shuffled"}, {6, 6, 6});
    c.node_budget = 50;
    const auto report = run_experiment(c, 1);
    const auto& s = report.algorithms[0].summary;
    CHECK(s.indeterminate > 0);
    CHECK(s.determinate + s.indeterminate == 40);
    CHECK_FALSE(report.warnings.empty());
    const auto& rows = report.algorithms[0].rows;
    CHECK(std::any_of(rows.begin(), rows.end(),
                      [](const ChallengeRow& r) { return r.solvable == Solvability::indeterminate; }));
    CHECK(parse_solvability("indeterminate") == Solvability::indeterminate);
    CHECK_THROWS_AS(parse_solvability("maybe"), ParseError);
}

TEST_CASE("generate_text is reproducible and parseable") {
    const auto text = generate_text(Game::pretzel, "banded-suits", {4, 8}, 5);
    CHECK(text == generate_text(Game::pretzel, "banded-suits", {4, 8}, 5));
    CHECK(text.rfind("pretzel 4 8\n", 0) == 0);
    CHECK(generate_text(Game::fujisan, "piecepack", {}, 1).rfind("fujisan\n", 0) == 0);
    CHECK_THROWS_AS(generate_text(Game::boxoff, "shuffled", {4, 6}, 1), InvalidParams);
    CHECK(default_playout_cap(Game::boxoff, {4, 6, 4}) == 12);
    CHECK(default_playout_cap(Game::pretzel, {4, 4}) == 320);
    CHECK(default_playout_cap(Game::fujisan, {}) == 24);
}

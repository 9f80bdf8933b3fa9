#pragma once

// Experiment orchestration: generate challenge pools, solve them, play them
// randomly, measure them, and summarize per algorithm.
//
// Challenge i of algorithm a draws its seed from stream (master, game/a, i),
// so adding or reordering algorithms never changes existing challenges, and
// pool evaluation writes results by index so the worker count never changes
// the output.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "solitaire/game.hpp"
#include "solitaire/search.hpp"
#include "solitaire/stats.hpp"

namespace solitaire::harness {

inline constexpr std::string_view kCodeVersion = "1.0.0";
inline constexpr std::string_view kWorkersEnv = "SOLITAIRE_WORKERS";

struct MetricToggles {
    bool pair_equality = false;
    bool connectivity = false;
    bool blockades = false;
    bool counterintuitive = false;
    bool lengths = false;
    bool operator==(const MetricToggles&) const = default;
};

struct ExperimentConfig {
    Game game = Game::boxoff;
    std::vector<std::string> algorithms;
    std::vector<int> params;  // boxoff {h, w, c}; pretzel {k, n}; fujisan {}
    int challenges = 1000;
    int trial_size = stats::kDefaultTrialSize;
    int trial_count = stats::kDefaultTrialCount;
    bool trial_stats = true;
    std::uint64_t master_seed = 1;
    int playouts = 1;
    std::optional<int> playout_cap;  // default depends on the game
    std::uint64_t node_budget = search::kDefaultNodeBudget;
    double alpha = stats::kDefaultAlpha;
    MetricToggles metrics;
    std::string csv_path;
    std::string json_path;
    bool operator==(const ExperimentConfig&) const = default;
};

/// Throws InvalidParams describing the first problem found.
void validate(const ExperimentConfig& config);

/// Reads a JSON config, filling defaults. BoxOff (6,6,6) defaults to 200
/// challenges in 10 trials of 20 unless "full_scale" is set or counts are
/// given explicitly.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// BoxOff: h*w/2 (games cannot run longer). Fujisan: one move per board
/// cell. Pretzel: 20 moves per cell.
int default_playout_cap(Game game, const std::vector<int>& params);

std::string stream_name(Game game, std::string_view algorithm);
std::uint64_t challenge_seed(const ExperimentConfig& config, std::string_view algorithm, int index);

/// Text rendering of the challenge for (game, algorithm, params, seed).
std::string generate_text(Game game, std::string_view algorithm, const std::vector<int>& params,
                          std::uint64_t seed);

enum class Solvability { unsolvable, solvable, indeterminate };
std::string_view to_string(Solvability s);
Solvability parse_solvability(std::string_view s);

struct ChallengeRow {
    int index = 0;
    std::uint64_t seed = 0;
    Solvability solvable = Solvability::unsolvable;
    std::optional<int> min_length;
    int random_wins = 0;
    int playouts = 0;
    std::uint64_t nodes_expanded = 0;
    std::optional<double> pair_equality;
    std::optional<double> connectivity;
    std::optional<bool> ducking_crab;
    std::optional<bool> duelling_deuces;
    std::optional<int> counterintuitive;
    bool operator==(const ChallengeRow&) const = default;
};

/// Everything measured for one challenge. Pure in (config, algorithm, index).
ChallengeRow evaluate_challenge(const ExperimentConfig& config, std::string_view algorithm, int index);

/// Serial reference evaluation of a whole pool.
std::vector<ChallengeRow> evaluate_pool_serial(const ExperimentConfig& config, std::string_view algorithm);
/// OpenMP evaluation; identical output to the serial path for any worker count.
std::vector<ChallengeRow> evaluate_pool_parallel(const ExperimentConfig& config,
                                                 std::string_view algorithm, int workers);

/// Worker count from SOLITAIRE_WORKERS, else the OpenMP default.
int workers_from_env();

struct AlgorithmSummary {
    std::vector<double> trial_solvability;  // empty unless trial statistics apply
    std::vector<double> trial_random;
    double p_solver = 0.0;
    double p_random = 0.0;
    double interest = 0.0;
    int solvable = 0;
    int determinate = 0;
    int indeterminate = 0;
    std::optional<int> median_length;
    bool operator==(const AlgorithmSummary&) const = default;
};

struct AlgorithmReport {
    std::string algorithm;
    AlgorithmSummary summary;
    std::vector<ChallengeRow> rows;
    bool operator==(const AlgorithmReport&) const = default;
};

struct PairwiseTest {
    std::string a;
    std::string b;
    stats::TestResult result;
    bool operator==(const PairwiseTest&) const = default;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::string rng;
    std::string version;
    std::vector<AlgorithmReport> algorithms;
    std::vector<PairwiseTest> solvability_tests;
    std::optional<stats::TestResult> length_test;
    std::vector<std::string> warnings;
    bool operator==(const ExperimentReport&) const = default;
};

/// Pooled rates, trial proportions (indeterminate rows excluded from each
/// trial's denominator), and the median minimum length.
AlgorithmSummary summarize(const ExperimentConfig& config, const std::vector<ChallengeRow>& rows);

/// Pairwise Welch tests on trial solvability and Kruskal-Wallis across the
/// length distributions; recomputed from the rows already in the report.
void compute_tests(ExperimentReport& report);

/// workers <= 0 means workers_from_env().
ExperimentReport run_experiment(const ExperimentConfig& config, int workers = 0);

enum class Format { csv, json };

/// CSV: one row per challenge. JSON: the full report.
std::string serialize_report(const ExperimentReport& report, Format format);
/// Per-algorithm summary table as CSV.
std::string serialize_summary_csv(const ExperimentReport& report);
nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

}  // namespace solitaire::harness

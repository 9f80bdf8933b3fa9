#include "solitaire/harness.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>

#include <omp.h>

#include "solitaire/boxoff.hpp"
#include "solitaire/fujisan.hpp"
#include "solitaire/pretzel.hpp"
#include "solitaire/rng.hpp"

namespace solitaire::harness {

namespace {

bool is_boxoff_666(const ExperimentConfig& c) {
    return c.game == Game::boxoff && c.params == std::vector<int>{6, 6, 6};
}

void check_algorithm(Game game, const std::string& name) {
    switch (game) {
        case Game::boxoff: boxoff::parse_algorithm(name); return;
        case Game::pretzel: pretzel::parse_algorithm(name); return;
        case Game::fujisan: fujisan::parse_algorithm(name); return;
    }
}

boxoff::Params boxoff_params(const std::vector<int>& p) {
    if (p.size() != 3) throw InvalidParams("boxoff params are [h, w, c]");
    return {p[0], p[1], p[2]};
}

pretzel::Params pretzel_params(const std::vector<int>& p) {
    if (p.size() != 2) throw InvalidParams("pretzel params are [k, n]");
    return {p[0], p[1]};
}

}  // namespace

void validate(const ExperimentConfig& c) {
    if (c.algorithms.empty()) throw InvalidParams("config: at least one algorithm is required");
    for (const auto& a : c.algorithms) check_algorithm(c.game, a);
    for (std::size_t i = 0; i < c.algorithms.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (c.algorithms[i] == c.algorithms[j]) throw InvalidParams("config: duplicate algorithm");
        }
    }
    switch (c.game) {
        case Game::boxoff: {
            const auto p = boxoff_params(c.params);
            boxoff::validate(p);
            for (const auto& a : c.algorithms) {
                if (a != "shuffled") boxoff::validate_for_ltiles(p);
            }
            break;
        }
        case Game::pretzel: pretzel::validate(pretzel_params(c.params)); break;
        case Game::fujisan:
            if (!c.params.empty()) throw InvalidParams("fujisan takes no params");
            break;
    }
    if (c.challenges < 1) throw InvalidParams("config: challenges must be positive");
    if (c.trial_stats && c.trial_size * c.trial_count != c.challenges) {
        throw InvalidParams("config: challenges must equal trial_size * trial_count");
    }
    if (c.playouts < 0) throw InvalidParams("config: playouts must be non-negative");
    if (c.playout_cap && *c.playout_cap < 1) throw InvalidParams("config: playout_cap must be positive");
    if (c.node_budget < 1) throw InvalidParams("config: node_budget must be positive");
    if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw InvalidParams("config: alpha must lie in (0, 1)");
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    try {
        c.game = parse_game(j.at("game").get<std::string>());
        c.algorithms = j.at("algorithms").get<std::vector<std::string>>();
        c.params = j.value("params", std::vector<int>{});
        if (is_boxoff_666(c) && !j.value("full_scale", false)) {
            c.challenges = 200;
            c.trial_size = 20;
        }
        c.challenges = j.value("challenges", c.challenges);
        c.trial_size = j.value("trial_size", c.trial_size);
        c.trial_count = j.value("trial_count", c.trial_count);
        c.trial_stats = j.value("trial_stats", true);
        c.master_seed = j.value("master_seed", c.master_seed);
        c.playouts = j.value("playouts", c.playouts);
        if (j.contains("playout_cap") && !j["playout_cap"].is_null()) c.playout_cap = j["playout_cap"].get<int>();
        c.node_budget = j.value("node_budget", c.node_budget);
        c.alpha = j.value("alpha", c.alpha);
        if (j.contains("metrics")) {
            const auto& m = j["metrics"];
            c.metrics.pair_equality = m.value("pair_equality", false);
            c.metrics.connectivity = m.value("connectivity", false);
            c.metrics.blockades = m.value("blockades", false);
            c.metrics.counterintuitive = m.value("counterintuitive", false);
            c.metrics.lengths = m.value("lengths", false);
        }
        if (j.contains("output")) {
            c.csv_path = j["output"].value("csv", std::string{});
            c.json_path = j["output"].value("json", std::string{});
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("config: ") + e.what());
    }
    validate(c);
    return c;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
    nlohmann::json j;
    j["game"] = std::string(to_string(c.game));
    j["algorithms"] = c.algorithms;
    j["params"] = c.params;
    j["challenges"] = c.challenges;
    j["trial_size"] = c.trial_size;
    j["trial_count"] = c.trial_count;
    j["trial_stats"] = c.trial_stats;
    j["master_seed"] = c.master_seed;
    j["playouts"] = c.playouts;
    j["playout_cap"] = c.playout_cap ? nlohmann::json(*c.playout_cap) : nlohmann::json(nullptr);
    j["node_budget"] = c.node_budget;
    j["alpha"] = c.alpha;
    j["metrics"] = {{"pair_equality", c.metrics.pair_equality},
                    {"connectivity", c.metrics.connectivity},
                    {"blockades", c.metrics.blockades},
                    {"counterintuitive", c.metrics.counterintuitive},
                    {"lengths", c.metrics.lengths}};
    j["output"] = {{"csv", c.csv_path}, {"json", c.json_path}};
    return j;
}

int default_playout_cap(Game game, const std::vector<int>& params) {
    switch (game) {
        case Game::boxoff: {
            const auto p = boxoff_params(params);
            return std::max(1, p.h * p.w / 2);
        }
        case Game::pretzel: {
            const auto p = pretzel_params(params);
            return 20 * p.k * p.n;
        }
        case Game::fujisan: return fujisan::kSpaces;
    }
    return 1;
}

std::string stream_name(Game game, std::string_view algorithm) {
    return std::string(to_string(game)) + "/" + std::string(algorithm);
}

std::uint64_t challenge_seed(const ExperimentConfig& config, std::string_view algorithm, int index) {
    return stream_seed(config.master_seed, stream_name(config.game, algorithm),
                       static_cast<std::uint64_t>(index));
}

std::string generate_text(Game game, std::string_view algorithm, const std::vector<int>& params,
                          std::uint64_t seed) {
    switch (game) {
        case Game::boxoff:
            return boxoff::to_text(boxoff::generate(boxoff_params(params), boxoff::parse_algorithm(algorithm), seed));
        case Game::pretzel:
            return pretzel::to_text(
                pretzel::generate(pretzel_params(params), pretzel::parse_algorithm(algorithm), seed));
        case Game::fujisan:
            if (!params.empty()) throw InvalidParams("fujisan takes no params");
            return fujisan::to_text(fujisan::generate(fujisan::parse_algorithm(algorithm), seed));
    }
    throw InvalidParams("unknown game");
}

std::string_view to_string(Solvability s) {
    switch (s) {
        case Solvability::unsolvable: return "no";
        case Solvability::solvable: return "yes";
        case Solvability::indeterminate: return "indeterminate";
    }
    return "?";
}

Solvability parse_solvability(std::string_view s) {
    if (s == "no") return Solvability::unsolvable;
    if (s == "yes") return Solvability::solvable;
    if (s == "indeterminate") return Solvability::indeterminate;
    throw ParseError("unknown solvability '" + std::string(s) + "'");
}

namespace {

// Shared solve / playout steps for any search problem. Returns the shortest
// path when one was computed.
template <class Problem>
std::optional<std::vector<typename Problem::Move>> solve_into(const ExperimentConfig& config,
                                                              const Problem& problem, bool want_path,
                                                              int cap, ChallengeRow& row) {
    const search::Limits limits{config.node_budget};
    std::optional<std::vector<typename Problem::Move>> path;
    try {
        const auto check = search::check_solvable(problem, limits);
        row.nodes_expanded = check.nodes_expanded;
        row.solvable = check.solvable ? Solvability::solvable : Solvability::unsolvable;
    } catch (const search::BudgetExceeded&) {
        row.solvable = Solvability::indeterminate;
        row.nodes_expanded = config.node_budget;
    }
    if (row.solvable == Solvability::solvable && want_path) {
        try {
            auto solved = search::solve_min_length(problem, limits);
            row.min_length = solved.min_length;
            path = std::move(solved.path);
        } catch (const search::BudgetExceeded&) {
            // solvable, length unknown
        }
    }
    row.playouts = config.playouts;
    for (int j = 0; j < config.playouts; ++j) {
        const auto playout =
            search::random_playout(problem, stream_seed(row.seed, "playout", static_cast<std::uint64_t>(j)), cap);
        row.random_wins += playout.solved ? 1 : 0;
    }
    return path;
}

}  // namespace

ChallengeRow evaluate_challenge(const ExperimentConfig& config, std::string_view algorithm, int index) {
    ChallengeRow row;
    row.index = index;
    row.seed = challenge_seed(config, algorithm, index);
    const int cap = config.playout_cap.value_or(default_playout_cap(config.game, config.params));
    const bool lengths = config.metrics.lengths;
    switch (config.game) {
        case Game::boxoff: {
            const auto grid = boxoff::generate(boxoff_params(config.params), boxoff::parse_algorithm(algorithm), row.seed);
            solve_into(config, boxoff::Problem(grid), lengths, cap, row);
            if (config.metrics.pair_equality) row.pair_equality = boxoff::pair_equality(grid);
            break;
        }
        case Game::pretzel: {
            const auto layout =
                pretzel::generate(pretzel_params(config.params), pretzel::parse_algorithm(algorithm), row.seed);
            solve_into(config, pretzel::Problem(layout), lengths, cap, row);
            if (config.metrics.blockades) {
                const auto found = pretzel::detect_blockades(layout);
                row.ducking_crab = found.ducking_crab;
                row.duelling_deuces = found.duelling_deuces;
            }
            break;
        }
        case Game::fujisan: {
            const auto board = fujisan::generate(fujisan::parse_algorithm(algorithm), row.seed);
            const bool want_path = lengths || config.metrics.counterintuitive;
            const auto path = solve_into(config, fujisan::Problem(board), want_path, cap, row);
            if (!lengths) row.min_length.reset();
            if (config.metrics.connectivity) row.connectivity = fujisan::connectivity(board.values());
            if (config.metrics.counterintuitive && path) {
                row.counterintuitive = fujisan::count_counterintuitive(board, *path);
            }
            break;
        }
    }
    return row;
}

std::vector<ChallengeRow> evaluate_pool_serial(const ExperimentConfig& config, std::string_view algorithm) {
    std::vector<ChallengeRow> rows;
    rows.reserve(static_cast<std::size_t>(config.challenges));
    for (int i = 0; i < config.challenges; ++i) rows.push_back(evaluate_challenge(config, algorithm, i));
    return rows;
}

std::vector<ChallengeRow> evaluate_pool_parallel(const ExperimentConfig& config, std::string_view algorithm,
                                                 int workers) {
    std::vector<ChallengeRow> rows(static_cast<std::size_t>(config.challenges));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const int threads = std::max(1, workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < config.challenges; ++i) {
        try {
            rows[static_cast<std::size_t>(i)] = evaluate_challenge(config, algorithm, i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

int workers_from_env() {
    if (const char* value = std::getenv(kWorkersEnv.data())) {
        const int n = std::atoi(value);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

AlgorithmSummary summarize(const ExperimentConfig& config, const std::vector<ChallengeRow>& rows) {
    AlgorithmSummary s;
    long wins = 0;
    long plays = 0;
    std::vector<int> lengths;
    for (const auto& row : rows) {
        if (row.solvable == Solvability::indeterminate) {
            ++s.indeterminate;
        } else {
            ++s.determinate;
            if (row.solvable == Solvability::solvable) ++s.solvable;
        }
        wins += row.random_wins;
        plays += row.playouts;
        if (row.min_length) lengths.push_back(*row.min_length);
    }
    s.p_solver = s.determinate == 0 ? 0.0 : static_cast<double>(s.solvable) / s.determinate;
    s.p_random = plays == 0 ? 0.0 : static_cast<double>(wins) / static_cast<double>(plays);
    s.interest = stats::interest_metric(s.p_solver, s.p_random);
    if (!lengths.empty()) s.median_length = stats::lower_median(lengths);

    if (config.trial_stats && static_cast<int>(rows.size()) == config.trial_size * config.trial_count) {
        for (int t = 0; t < config.trial_count; ++t) {
            int solved = 0, determinate = 0, trial_wins = 0, trial_plays = 0;
            for (int i = t * config.trial_size; i < (t + 1) * config.trial_size; ++i) {
                const auto& row = rows[static_cast<std::size_t>(i)];
                if (row.solvable != Solvability::indeterminate) {
                    ++determinate;
                    solved += row.solvable == Solvability::solvable;
                }
                trial_wins += row.random_wins;
                trial_plays += row.playouts;
            }
            s.trial_solvability.push_back(determinate == 0 ? 0.0 : static_cast<double>(solved) / determinate);
            s.trial_random.push_back(trial_plays == 0 ? 0.0 : static_cast<double>(trial_wins) / trial_plays);
        }
    }
    return s;
}

void compute_tests(ExperimentReport& report) {
    report.solvability_tests.clear();
    report.length_test.reset();
    const auto& algs = report.algorithms;
    for (std::size_t i = 0; i < algs.size(); ++i) {
        for (std::size_t j = i + 1; j < algs.size(); ++j) {
            const auto& a = algs[i].summary.trial_solvability;
            const auto& b = algs[j].summary.trial_solvability;
            if (a.size() < 2 || b.size() < 2) continue;
            report.solvability_tests.push_back(
                PairwiseTest{algs[i].algorithm, algs[j].algorithm, stats::welch_t_test(a, b, report.config.alpha)});
        }
    }
    if (report.config.metrics.lengths && algs.size() >= 2) {
        std::vector<std::vector<double>> groups;
        for (const auto& alg : algs) {
            std::vector<double> lengths;
            for (const auto& row : alg.rows) {
                if (row.min_length) lengths.push_back(*row.min_length);
            }
            if (lengths.empty()) return;
            groups.push_back(std::move(lengths));
        }
        report.length_test = stats::kruskal_wallis(groups, report.config.alpha);
    }
}

ExperimentReport run_experiment(const ExperimentConfig& config, int workers) {
    validate(config);
    if (workers <= 0) workers = workers_from_env();
    ExperimentReport report;
    report.config = config;
    report.rng = std::string(kRngName);
    report.version = std::string(kCodeVersion);
    for (const auto& algorithm : config.algorithms) {
        AlgorithmReport alg;
        alg.algorithm = algorithm;
        alg.rows = evaluate_pool_parallel(config, algorithm, workers);
        alg.summary = summarize(config, alg.rows);
        if (alg.summary.indeterminate > 0) {
            report.warnings.push_back(algorithm + ": " + std::to_string(alg.summary.indeterminate) +
                                      " challenge(s) exceeded the node budget and were excluded");
        }
        report.algorithms.push_back(std::move(alg));
    }
    compute_tests(report);
    return report;
}

}  // namespace solitaire::harness

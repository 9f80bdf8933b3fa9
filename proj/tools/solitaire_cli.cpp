#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "solitaire/boxoff.hpp"
#include "solitaire/counting.hpp"
#include "solitaire/fujisan.hpp"
#include "solitaire/harness.hpp"
#include "solitaire/pretzel.hpp"
#include "solitaire/rng.hpp"
#include "solitaire/search.hpp"

using namespace solitaire;

namespace {

std::vector<int> parse_params(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw InvalidParams("bad parameter list '" + text + "'");
        }
    }
    return out;
}

std::vector<int> default_params(Game game) {
    switch (game) {
        case Game::boxoff: return {4, 6, 4};
        case Game::pretzel: return {4, 4};
        case Game::fujisan: return {};
    }
    return {};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << data;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

template <class Problem, class ToString>
nlohmann::json solve_json(const Problem& problem, std::uint64_t budget, ToString&& move_text) {
    const auto result = search::solve_min_length(problem, search::Limits{budget});
    nlohmann::json j;
    j["solvable"] = result.solvable;
    j["min_length"] = result.min_length ? nlohmann::json(*result.min_length) : nlohmann::json(nullptr);
    if (result.path) {
        auto path = nlohmann::json::array();
        for (const auto& m : *result.path) path.push_back(move_text(m));
        j["path"] = path;
    } else {
        j["path"] = nullptr;
    }
    j["nodes_expanded"] = result.nodes_expanded;
    return j;
}

nlohmann::json solve_text(const std::string& text, std::uint64_t budget) {
    std::istringstream in(text);
    std::string head;
    in >> head;
    const Game game = parse_game(head);
    nlohmann::json j;
    switch (game) {
        case Game::boxoff:
            j = solve_json(boxoff::Problem(boxoff::parse_text(text)), budget,
                           [](const boxoff::Move& m) { return boxoff::to_string(m); });
            break;
        case Game::pretzel:
            j = solve_json(pretzel::Problem(pretzel::parse_text(text)), budget,
                           [](const pretzel::Move& m) { return pretzel::to_string(m); });
            break;
        case Game::fujisan:
            j = solve_json(fujisan::Problem(fujisan::parse_text(text)), budget,
                           [](const fujisan::Move& m) { return fujisan::to_string(m); });
            break;
    }
    j["game"] = std::string(to_string(game));
    return j;
}

void emit_report(const harness::ExperimentReport& report) {
    const auto& c = report.config;
    if (!c.csv_path.empty()) {
        write_file(c.csv_path, harness::serialize_report(report, harness::Format::csv));
        const auto dot = c.csv_path.rfind(".csv");
        const auto base = dot == std::string::npos ? c.csv_path : c.csv_path.substr(0, dot);
        write_file(base + ".summary.csv", harness::serialize_summary_csv(report));
    }
    if (!c.json_path.empty()) write_file(c.json_path, harness::serialize_report(report, harness::Format::json));
    if (c.csv_path.empty() && c.json_path.empty()) std::cout << harness::serialize_summary_csv(report);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
}

void print_tests(const harness::ExperimentReport& report) {
    std::cout << harness::serialize_summary_csv(report);
    std::cout << "\ntest,a,b,statistic,df,p_value,significant\n";
    for (const auto& t : report.solvability_tests) {
        std::cout << "welch," << t.a << ',' << t.b << ',' << t.result.statistic << ',' << t.result.df << ','
                  << t.result.p_value << ',' << (t.result.significant ? 1 : 0) << '\n';
    }
    if (report.length_test) {
        const auto& t = *report.length_test;
        std::cout << "kruskal-wallis,all,," << t.statistic << ',' << t.df << ',' << t.p_value << ','
                  << (t.significant ? 1 : 0) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solitaire puzzle generators, solvers and experiment harness"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Print generated challenges in text format");
    std::string gen_game, gen_algorithm = "shuffled", gen_params;
    std::uint64_t gen_seed = 1;
    int gen_count = 1;
    bool raw_seed = false;
    gen->add_option("game", gen_game, "boxoff, pretzel or fujisan")->required();
    gen->add_option("--algorithm,-a", gen_algorithm, "Generator name");
    gen->add_option("--seed,-s", gen_seed, "Master seed");
    gen->add_option("-n", gen_count, "Number of challenges")->check(CLI::PositiveNumber);
    gen->add_option("--params,-p", gen_params, "Comma separated parameters, e.g. 4,6,4");
    gen->add_flag("--raw-seed", raw_seed, "Use the seed directly for a single challenge");

    auto* solve = app.add_subcommand("solve", "Solve a challenge file and print the result as JSON");
    std::string solve_path;
    std::uint64_t solve_budget = search::kDefaultNodeBudget;
    solve->add_option("file", solve_path, "Challenge text file, or - for stdin")->required();
    solve->add_option("--budget", solve_budget, "Node expansion budget");

    auto* count = app.add_subcommand("count", "Print the size of a generator's challenge space");
    std::string count_game, count_algorithm = "shuffled", count_params;
    count->add_option("game", count_game, "boxoff, pretzel or fujisan")->required();
    count->add_option("--algorithm,-a", count_algorithm, "Generator name");
    count->add_option("--params,-p", count_params, "Comma separated parameters");

    auto* exp = app.add_subcommand("experiment", "Run an experiment from a JSON config");
    std::string exp_config;
    int exp_workers = 0;
    exp->add_option("--config,-c", exp_config, "Config file")->required();
    exp->add_option("--workers,-j", exp_workers, "Worker threads (default from SOLITAIRE_WORKERS)");

    auto* analyze = app.add_subcommand("analyze", "Recompute statistics from a JSON report");
    std::string analyze_path;
    analyze->add_option("report", analyze_path, "JSON report")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const Game game = parse_game(gen_game);
            const auto params = gen_params.empty() ? default_params(game) : parse_params(gen_params);
            const auto stream = harness::stream_name(game, gen_algorithm);
            for (int i = 0; i < gen_count; ++i) {
                const std::uint64_t seed =
                    raw_seed ? gen_seed + static_cast<std::uint64_t>(i)
                             : stream_seed(gen_seed, stream, static_cast<std::uint64_t>(i));
                if (i > 0) std::cout << '\n';
                std::cout << harness::generate_text(game, gen_algorithm, params, seed);
            }
        } else if (*solve) {
            const std::string text = solve_path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                                       : read_file(solve_path);
            std::cout << solve_text(text, solve_budget).dump(2) << '\n';
        } else if (*count) {
            const Game game = parse_game(count_game);
            const auto params = count_params.empty() ? default_params(game) : parse_params(count_params);
            const auto result = counting::challenge_space_size(game, count_algorithm, params);
            nlohmann::json j;
            j["game"] = std::string(to_string(game));
            j["algorithm"] = count_algorithm;
            j["params"] = params;
            j["exact"] = result.exact.str();
            j["order_of_magnitude"] = result.order_of_magnitude;
            const auto published = counting::published_magnitude(game, count_algorithm, params);
            j["published_magnitude"] = published ? nlohmann::json(*published) : nlohmann::json(nullptr);
            if (game == Game::boxoff && count_algorithm == "shuffled") {
                const auto printed = counting::boxoff_printed_formula(params[0], params[1], params[2]);
                j["printed_formula"] = printed.str();
                j["printed_formula_magnitude"] = counting::floor_log10(printed);
            }
            std::cout << j.dump(2) << '\n';
        } else if (*exp) {
            const auto config = harness::config_from_json(nlohmann::json::parse(read_file(exp_config)));
            emit_report(harness::run_experiment(config, exp_workers));
        } else if (*analyze) {
            auto report = harness::report_from_json(nlohmann::json::parse(read_file(analyze_path)));
            for (auto& alg : report.algorithms) alg.summary = harness::summarize(report.config, alg.rows);
            harness::compute_tests(report);
            print_tests(report);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "solitaire/errors.hpp"
#include "solitaire/harness.hpp"

namespace solitaire::harness {

namespace {

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <class T>
std::string optional_field(const std::optional<T>& v) {
    if (!v) return {};
    if constexpr (std::is_same_v<T, double>) {
        return format_double(*v);
    } else if constexpr (std::is_same_v<T, bool>) {
        return *v ? "1" : "0";
    } else {
        return std::to_string(*v);
    }
}

nlohmann::json double_to_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    return v;
}

double double_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        throw ParseError("report: bad number '" + s + "'");
    }
    return j.get<double>();
}

template <class T>
nlohmann::json optional_to_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return j[key].get<T>();
}

nlohmann::json test_to_json(const stats::TestResult& t) {
    return {{"statistic", double_to_json(t.statistic)},
            {"p_value", double_to_json(t.p_value)},
            {"significant", t.significant},
            {"df", double_to_json(t.df)}};
}

stats::TestResult test_from_json(const nlohmann::json& j) {
    stats::TestResult t;
    t.statistic = double_from_json(j.at("statistic"));
    t.p_value = double_from_json(j.at("p_value"));
    t.significant = j.at("significant").get<bool>();
    t.df = double_from_json(j.at("df"));
    return t;
}

nlohmann::json doubles_to_json(const std::vector<double>& values) {
    auto out = nlohmann::json::array();
    for (double v : values) out.push_back(double_to_json(v));
    return out;
}

std::vector<double> doubles_from_json(const nlohmann::json& j) {
    std::vector<double> out;
    for (const auto& v : j) out.push_back(double_from_json(v));
    return out;
}

nlohmann::json row_to_json(const ChallengeRow& r) {
    return {{"index", r.index},
            {"seed", r.seed},
            {"solvable", std::string(to_string(r.solvable))},
            {"min_length", optional_to_json(r.min_length)},
            {"random_wins", r.random_wins},
            {"playouts", r.playouts},
            {"nodes_expanded", r.nodes_expanded},
            {"pair_equality", optional_to_json(r.pair_equality)},
            {"connectivity", optional_to_json(r.connectivity)},
            {"ducking_crab", optional_to_json(r.ducking_crab)},
            {"duelling_deuces", optional_to_json(r.duelling_deuces)},
            {"counterintuitive", optional_to_json(r.counterintuitive)}};
}

ChallengeRow row_from_json(const nlohmann::json& j) {
    ChallengeRow r;
    r.index = j.at("index").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.solvable = parse_solvability(j.at("solvable").get<std::string>());
    r.min_length = optional_from_json<int>(j, "min_length");
    r.random_wins = j.at("random_wins").get<int>();
    r.playouts = j.at("playouts").get<int>();
    r.nodes_expanded = j.at("nodes_expanded").get<std::uint64_t>();
    r.pair_equality = optional_from_json<double>(j, "pair_equality");
    r.connectivity = optional_from_json<double>(j, "connectivity");
    r.ducking_crab = optional_from_json<bool>(j, "ducking_crab");
    r.duelling_deuces = optional_from_json<bool>(j, "duelling_deuces");
    r.counterintuitive = optional_from_json<int>(j, "counterintuitive");
    return r;
}

nlohmann::json summary_to_json(const AlgorithmSummary& s) {
    return {{"trial_solvability", doubles_to_json(s.trial_solvability)},
            {"trial_random", doubles_to_json(s.trial_random)},
            {"p_solver", double_to_json(s.p_solver)},
            {"p_random", double_to_json(s.p_random)},
            {"interest", double_to_json(s.interest)},
            {"solvable", s.solvable},
            {"determinate", s.determinate},
            {"indeterminate", s.indeterminate},
            {"median_length", optional_to_json(s.median_length)}};
}

AlgorithmSummary summary_from_json(const nlohmann::json& j) {
    AlgorithmSummary s;
    s.trial_solvability = doubles_from_json(j.at("trial_solvability"));
    s.trial_random = doubles_from_json(j.at("trial_random"));
    s.p_solver = double_from_json(j.at("p_solver"));
    s.p_random = double_from_json(j.at("p_random"));
    s.interest = double_from_json(j.at("interest"));
    s.solvable = j.at("solvable").get<int>();
    s.determinate = j.at("determinate").get<int>();
    s.indeterminate = j.at("indeterminate").get<int>();
    s.median_length = optional_from_json<int>(j, "median_length");
    return s;
}

std::string rows_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "game,algorithm,index,seed,solvable,min_length,random_wins,playouts,nodes_expanded,"
           "pair_equality,connectivity,ducking_crab,duelling_deuces,counterintuitive\n";
    const auto game = to_string(report.config.game);
    for (const auto& alg : report.algorithms) {
        for (const auto& r : alg.rows) {
            out << game << ',' << alg.algorithm << ',' << r.index << ',' << r.seed << ',' << to_string(r.solvable)
                << ',' << optional_field(r.min_length) << ',' << r.random_wins << ',' << r.playouts << ','
                << r.nodes_expanded << ',' << optional_field(r.pair_equality) << ','
                << optional_field(r.connectivity) << ',' << optional_field(r.ducking_crab) << ','
                << optional_field(r.duelling_deuces) << ',' << optional_field(r.counterintuitive) << '\n';
        }
    }
    return out.str();
}

}  // namespace

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["config"] = config_to_json(report.config);
    j["rng"] = report.rng;
    j["version"] = report.version;
    auto algs = nlohmann::json::array();
    for (const auto& alg : report.algorithms) {
        auto rows = nlohmann::json::array();
        for (const auto& r : alg.rows) rows.push_back(row_to_json(r));
        algs.push_back({{"algorithm", alg.algorithm}, {"summary", summary_to_json(alg.summary)}, {"rows", rows}});
    }
    j["algorithms"] = algs;
    auto tests = nlohmann::json::array();
    for (const auto& t : report.solvability_tests) {
        tests.push_back({{"a", t.a}, {"b", t.b}, {"result", test_to_json(t.result)}});
    }
    j["solvability_tests"] = tests;
    j["length_test"] = report.length_test ? test_to_json(*report.length_test) : nlohmann::json(nullptr);
    j["warnings"] = report.warnings;
    return j;
}

ExperimentReport report_from_json(const nlohmann::json& j) {
    ExperimentReport report;
    try {
        auto config = j.at("config");
        report.config = config_from_json(config);
        report.rng = j.at("rng").get<std::string>();
        report.version = j.at("version").get<std::string>();
        for (const auto& a : j.at("algorithms")) {
            AlgorithmReport alg;
            alg.algorithm = a.at("algorithm").get<std::string>();
            alg.summary = summary_from_json(a.at("summary"));
            for (const auto& r : a.at("rows")) alg.rows.push_back(row_from_json(r));
            report.algorithms.push_back(std::move(alg));
        }
        for (const auto& t : j.at("solvability_tests")) {
            report.solvability_tests.push_back(
                PairwiseTest{t.at("a").get<std::string>(), t.at("b").get<std::string>(), test_from_json(t.at("result"))});
        }
        if (!j.at("length_test").is_null()) report.length_test = test_from_json(j["length_test"]);
        report.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
    return report;
}

std::string serialize_summary_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "game,algorithm,challenges,determinate,indeterminate,solvable,p_solver,p_random,interest,median_length\n";
    for (const auto& alg : report.algorithms) {
        const auto& s = alg.summary;
        out << to_string(report.config.game) << ',' << alg.algorithm << ',' << alg.rows.size() << ','
            << s.determinate << ',' << s.indeterminate << ',' << s.solvable << ',' << format_double(s.p_solver)
            << ',' << format_double(s.p_random) << ',' << format_double(s.interest) << ','
            << optional_field(s.median_length) << '\n';
    }
    return out.str();
}

std::string serialize_report(const ExperimentReport& report, Format format) {
    if (format == Format::csv) return rows_csv(report);
    return report_to_json(report).dump(2) + "\n";
}

}  // namespace solitaire::harness

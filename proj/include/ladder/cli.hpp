// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. run_cli() is the whole program minus main(), so the
// commands can be driven in-process by tests.
//
// Exit codes: 0 chosen / success, 1 error, 2 abstain, 3 repartition or no
// unique choice, 4 engine/oracle disagreement in `batch`.

#ifndef LADDER_CLI_HPP
#define LADDER_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ladder/compare.hpp"
#include "ladder/ladder.hpp"
#include "ladder/oracle.hpp"
#include "ladder/scenario_io.hpp"
#include "ladder/validate.hpp"

namespace ladder::cli {

inline constexpr int kExitChosen = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAbstain = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitDisagreement = 4;

inline int exit_code(Verdict v) {
    switch (v) {
        case Verdict::chosen: return kExitChosen;
        case Verdict::abstain: return kExitAbstain;
        case Verdict::repartition:
        case Verdict::no_unique_choice: return kExitUndecided;
    }
    return kExitError;
}

using Engine = std::function<LadderOutcome(const DecisionTask&, DominanceMode)>;

// Test seams.
struct Hooks {
    Engine engine;  // replaces the engine in `batch` when set
};

namespace detail {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void report(std::ostream& err, const ScenarioError& e) {
    err << "error[" << to_string(e.category()) << "]: " << e.what() << "\n";
    for (std::size_t i = 1; i < e.violations().size(); ++i)
        err << "error[" << to_string(e.violations()[i].category) << "]: " << e.violations()[i].message << "\n";
}

inline DominanceMode parse_mode(const std::string& s) {
    return s == "undominated" ? DominanceMode::undominated : DominanceMode::global;
}

inline void print_sift(std::ostream& out, const SiftResult& sift) {
    out << "feasible: [" << io_detail::joined(sift.feasible, [](const AlternativeId& s) { return s; }) << "]\n";
    for (const auto& e : sift.eliminations)
        out << "eliminated " << e.alternative << ": attribute " << e.attribute << " value " << format_value(e.value)
            << " fails " << format_predicate(e.threshold.predicate) << "\n";
}

struct DecideArgs {
    std::string path;
    std::string mode = "global";
    bool json = false;
};

inline int cmd_decide(const DecideArgs& a, std::ostream& out, std::ostream& err) {
    DecisionTask task;
    try {
        task = parse_scenario(read_file(a.path));
    } catch (const ScenarioError& e) {
        report(err, e);
        return kExitError;
    }
    const auto mode = parse_mode(a.mode);
    const auto d = decide(task, mode);
    if (a.json) {
        nlohmann::ordered_json j;
        j["task_id"] = task.task_id;
        j["mode"] = to_string(mode);
        j["sift"] = sift_json(d.sift);
        j["outcome"] = outcome_json(d.outcome);
        out << j.dump(2) << "\n";
    } else {
        out << "task: " << task.task_id << "\n";
        print_sift(out, d.sift);
        out << serialize_outcome(d.outcome);
    }
    return exit_code(d.outcome.verdict);
}

struct CompareArgs {
    std::string path;
    std::vector<std::string> theories{"lt", "pt", "it"};
    std::optional<int> pt_risk_attr;
    std::optional<int> it_profit_attr;
    std::size_t it_budget = 0;
    std::string mode = "global";
    std::optional<std::string> observed;
    bool json = false;
};

inline int cmd_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
    CompareOptions opt;
    opt.theories.clear();
    for (const auto& name : a.theories) {
        const auto t = theory_from_string(name);
        if (!t) {
            err << "error[configuration]: unknown theory '" << name << "' (expected lt, pt or it)\n";
            return kExitError;
        }
        if (std::find(opt.theories.begin(), opt.theories.end(), *t) == opt.theories.end()) opt.theories.push_back(*t);
    }
    if (a.pt_risk_attr) opt.pt_risk_attribute = AttributeId{*a.pt_risk_attr};
    if (a.it_profit_attr) opt.it_profit_attribute = AttributeId{*a.it_profit_attr};
    opt.it_budget = a.it_budget;
    opt.mode = parse_mode(a.mode);

    DecisionTask task;
    try {
        task = parse_scenario(read_file(a.path));
    } catch (const ScenarioError& e) {
        report(err, e);
        return kExitError;
    }

    std::vector<TheoryRow> rows;
    try {
        rows = compare_theories(task, opt);
    } catch (const Error& e) {
        err << "error[" << to_string(e.category()) << "]: " << e.what() << "\n";
        return kExitError;
    }

    if (a.json) {
        nlohmann::ordered_json j;
        j["task_id"] = task.task_id;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json r;
            r["theory"] = to_string(row.theory);
            r["result"] = describe(row);
            if (a.observed) r["judgement"] = to_string(judge(row.choice, *a.observed));
            j["rows"].push_back(std::move(r));
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            out << to_string(row.theory) << ": " << describe(row);
            if (a.observed) out << " (" << to_string(judge(row.choice, *a.observed)) << ")";
            out << "\n";
        }
    }
    return 0;
}

inline int cmd_validate(const std::vector<std::string>& paths, std::ostream& out, std::ostream& err) {
    bool all_ok = true;
    for (const auto& path : paths) {
        std::vector<Violation> violations;
        try {
            violations = validate_task(parse_scenario_unchecked(read_file(path)));
        } catch (const ScenarioError& e) {
            violations.push_back({e.category(), e.what()});
        } catch (const IoError& e) {
            violations.push_back({ErrorCategory::configuration, e.what()});
        }
        if (violations.empty()) {
            out << path << ": ok\n";
            continue;
        }
        all_ok = false;
        for (const auto& v : violations) err << path << ": error[" << to_string(v.category) << "]: " << v.message << "\n";
    }
    return all_ok ? 0 : kExitError;
}

struct BatchArgs {
    std::string dir;
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::string kinds = "all";
};

inline int cmd_batch(const BatchArgs& a, const Hooks& hooks, std::ostream& out, std::ostream& err) {
    const Engine engine = hooks.engine ? hooks.engine : Engine([](const DecisionTask& t, DominanceMode m) {
        return decide(t, m).outcome;
    });
    oracle::SweepLimits limits;
    limits.mix = a.kinds == "total" ? oracle::KindMix::total_orders() : oracle::KindMix::all();

    std::size_t agree = 0;
    std::optional<std::uint64_t> first_bad;
    for (std::size_t i = 0; i < a.count; ++i) {
        const std::uint64_t seed = a.seed + i;
        const auto task = oracle::sweep_task(seed, limits);
        bool ok = true;
        for (auto mode : {DominanceMode::global, DominanceMode::undominated}) {
            const auto got = engine(task, mode);
            const auto want = oracle::brute_force_lt(task, mode);
            if (got.verdict != want.verdict || got.chosen != want.chosen) {
                ok = false;
                err << "disagreement: seed " << seed << " mode " << to_string(mode) << ": engine "
                    << to_string(got.verdict) << " " << got.chosen.value_or("-") << ", oracle "
                    << to_string(want.verdict) << " " << want.chosen.value_or("-") << "\n";
            }
        }
        if (ok) {
            ++agree;
        } else {
            if (!first_bad) first_bad = seed;
            if (!a.dir.empty()) {
                std::filesystem::create_directories(a.dir);
                std::ofstream(std::filesystem::path(a.dir) / ("seed-" + std::to_string(seed) + ".json"))
                    << serialize_scenario(task);
            }
        }
    }
    out << agree << "/" << a.count << " agree\n";
    if (first_bad) {
        out << "first offending seed: " << *first_bad << "\n";
        return kExitDisagreement;
    }
    return 0;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err, const Hooks& hooks = {}) {
    CLI::App app{"Ladder decision engine: sifting and lexicographic dominance search over scenario files", "ladder"};
    app.require_subcommand(1);

    auto add_mode = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--mode", target, "dominance mode")
            ->check(CLI::IsMember({"global", "undominated"}))
            ->capture_default_str();
    };

    detail::DecideArgs decide_args;
    auto* decide_cmd = app.add_subcommand("decide", "sift a scenario and run the ladder search");
    decide_cmd->add_option("path", decide_args.path, "scenario file")->required();
    add_mode(decide_cmd, decide_args.mode);
    decide_cmd->add_flag("--json", decide_args.json, "machine-readable output");

    detail::CompareArgs compare_args;
    auto* compare_cmd = app.add_subcommand("compare", "run the ladder engine against the baseline theories");
    compare_cmd->add_option("path", compare_args.path, "scenario file")->required();
    compare_cmd->add_option("--theories", compare_args.theories, "comma-separated subset of lt,pt,it")
        ->delimiter(',')
        ->capture_default_str();
    compare_cmd->add_option("--pt-risk-attr", compare_args.pt_risk_attr, "risk attribute for the prospect-theory proxy");
    compare_cmd->add_option("--it-profit-attr", compare_args.it_profit_attr,
                            "quantitative attribute for the image-theory profitability test");
    compare_cmd->add_option("--it-budget", compare_args.it_budget, "image-theory rejection budget")
        ->capture_default_str();
    compare_cmd->add_option("--observed", compare_args.observed, "observed choice; adds a judgement column");
    add_mode(compare_cmd, compare_args.mode);
    compare_cmd->add_flag("--json", compare_args.json, "machine-readable output");

    std::vector<std::string> validate_paths;
    auto* validate_cmd = app.add_subcommand("validate", "parse and check scenario files");
    validate_cmd->add_option("paths", validate_paths, "scenario files")->required();

    detail::BatchArgs batch_args;
    auto* batch_cmd = app.add_subcommand("batch", "compare the engine with the brute-force oracle on random tasks");
    batch_cmd->add_option("dir", batch_args.dir, "directory receiving tasks that disagree");
    batch_cmd->add_option("--seed", batch_args.seed, "first seed")->capture_default_str();
    batch_cmd->add_option("--count", batch_args.count, "number of tasks")->capture_default_str();
    batch_cmd->add_option("--kinds", batch_args.kinds, "value forms to generate")
        ->check(CLI::IsMember({"all", "total"}))
        ->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (decide_cmd->parsed()) return detail::cmd_decide(decide_args, out, err);
        if (compare_cmd->parsed()) return detail::cmd_compare(compare_args, out, err);
        if (validate_cmd->parsed()) return detail::cmd_validate(validate_paths, out, err);
        if (batch_cmd->parsed()) return detail::cmd_batch(batch_args, hooks, out, err);
    } catch (const detail::IoError& e) {
        err << "error[io]: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace ladder::cli

#endif  // LADDER_CLI_HPP

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "semid/census.hpp"
#include "semid/report_io.hpp"

namespace {

using namespace semid;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;     // verification failure or internal error
constexpr int kExitParseError = 2;  // bad graph text, bad store
constexpr int kExitUnresolved = 3;  // some target hit the resource budget

TargetFilter parse_target_filter(const std::vector<std::string>& tokens) {
    TargetFilter f;
    if (tokens.empty()) return f;
    bool groups_only = true;
    for (const auto& t : tokens)
        if (t != "lambda" && t != "direct" && t != "omega" && t != "total" && t != "path")
            groups_only = false;
    if (groups_only) {
        f.direct = f.omega = f.total = f.path = false;
        for (const auto& t : tokens) {
            if (t == "lambda" || t == "direct") f.direct = true;
            if (t == "omega") f.omega = true;
            if (t == "total") f.total = true;
            if (t == "path") f.path = true;
        }
    } else {
        f.names = tokens;
    }
    return f;
}

bool any_unresolved(const GraphReport& r) {
    for (const auto& s : r.statuses)
        if (is_unresolved(s)) return true;
    return !r.vanishing_ideal_resolved;
}

int cmd_analyze(const std::string& graph_text, const std::string& format, double timeout_secs,
                std::uint64_t max_pairs, const std::vector<std::string>& targets,
                bool no_shortcut) {
    MixedGraph g;
    try {
        g = parse_graph(graph_text);
    } catch (const std::exception& e) {
        std::cerr << "graph parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    ClassifyOptions opts;
    opts.budget.wall = std::chrono::milliseconds(static_cast<long>(timeout_secs * 1000));
    opts.budget.max_pairs = max_pairs;
    opts.filter = parse_target_filter(targets);
    opts.omega_shortcut = !no_shortcut;

    GraphReport report = classify_graph(g, opts);
    if (format == "json")
        std::cout << report_to_json(report).dump(2) << "\n";
    else if (format == "dot")
        std::cout << report_to_dot(report);
    else
        std::cout << report_to_text(report);
    return any_unresolved(report) ? kExitUnresolved : kExitOk;
}

int cmd_census(int nodes, std::string store, bool resume, int jobs, double timeout_secs,
               std::uint64_t max_pairs, const std::vector<std::uint64_t>& only,
               const std::vector<std::string>& targets, const std::string& summary_json) {
    if (store.empty()) {
        if (const char* env = std::getenv("SEMID_STORE"))
            store = env;
        else
            store = "census_m" + std::to_string(nodes) + ".jsonl";
    }
    CensusOptions opts;
    opts.classify.budget.wall =
        std::chrono::milliseconds(static_cast<long>(timeout_secs * 1000));
    opts.classify.budget.max_pairs = max_pairs;
    opts.classify.filter = parse_target_filter(targets);
    opts.store_path = store;
    opts.resume = resume;
    opts.jobs = jobs;
    if (!only.empty()) opts.only_ids = only;

    try {
        CensusSummary summary = run_census(nodes, opts);
        std::cout << summary_to_text(summary);
        if (!summary_json.empty()) {
            std::ofstream out(summary_json);
            out << summary_to_json(summary).dump(2) << "\n";
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "census error: " << e.what() << "\n";
        return kExitParseError;
    }
}

int cmd_verify(const std::string& graph_text, int trials, std::uint64_t seed,
               double timeout_secs, std::uint64_t max_pairs,
               const std::vector<std::string>& targets) {
    MixedGraph g;
    try {
        g = parse_graph(graph_text);
    } catch (const std::exception& e) {
        std::cerr << "graph parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    ClassifyOptions opts;
    opts.budget.wall = std::chrono::milliseconds(static_cast<long>(timeout_secs * 1000));
    opts.budget.max_pairs = max_pairs;
    opts.filter = parse_target_filter(targets);

    GraphReport report = classify_graph(g, opts);
    bool failed = false;
    int verified = 0;
    for (std::size_t k = 0; k < report.targets.size(); ++k) {
        const auto& t = report.targets[k];
        const auto& s = report.statuses[k];
        if (!status_degree(s)) {
            std::cout << t.name() << ": skipped (" << status_brief(s) << ")\n";
            continue;
        }
        VerifyReport rep =
            verify_numeric(g, t, s, trials, seed + static_cast<std::uint64_t>(k));
        ++verified;
        std::cout << t.name() << ": " << (rep.ok() ? "pass" : "FAIL") << " (" << rep.passed
                  << " passed, " << rep.skipped << " degenerate skips";
        if (status_degree(s) > 1)
            std::cout << ", degree " << (rep.degree_confirmed ? "confirmed" : "NOT confirmed");
        std::cout << ")\n";
        if (!rep.ok() || (status_degree(s) > 1 && !rep.degree_confirmed)) {
            failed = true;
            for (const auto& f : rep.failures) std::cout << "  counterexample: " << f << "\n";
        }
    }
    std::cout << verified << " targets verified over " << trials << " trials each (seed "
              << seed << ")\n";
    return failed ? kExitFailure : kExitOk;
}

int cmd_criteria(const std::string& graph_text) {
    MixedGraph g;
    try {
        g = parse_graph(graph_text);
    } catch (const std::exception& e) {
        std::cerr << "graph parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    std::cout << criteria_to_text(g, run_criteria(g));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semid: generic identifiability of linear SEM parameters on mixed graphs"};
    app.require_subcommand(1);

    std::string graph_text, format = "text", store, summary_json;
    double timeout_secs = 600.0;
    std::uint64_t max_pairs = 200000, seed = 20240801;
    int nodes = 3, jobs = 1, trials = 100;
    bool resume = false, no_shortcut = false;
    std::vector<std::string> targets;
    std::vector<std::uint64_t> only;

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--timeout-secs", timeout_secs,
                        "wall-clock budget per Groebner run (default 600)");
        cmd->add_option("--max-pairs", max_pairs,
                        "S-pair budget per Groebner run (default 200000)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classify every parameter of one graph");
    analyze->add_option("graph", graph_text, "graph, e.g. \"3; 1->2 2->3; 2<->3\"")->required();
    analyze->add_option("--format", format, "text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    analyze->add_option("--targets", targets,
                        "comma list of target names or kinds (lambda,omega,total,path)")
        ->delimiter(',');
    analyze->add_flag("--no-omega-shortcut", no_shortcut,
                      "always run omega eliminations, never back-substitute");
    add_budget(analyze);

    CLI::App* census = app.add_subcommand("census", "classify all graphs on m vertices");
    census->add_option("--nodes", nodes, "vertex count")->required();
    census->add_option("--store", store, "record store path (env SEMID_STORE, else census_m<m>.jsonl)");
    census->add_flag("--resume", resume, "skip graphs already in the store");
    census->add_option("--jobs", jobs, "worker threads");
    census->add_option("--only", only, "restrict to these graph ids")->delimiter(',');
    census->add_option("--targets", targets, "target kinds to classify")->delimiter(',');
    census->add_option("--summary-json", summary_json, "also write the summary as JSON");
    add_budget(census);

    CLI::App* dot = app.add_subcommand("dot", "emit a colored DOT rendering");
    dot->add_option("graph", graph_text, "graph")->required();
    add_budget(dot);

    CLI::App* verify = app.add_subcommand("verify", "re-check formulas on exact random draws");
    verify->add_option("graph", graph_text, "graph")->required();
    verify->add_option("--trials", trials, "draws per target (default 100)");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--targets", targets, "restrict verified targets")->delimiter(',');
    add_budget(verify);

    CLI::App* criteria = app.add_subcommand("criteria", "graphical criteria for one graph");
    criteria->add_option("graph", graph_text, "graph")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(graph_text, format, timeout_secs, max_pairs, targets,
                               no_shortcut);
        if (census->parsed())
            return cmd_census(nodes, store, resume, jobs, timeout_secs, max_pairs, only,
                              targets, summary_json);
        if (dot->parsed()) {
            std::vector<std::string> lam_omega{"lambda", "omega"};
            return cmd_analyze(graph_text, "dot", timeout_secs, max_pairs, lam_omega, false);
        }
        if (verify->parsed())
            return cmd_verify(graph_text, trials, seed, timeout_secs, max_pairs, targets);
        if (criteria->parsed()) return cmd_criteria(graph_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

#include "abp/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abp/oracle.hpp"
#include "abp/parser.hpp"
#include "abp/planner.hpp"

namespace abp {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_warnings(const Domain& d, std::ostream& err) {
    for (const std::string& w : d.warnings) err << "warning: " << w << "\n";
}

struct PlanOptions {
    std::string domain_file;
    std::string problem_file;
    int max_assumptions = -1;  // negative: unbounded
    int max_depth = 64;
    bool iterative_deepening = false;
    bool widen_assumptions = false;
    bool dominance_pruning = false;
    std::uint64_t node_budget = 1000000;
    std::string format = "sexp";
    std::uint64_t seed = 0;  // reserved; accepted for reproducible wrappers
};

SearchConfig to_config(const PlanOptions& opt) {
    SearchConfig cfg;
    if (opt.max_assumptions >= 0) cfg.max_assumptions = opt.max_assumptions;
    cfg.max_depth = opt.max_depth;
    cfg.iterative_deepening = opt.iterative_deepening;
    cfg.node_budget = opt.node_budget;
    cfg.dominance_pruning = opt.dominance_pruning;
    return cfg;
}

ordered_json stats_json(const SearchStats& stats) {
    ordered_json out;
    out["expansions"] = stats.expansions;
    out["max_frontier"] = stats.max_frontier;
    out["tree_size"] = stats.tree_size;
    return out;
}

std::string stats_sexpr(const SearchStats& stats) {
    std::ostringstream os;
    os << "(:stats :expansions " << stats.expansions << " :max-frontier " << stats.max_frontier
       << " :tree-size " << stats.tree_size << ")";
    return os.str();
}

int report_exit_code(SearchStatus status) {
    switch (status) {
        case SearchStatus::Solved: return kExitSolved;
        case SearchStatus::NoSolutionWithinBounds: return kExitNoSolution;
        case SearchStatus::BudgetExhausted: return kExitBudget;
    }
    return kExitError;
}

int cmd_plan(const PlanOptions& opt, std::ostream& out, std::ostream& err) {
    Domain domain = parse_domain_file(opt.domain_file);
    print_warnings(domain, err);
    Problem problem = parse_problem_file(opt.problem_file, domain);

    PlanReport report = opt.widen_assumptions ? plan_widening(domain, problem, to_config(opt))
                                              : plan(domain, problem, to_config(opt));

    if (opt.format == "json") {
        ordered_json doc;
        doc["status"] = to_string(report.status);
        if (report.conjecture) {
            doc["conjecture"] = ordered_json::parse(to_json(*report.conjecture));
        }
        doc["stats"] = stats_json(report.stats);
        out << doc.dump() << "\n";
    } else {
        out << "(:report :status " << to_string(report.status) << ")\n";
        if (report.conjecture) out << to_sexpr(*report.conjecture);
        out << stats_sexpr(report.stats) << "\n";
    }
    return report_exit_code(report.status);
}

struct ValidateOptions {
    std::string domain_file;
    std::string problem_file;
    std::string conjecture_file;
    std::string format = "sexp";
};

int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err) {
    Domain domain = parse_domain_file(opt.domain_file);
    print_warnings(domain, err);
    Problem problem = parse_problem_file(opt.problem_file, domain);

    // Accept either a bare conjecture or full `abp plan` output.
    Conjecture chi;
    bool found = false;
    for (const SExpr& node : read_sexprs(read_file(opt.conjecture_file))) {
        if (node.is_list() && node.size() > 0 && node[0].is_atom &&
            node[0].atom == ":conjecture") {
            chi = parse_conjecture_node(node);
            found = true;
            break;
        }
    }
    if (!found) throw std::runtime_error("no (:conjecture ...) form in " + opt.conjecture_file);

    ValidationReport report = validate(chi, problem.init, domain);

    if (opt.format == "json") {
        ordered_json doc;
        doc["valid"] = report.valid;
        doc["trajectory"] = ordered_json::array();
        for (const KnowledgeState& s : report.trajectory)
            doc["trajectory"].push_back(s.to_string());
        if (report.first_failure) {
            doc["first_failure"]["step"] = report.first_failure->first;
            doc["first_failure"]["missing"] = to_string(report.first_failure->second);
        }
        out << doc.dump() << "\n";
    } else {
        out << "(:validation :valid " << (report.valid ? "true" : "false");
        if (report.first_failure)
            out << " (:first-failure :step " << report.first_failure->first << " :missing "
                << to_string(report.first_failure->second) << ")";
        out << "\n  (:trajectory";
        for (const KnowledgeState& s : report.trajectory) out << "\n    " << s.to_string();
        out << "))\n";
    }
    return report.valid ? kExitSolved : kExitNoSolution;
}

struct OracleOptions {
    std::string domain_file;
    std::string problem_file;
    int depth = 8;
    int weight = 3;
    std::string format = "sexp";
};

int cmd_oracle(const OracleOptions& opt, std::ostream& out, std::ostream& err) {
    Domain domain = parse_domain_file(opt.domain_file);
    print_warnings(domain, err);
    Problem problem = parse_problem_file(opt.problem_file, domain);

    OracleResult result = brute_force(problem.init, domain, problem.goals, opt.depth, opt.weight);

    if (opt.format == "json") {
        ordered_json doc;
        if (result.min_weight) doc["min_weight"] = *result.min_weight;
        else doc["min_weight"] = nullptr;
        doc["witnesses"] = result.witnesses.size();
        doc["explored"] = result.explored;
        out << doc.dump() << "\n";
    } else {
        out << "(:oracle :min-weight ";
        if (result.min_weight) out << *result.min_weight;
        else out << "none";
        out << " :witnesses " << result.witnesses.size() << " :explored " << result.explored
            << ")\n";
    }
    return kExitSolved;
}

struct BenchOptions {
    std::string suite_dir;
    int repeat = 1;
    std::vector<int> bounds{0, 2};
    std::string format = "sexp";
};

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    // Problems name their domain, so pair every *.p with the *.abp whose
    // parsed name matches.
    std::vector<fs::path> domain_files, problem_files;
    for (const auto& entry : fs::directory_iterator(opt.suite_dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".abp") domain_files.push_back(entry.path());
        if (entry.path().extension() == ".p") problem_files.push_back(entry.path());
    }
    std::sort(domain_files.begin(), domain_files.end());
    std::sort(problem_files.begin(), problem_files.end());

    std::vector<std::pair<std::string, Domain>> domains;
    for (const fs::path& f : domain_files) {
        Domain d = parse_domain_file(f.string());
        print_warnings(d, err);
        std::string name = d.name;
        domains.emplace_back(std::move(name), std::move(d));
    }

    for (const fs::path& f : problem_files) {
        SExpr root = read_sexpr(read_file(f.string()));
        if (!root.is_list() || root.size() < 3 || !root[2].is_atom)
            throw root.error("expected (defproblem <name> <domain-name> ...) in " + f.string());
        const std::string& domain_name = root[2].atom;
        const Domain* domain = nullptr;
        for (const auto& [name, d] : domains)
            if (name == domain_name) domain = &d;
        if (!domain)
            throw std::runtime_error("no domain named '" + domain_name + "' for " + f.string());
        Problem problem = parse_problem(read_file(f.string()), *domain);

        for (int bound : opt.bounds) {
            SearchConfig cfg;
            cfg.max_assumptions = bound;
            PlanReport best;
            double best_ms = 0.0;
            for (int k = 0; k < opt.repeat; ++k) {
                PlanReport r = plan(*domain, problem, cfg);
                if (k == 0 || r.stats.elapsed_ms < best_ms) {
                    best_ms = r.stats.elapsed_ms;
                    best = std::move(r);
                }
            }
            std::string instance = f.filename().string();
            if (opt.format == "json") {
                ordered_json row;
                row["instance"] = instance;
                row["bound"] = bound;
                row["expansions"] = best.stats.expansions;
                row["milliseconds"] = best_ms;
                row["status"] = to_string(best.status);
                out << row.dump() << "\n";
            } else {
                out << "(:bench-row :instance " << instance << " :bound " << bound
                    << " :expansions " << best.stats.expansions << " :milliseconds " << best_ms
                    << " :status " << to_string(best.status) << ")\n";
            }
        }
    }
    return kExitSolved;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"assumption-based HTN planner"};
    app.require_subcommand(1);

    PlanOptions plan_opt;
    CLI::App* plan_cmd = app.add_subcommand("plan", "search for a minimal-assumption conjecture");
    plan_cmd->add_option("domain", plan_opt.domain_file, "domain file")->required();
    plan_cmd->add_option("problem", plan_opt.problem_file, "problem file")->required();
    plan_cmd->add_option("--max-assumptions", plan_opt.max_assumptions,
                         "assumption bound (omit for unbounded; 0 is classical planning)");
    plan_cmd->add_option("--max-depth", plan_opt.max_depth, "expansion depth bound");
    plan_cmd->add_flag("--iterative-deepening", plan_opt.iterative_deepening,
                       "restart with depth bound 1,2,... up to --max-depth");
    plan_cmd->add_flag("--widen-assumptions", plan_opt.widen_assumptions,
                       "retry with assumption bound 0,1,2,...");
    plan_cmd->add_flag("--dominance-pruning", plan_opt.dominance_pruning,
                       "drop children dominated on (state, tasks, weight)");
    plan_cmd->add_option("--node-budget", plan_opt.node_budget, "expansion budget");
    plan_cmd->add_option("--format", plan_opt.format, "sexp or json")
        ->check(CLI::IsMember({"sexp", "json"}));
    plan_cmd->add_option("--seed", plan_opt.seed, "reserved for reproducible tooling");

    ValidateOptions val_opt;
    CLI::App* val_cmd = app.add_subcommand("validate", "replay a conjecture file");
    val_cmd->add_option("domain", val_opt.domain_file, "domain file")->required();
    val_cmd->add_option("problem", val_opt.problem_file, "problem file")->required();
    val_cmd->add_option("conjecture", val_opt.conjecture_file, "conjecture file")->required();
    val_cmd->add_option("--format", val_opt.format, "sexp or json")
        ->check(CLI::IsMember({"sexp", "json"}));

    OracleOptions oracle_opt;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive minimal-assumption reference search");
    oracle_cmd->add_option("domain", oracle_opt.domain_file, "domain file")->required();
    oracle_cmd->add_option("problem", oracle_opt.problem_file, "problem file")->required();
    oracle_cmd->add_option("--depth", oracle_opt.depth, "depth bound (max 12)");
    oracle_cmd->add_option("--weight", oracle_opt.weight, "weight bound (max 6)");
    oracle_cmd->add_option("--format", oracle_opt.format, "sexp or json")
        ->check(CLI::IsMember({"sexp", "json"}));

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time a suite directory");
    bench_cmd->add_option("suite", bench_opt.suite_dir, "directory of .abp/.p files")->required();
    bench_cmd->add_option("--repeat", bench_opt.repeat, "runs per instance, best taken");
    bench_cmd->add_option("--bounds", bench_opt.bounds, "assumption bounds to compare");
    bench_cmd->add_option("--format", bench_opt.format, "sexp or json")
        ->check(CLI::IsMember({"sexp", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitSolved;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (plan_cmd->parsed()) return cmd_plan(plan_opt, out, err);
        if (val_cmd->parsed()) return cmd_validate(val_opt, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_opt, out, err);
        if (bench_cmd->parsed()) return cmd_bench(bench_opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace abp

// Command-line front end: graph generation, strategy runs, exact solving,
// the SAT reduction pipeline, DOT export, and the claims harness.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 claim failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dagbisect/claims.hpp"
#include "dagbisect/export.hpp"
#include "dagbisect/generators.hpp"
#include "dagbisect/optimal.hpp"
#include "dagbisect/reduction.hpp"
#include "dagbisect/session.hpp"

namespace {

using nlohmann::ordered_json;
using namespace dagbisect;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

// A dag argument is either a file in the DAG text format or a generator
// shorthand: path<N>, octopus<N>, claw, fig4, fig9, fib<I>.
Dag resolve_dag(const std::string& spec) {
    if (std::ifstream probe(spec); probe.good()) return parse_dag(read_file(spec));
    auto numeric_suffix = [&](const std::string& prefix) -> std::optional<int> {
        if (spec.rfind(prefix, 0) != 0) return std::nullopt;
        std::string rest = spec.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return std::stoi(rest);
    };
    if (spec == "claw") return gen_claw();
    if (spec == "fig4") return gen_fig4();
    if (spec == "fig9") return gen_fig9();
    if (auto n = numeric_suffix("path")) return gen_path(*n);
    if (auto n = numeric_suffix("octopus")) return gen_octopus(*n);
    if (auto n = numeric_suffix("fib")) return gen_fibonacci(*n);
    throw ValidationError("not a readable file or a known dag shorthand: " + spec);
}

int cmd_gen(const std::string& family, int n, int k, int i, int delta, std::uint64_t seed,
            bool no_parity_fix, const std::string& base_path, const std::string& out) {
    Dag result = [&] {
        if (family == "path") return gen_path(n);
        if (family == "octopus") return gen_octopus(n);
        if (family == "claw") return gen_claw();
        if (family == "fig4") return gen_fig4();
        if (family == "fig9") return gen_fig9();
        if (family == "fib") return gen_fibonacci(i);
        if (family == "fib-prime") return gen_fibonacci_prime(i);
        if (family == "pathological") return gen_pathological(k).dag;
        if (family == "jk") return gen_jk(k, !no_parity_fix).dag;
        if (family == "jk-delta") return gen_jk_delta(k, delta, !no_parity_fix).dag;
        if (family == "random-binary") return gen_random_binary(n, seed);
        if (family == "random-delta") return gen_random_delta(n, delta, seed);
        if (family == "comb" || family == "comb-even-tweak") {
            if (base_path.empty())
                throw ValidationError("family '" + family + "' needs a base graph via --dag");
            Dag base = resolve_dag(base_path);
            return family == "comb" ? gen_comb(base).dag : gen_comb_even_tweak(base);
        }
        throw ValidationError("unknown family: " + family);
    }();
    write_output(out, dag_to_text(result));
    return 0;
}

ordered_json run_report(const std::string& dag_spec, const std::string& strategy, const Dag& dag,
                        bool with_optimal, int cap) {
    AncestorTable anc(dag);
    Picker picker = picker_by_name(strategy);
    auto initial = BisectState::prune_to_ancestors(dag, anc, dag.bugged_or_throw());
    int worst = build_strategy_tree(picker, initial).height();

    ordered_json per_faulty = ordered_json::array();
    initial.candidates().for_each_set([&](std::size_t faulty) {
        auto session = run_session(picker, dag, anc, static_cast<VertexId>(faulty));
        per_faulty.push_back(
            ordered_json{{"faulty", static_cast<VertexId>(faulty)}, {"queries", session.queries}});
    });

    ordered_json report;
    report["dag"] = dag_spec;
    report["strategy"] = strategy;
    report["worst_case"] = worst;
    report["per_faulty"] = per_faulty;
    if (with_optimal) {
        SolverOptions opt;
        opt.cap = cap;
        int best = optimal_queries(dag, anc, opt);
        report["optimal"] = best;
        report["ratio"] = best == 0 ? 1.0 : static_cast<double>(worst) / best;
    }
    return report;
}

const char* verdict_name(Verdict v) { return v == Verdict::Bugged ? "bugged" : "clean"; }

int cmd_run(const std::string& strategy, const std::string& dag_spec, bool worst_case,
            std::optional<VertexId> faulty, bool interactive, bool with_optimal, int cap) {
    Dag dag = resolve_dag(dag_spec);
    AncestorTable anc(dag);
    Picker picker = picker_by_name(strategy);

    int modes = (worst_case ? 1 : 0) + (faulty.has_value() ? 1 : 0) + (interactive ? 1 : 0);
    if (modes != 1)
        throw CLI::ValidationError("run", "choose exactly one of --worst-case, --faulty, "
                                          "--interactive");

    if (worst_case) {
        ordered_json report = run_report(dag_spec, strategy, dag, with_optimal, cap);
        std::cout << report.dump() << '\n';
        std::cerr << strategy << " on " << dag_spec << ": " << report["worst_case"]
                  << " queries in the worst case over " << report["per_faulty"].size()
                  << " candidates\n";
        return 0;
    }

    SessionResult session = [&] {
        if (faulty) return run_session(picker, dag, anc, *faulty);
        StreamOracle oracle(std::cin, std::cout);
        return run_session(picker, dag, anc, oracle);
    }();
    for (const auto& entry : session.transcript) {
        ordered_json line{{"query", entry.query},
                          {"verdict", verdict_name(entry.verdict)},
                          {"live", entry.live_after}};
        std::cout << line.dump() << '\n';
    }
    std::cout << ordered_json{{"faulty", session.faulty}, {"queries", session.queries}}.dump()
              << '\n';
    return 0;
}

int cmd_tree(const std::string& strategy, const std::string& dag_spec, const std::string& format,
             const std::string& out) {
    Dag dag = resolve_dag(dag_spec);
    AncestorTable anc(dag);
    auto initial = BisectState::prune_to_ancestors(dag, anc, dag.bugged_or_throw());
    StrategyTree tree = build_strategy_tree(picker_by_name(strategy), initial);
    write_output(out, format == "json" ? strategy_tree_to_json(tree) + "\n"
                                       : strategy_tree_to_dot(tree));
    return 0;
}

int cmd_opt(const std::string& dag_spec, int cap, const std::string& tree_out,
            const std::string& tree_format) {
    Dag dag = resolve_dag(dag_spec);
    AncestorTable anc(dag);
    SolverOptions options;
    options.cap = cap;
    int best = optimal_queries(dag, anc, options);
    ordered_json report{{"dag", dag_spec}, {"optimal", best}};
    std::cout << report.dump() << '\n';
    if (!tree_out.empty()) {
        StrategyTree tree = optimal_strategy(dag, anc, options);
        write_output(tree_out, tree_format == "json" ? strategy_tree_to_json(tree) + "\n"
                                                     : strategy_tree_to_dot(tree));
    }
    return 0;
}

int cmd_crsp_opt(const std::string& instance_path, int cap, const std::string& tree_out,
                 const std::string& tree_format) {
    CrspInstance inst = parse_crsp(read_file(instance_path));
    SolverOptions options;
    options.cap = cap;
    int best = crsp_optimal_queries(inst, options);
    ordered_json report{{"instance", instance_path},
                        {"optimal", best},
                        {"budget", inst.budget},
                        {"within_budget", best <= inst.budget}};
    std::cout << report.dump() << '\n';
    if (!tree_out.empty()) {
        StrategyTree tree = crsp_optimal_strategy(inst, options);
        write_output(tree_out, tree_format == "json" ? strategy_tree_to_json(tree) + "\n"
                                                     : strategy_tree_to_dot(tree));
    }
    return 0;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out) {
    BsatFormula formula = preprocess_pure_literals(parse_bsat(read_file(cnf_path)));
    ReductionResult red = reduce_bsat_to_crsp(formula);
    write_output(out, crsp_to_text(red.instance));
    return 0;
}

int cmd_transform(const std::string& direction, const std::string& in_path, int budget,
                  const std::string& out) {
    if (direction == "crsp-to-rsp") {
        CrspInstance inst = parse_crsp(read_file(in_path));
        write_output(out, dag_to_text(crsp_to_rsp(inst)));
        return 0;
    }
    if (direction == "rsp-to-crsp") {
        Dag dag = parse_dag(read_file(in_path));
        write_output(out, crsp_to_text(rsp_to_crsp(dag, dag.bugged_or_throw(), budget)));
        return 0;
    }
    throw ValidationError("unknown direction: " + direction);
}

int cmd_export_dot(const std::string& dag_spec, const std::string& out) {
    write_output(out, export_dot(resolve_dag(dag_spec)));
    return 0;
}

int cmd_verify(const std::string& which) {
    std::vector<claims::ClaimResult> rows;
    if (which == "all") {
        rows = claims::run_all();
    } else {
        rows.push_back(claims::run_claim(which));
    }
    ordered_json table = ordered_json::array();
    bool all_pass = true;
    for (const auto& row : rows) {
        table.push_back(ordered_json{
            {"claim", row.name}, {"pass", row.pass}, {"details", row.details}});
        std::cerr << (row.pass ? "PASS  " : "FAIL  ") << row.name << ": " << row.details << '\n';
        all_pass = all_pass && row.pass;
    }
    std::cout << table.dump() << '\n';
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regression search on commit graphs: bisect strategies, exact solving, "
                 "adversarial graph families, and the confined-search reduction"};
    app.require_subcommand(1);

    // gen
    std::string family, base_path, out;
    int n = 5, k = 3, fib_i = 3, delta = 3;
    std::uint64_t seed = 0;
    bool no_parity_fix = false;
    auto* gen = app.add_subcommand("gen", "Generate a graph family member");
    gen->add_option("family", family,
                    "path|octopus|claw|comb|comb-even-tweak|pathological|jk|jk-delta|fib|"
                    "fib-prime|fig4|fig9|random-binary|random-delta")
        ->required();
    gen->add_option("--n", n, "vertex count for sized families");
    gen->add_option("--k", k, "index for pathological/jk families");
    gen->add_option("--i", fib_i, "index for fibonacci families");
    gen->add_option("--delta", delta, "max indegree for delta families");
    gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--no-parity-fix", no_parity_fix, "skip the odd-size adjustment of jk");
    gen->add_option("--dag", base_path, "base graph (file or shorthand) for comb families");
    gen->add_option("-o,--output", out, "output file (default stdout)");

    // run: strategy and dag accepted positionally or as flags
    std::string strategy, dag_spec, strategy_flag, dag_flag;
    bool worst_case = false, interactive = false, with_optimal = false;
    int cap = 24;
    std::optional<VertexId> faulty;
    auto* run = app.add_subcommand("run", "Run a strategy on a graph");
    run->add_option("STRATEGY", strategy, "git|golden");
    run->add_option("DAG", dag_spec, "graph file or shorthand (path5, octopus6, fig4, ...)");
    run->add_option("--strategy", strategy_flag, "git|golden");
    run->add_option("--dag", dag_flag, "graph file or shorthand");
    run->add_flag("--worst-case", worst_case, "report the worst case over all faulty commits");
    run->add_option("--faulty", faulty, "simulate with this faulty commit");
    run->add_flag("--interactive", interactive, "ask verdicts over stdin/stdout (? id -> b|c)");
    run->add_flag("--optimal", with_optimal, "also compute the exact optimum (worst-case mode)");
    run->add_option("--cap", cap, "exact-solver candidate cap");

    // tree
    std::string tree_format = "dot";
    auto* tree = app.add_subcommand("tree", "Emit a strategy tree");
    tree->add_option("STRATEGY", strategy, "git|golden");
    tree->add_option("DAG", dag_spec, "graph file or shorthand");
    tree->add_option("--strategy", strategy_flag, "git|golden");
    tree->add_option("--dag", dag_flag, "graph file or shorthand");
    tree->add_option("--format", tree_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));
    tree->add_option("-o,--output", out, "output file (default stdout)");

    // opt
    std::string tree_out;
    auto* opt = app.add_subcommand("opt", "Exact optimal worst-case query count");
    opt->add_option("DAG", dag_spec, "graph file or shorthand");
    opt->add_option("--dag", dag_flag, "graph file or shorthand");
    opt->add_option("--cap", cap, "candidate cap (default 24)");
    opt->add_option("--tree", tree_out, "also write one optimal strategy tree here");
    opt->add_option("--tree-format", tree_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));

    // crsp-opt
    std::string instance_path;
    auto* crsp_opt = app.add_subcommand("crsp-opt", "Exact optimum of a confined instance");
    crsp_opt->add_option("instance", instance_path, "instance file")->required();
    crsp_opt->add_option("--cap", cap, "candidate cap (default 24)");
    crsp_opt->add_option("--tree", tree_out, "also write one optimal strategy tree here");
    crsp_opt->add_option("--tree-format", tree_format, "dot|json")
        ->check(CLI::IsMember({"dot", "json"}));

    // reduce
    std::string cnf_path;
    auto* reduce = app.add_subcommand("reduce", "Reduce a bounded CNF to a confined instance");
    reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    reduce->add_option("-o,--output", out, "output file (default stdout)");

    // transform
    std::string direction, in_path;
    int budget = 0;
    auto* transform = app.add_subcommand("transform", "Convert between problem forms");
    transform->add_option("direction", direction, "crsp-to-rsp|rsp-to-crsp")->required();
    transform->add_option("-i,--in", in_path, "input file")->required();
    transform->add_option("--budget", budget, "budget for rsp-to-crsp output");
    transform->add_option("-o,--output", out, "output file (default stdout)");

    // export-dot
    auto* export_cmd = app.add_subcommand("export-dot", "Graphviz export of a graph");
    export_cmd->add_option("DAG", dag_spec, "graph file or shorthand");
    export_cmd->add_option("--dag", dag_flag, "graph file or shorthand");
    export_cmd->add_option("-o,--output", out, "output file (default stdout)");

    // verify
    std::string which = "all";
    auto* verify = app.add_subcommand("verify", "Run the claims harness");
    verify->add_option("claim", which, "claim name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // Flag forms override positionals; one of the two must be given.
    if (!dag_flag.empty()) dag_spec = dag_flag;
    if (!strategy_flag.empty()) strategy = strategy_flag;
    if ((run->parsed() || tree->parsed()) && strategy.empty()) {
        std::cerr << "error: a strategy is required (positional or --strategy)\n";
        return 1;
    }
    if ((run->parsed() || tree->parsed() || opt->parsed() || export_cmd->parsed()) &&
        dag_spec.empty()) {
        std::cerr << "error: a graph is required (positional or --dag)\n";
        return 1;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, n, k, fib_i, delta, seed, no_parity_fix, base_path, out);
        if (run->parsed())
            return cmd_run(strategy, dag_spec, worst_case, faulty, interactive, with_optimal, cap);
        if (tree->parsed()) return cmd_tree(strategy, dag_spec, tree_format, out);
        if (opt->parsed()) return cmd_opt(dag_spec, cap, tree_out, tree_format);
        if (crsp_opt->parsed()) return cmd_crsp_opt(instance_path, cap, tree_out, tree_format);
        if (reduce->parsed()) return cmd_reduce(cnf_path, out);
        if (transform->parsed()) return cmd_transform(direction, in_path, budget, out);
        if (export_cmd->parsed()) return cmd_export_dot(dag_spec, out);
        if (verify->parsed()) return cmd_verify(which);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const SolverLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InconsistentOracleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

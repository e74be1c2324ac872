// Command-line front end for the tonelab library.

#include "tonelab/dense.hpp"
#include "tonelab/error.hpp"
#include "tonelab/exact.hpp"
#include "tonelab/experiments.hpp"
#include "tonelab/graph.hpp"
#include "tonelab/io.hpp"
#include "tonelab/random.hpp"
#include "tonelab/sparse.hpp"
#include "tonelab/tone.hpp"
#include "tonelab/tree_color.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace tonelab;

namespace {

enum Exit : int {
    kOk = 0,
    kViolation = 1,  // verify: invalid coloring; experiment: an asserted flag failed
    kUsage = 2,      // bad arguments, unreadable or malformed input
    kEscalated = 3,  // color-sparse needed extra colors; other commands: search gave up
    kStructural = 4,
};

// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::function<void(std::ostream&)>& body)
{
    if (path.empty() || path == "-") {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + path);
    body(out);
    if (!out.flush()) throw FormatError("write failed for " + path);
}

// The palette line goes to stdout unless stdout already carries the coloring.
void report_k(const std::string& out, int k)
{
    if (out.empty() || out == "-")
        std::cerr << "k_used=" << k << '\n';
    else
        std::cout << "k_used=" << k << '\n';
}

struct Globals {
    std::uint64_t seed = 1;
    int jobs = 1;
};

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string graph, coloring;
};

int run_verify(const VerifyArgs& a)
{
    const Graph g = load_edge_list(a.graph);
    const ToneColoring c = load_coloring(a.coloring);
    if (auto bad = verify(g, c)) {
        std::cout << bad->u << ' ' << bad->v << ' ' << bad->distance << ' ' << bad->overlap << '\n';
        return kViolation;
    }
    std::cout << "valid\n";
    return kOk;
}

// --- exact ------------------------------------------------------------------

struct ExactArgs {
    std::string graph, out;
    int t = 2;
    std::optional<int> k;
    std::uint64_t max_nodes = 0;
};

int run_exact(const ExactArgs& a)
{
    const Graph g = load_edge_list(a.graph);
    const SearchBudget budget = a.max_nodes ? SearchBudget::nodes(a.max_nodes) : SearchBudget{};
    try {
        if (a.k) {
            const auto result = t_tone_colorable(g, a.t, *a.k, budget);
            if (const auto* c = std::get_if<ToneColoring>(&result)) {
                std::cout << "colorable=yes\n";
                if (a.out.empty()) std::cout.flush();
                emit(a.out, [&](std::ostream& os) { write_coloring(os, *c); });
            } else {
                std::cout << "colorable=no\n";
            }
            return kOk;
        }
        const TauResult r = exact_tau(g, a.t, budget);
        std::cout << "tau=" << r.tau << '\n';
        emit(a.out, [&](std::ostream& os) { write_coloring(os, r.witness); });
        return kOk;
    } catch (const BudgetExhausted& e) {
        std::cerr << "tonelab: " << e.what() << " (bracket " << e.lower << ".." << e.upper << ")\n";
        return kEscalated;
    }
}

// --- color-tree -------------------------------------------------------------

struct TreeArgs {
    std::string graph, out;
    int t = 2;
    std::optional<int> k;
};

int run_color_tree(const TreeArgs& a)
{
    const Graph f = load_edge_list(a.graph);
    if (!is_forest(f)) throw NotAForest("input graph has a cycle");
    ToneColoring coloring(0, a.t, 0);
    if (a.t == 2 && max_degree(f) > 0) {
        coloring = a.k ? color_forest_2tone(f, *a.k) : color_forest_2tone(f);
    } else {
        const int k = a.k ? *a.k : min_greedy_palette(f, a.t);
        auto result = greedy_t_tone_forest(f, a.t, k);
        if (const auto* stuck = std::get_if<Stuck>(&result)) {
            std::cerr << "tonelab: greedy stuck at vertex " << stuck->vertex << " with " << k
                      << " colors\n";
            return kEscalated;
        }
        coloring = std::move(std::get<ToneColoring>(result));
    }
    emit(a.out, [&](std::ostream& os) { write_coloring(os, coloring); });
    report_k(a.out, coloring.k());
    return kOk;
}

// --- color-dense ------------------------------------------------------------

struct DenseArgs {
    std::string graph, out, report;
    int t = 2;
    std::optional<double> p;
    std::optional<int> s, s0, remainder, restarts;
};

int run_color_dense(const DenseArgs& a, const Globals& globals)
{
    const Graph g = load_edge_list(a.graph);
    if (g.n() < 3) throw DomainError("color-dense needs at least 3 vertices");
    double p = a.p.value_or(0.0);
    if (!a.p) {
        const double pairs = 0.5 * g.n() * (g.n() - 1.0);
        p = std::clamp(static_cast<double>(g.m()) / pairs, 1e-9, 1.0 - 1e-9);
    }
    DenseParams params = dense_params(g.n(), p);
    if (a.s) params.s = std::max(1, *a.s);
    if (a.s0) params.s0 = std::max(1, *a.s0);
    if (a.remainder) params.remainder_threshold = std::clamp(*a.remainder, 0, g.n());
    if (a.restarts) params.restart_budget = std::max(1, *a.restarts);

    const DenseResult result = t_tone_color_dense(g, a.t, params, globals.seed);
    if (result.diameter_warning)
        std::cerr << "tonelab: warning: graph is disconnected or has diameter above 2\n";
    if (auto bad = verify(g, result.coloring))
        throw std::logic_error("dense pipeline produced an invalid coloring");
    emit(a.out, [&](std::ostream& os) { write_coloring(os, result.coloring); });
    if (!a.report.empty()) {
        emit(a.report, [&](std::ostream& os) {
            os << "pass,sets,remainder,greedy_colors\n";
            for (const PassReport& r : result.passes) {
                os << r.pass << ',';
                for (std::size_t i = 0; i < r.set_sizes.size(); ++i)
                    os << (i ? ";" : "") << r.set_sizes[i];
                os << ',' << r.remainder << ',' << r.greedy_colors << '\n';
            }
        });
    }
    report_k(a.out, result.coloring.k());
    return kOk;
}

// --- color-sparse -----------------------------------------------------------

struct SparseArgs {
    std::string graph, out, report;
    int t = 2;
    std::optional<double> b0;
    bool no_escalate = false;
};

void write_pipeline_report(std::ostream& os, const PipelineReport& r, const std::string& outcome)
{
    os << "outcome,core_size,shell_sizes,h_forest,max_h_component,base_palette,palette,"
          "escalations,whole_graph_fallback,extended,max_forbidden,p1_max,p1_threshold,p1_holds,"
          "p2_max,p2_threshold,p2_holds\n";
    os << outcome << ',' << r.core_size << ',';
    for (std::size_t i = 0; i < r.shell_sizes.size(); ++i) os << (i ? ";" : "") << r.shell_sizes[i];
    char p1[32], p2[32];
    std::snprintf(p1, sizeof p1, "%.6f", r.diagnostics.p1_threshold);
    std::snprintf(p2, sizeof p2, "%.6f", r.diagnostics.p2_threshold);
    os << ',' << (r.h_is_forest ? "true" : "false") << ',' << r.max_h_component << ','
       << r.base_palette << ',' << r.palette << ',' << r.escalations << ','
       << (r.whole_graph_fallback ? "true" : "false") << ',' << r.extended << ','
       << r.max_forbidden << ',' << r.diagnostics.p1_max_component << ',' << p1 << ','
       << (r.diagnostics.p1_holds ? "true" : "false") << ',' << r.diagnostics.p2_max_component
       << ',' << p2 << ',' << (r.diagnostics.p2_holds ? "true" : "false") << '\n';
}

int run_color_sparse(const SparseArgs& a)
{
    const Graph g = load_edge_list(a.graph);
    SparseParams params = SparseParams::defaults(g.n(), a.t);
    if (a.b0) params.b0 = *a.b0;
    params.escalate = !a.no_escalate;
    const auto outcome = sparse_color(g, params);
    if (const auto* failure = std::get_if<StructuralFailure>(&outcome)) {
        if (failure->reason == StructuralFailure::Reason::NotAForest) {
            std::cerr << "tonelab: structural failure: H has a cycle:";
            for (Vertex v : failure->cycle) std::cerr << ' ' << v;
            std::cerr << '\n';
        } else {
            std::cerr << "tonelab: structural failure: greedy stuck at vertex "
                      << failure->stuck_vertex << '\n';
        }
        if (!a.report.empty())
            emit(a.report, [&](std::ostream& os) {
                write_pipeline_report(os, failure->report, "structural_failure");
            });
        return kStructural;
    }
    const auto& result = std::get<SparseResult>(outcome);
    const bool escalated = result.report.escalations > 0 || result.report.whole_graph_fallback;
    emit(a.out, [&](std::ostream& os) { write_coloring(os, result.coloring); });
    if (!a.report.empty())
        emit(a.report, [&](std::ostream& os) {
            write_pipeline_report(os, result.report, escalated ? "escalated" : "success_at_kappa");
        });
    report_k(a.out, result.coloring.k());
    return escalated ? kEscalated : kOk;
}

// --- gen --------------------------------------------------------------------

struct GenArgs {
    std::string out, degrees;
    int n = 0;
    double p = 0.0;
};

int run_gen_gnp(const GenArgs& a, const Globals& globals)
{
    const Graph g = gnp(a.n, a.p, globals.seed);
    emit(a.out, [&](std::ostream& os) { write_edge_list(os, g); });
    return kOk;
}

int run_gen_tree(const GenArgs& a, const Globals& globals)
{
    const Graph g = random_tree(a.n, globals.seed);
    emit(a.out, [&](std::ostream& os) { write_edge_list(os, g); });
    return kOk;
}

int run_gen_config(const GenArgs& a, const Globals& globals)
{
    std::ifstream in(a.degrees);
    if (!in) throw FormatError("cannot open " + a.degrees);
    const DegreeSequence d = read_degrees(in);
    const ConfigurationSample sample = configuration_model(d, globals.seed);
    if (sample.simple) {
        emit(a.out, [&](std::ostream& os) { write_edge_list(os, sample.graph.to_graph()); });
    } else {
        emit(a.out, [&](std::ostream& os) { write_edge_list(os, sample.graph); });
    }
    std::cerr << "simple=" << (sample.simple ? "yes" : "no") << '\n';
    return kOk;
}

// --- experiment -------------------------------------------------------------

struct ExperimentArgs {
    std::string name, out;
    int trials = -1;
    int n_max = -1;
    std::vector<int> t_list, n_list, delta_list;
    std::vector<double> p_list, c_list;
    int seeds = -1;
    std::optional<double> b0;
    int planted = -1;
    bool no_escalate = false;
    bool timing = false;
};

template <typename T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback)
{
    return given.empty() ? fallback : given;
}

int pick(int given, int fallback) { return given >= 0 ? given : fallback; }

int run_experiment(const ExperimentArgs& a, const Globals& globals)
{
    const RunOptions opt{globals.seed, globals.jobs, a.timing};
    CsvTable table;
    bool pass = true;
    if (a.name == "tree_formula") {
        const auto records = exp_tree_formula(pick(a.trials, 300), pick(a.n_max, 9), opt);
        table = tree_formula_table(records, a.timing);
        pass = all_pass(records);
    } else if (a.name == "lower_bound") {
        const auto records =
            exp_lower_bound(pick(a.trials, 100), pick(a.n_max, 10), or_default(a.t_list, {2, 3}), opt);
        table = lower_bound_table(records, a.timing);
        pass = all_pass(records);
    } else if (a.name == "dense_ratio") {
        if (a.t_list.size() > 1) throw DomainError("dense_ratio takes a single --t");
        const auto records = exp_dense_ratio(or_default(a.n_list, {100, 200, 400}),
                                             or_default(a.p_list, {0.5}),
                                             a.t_list.empty() ? 2 : a.t_list.front(),
                                             pick(a.seeds, 5), opt);
        table = dense_ratio_table(records, a.timing);
        pass = all_pass(records);
    } else if (a.name == "sparse") {
        SparseConfig config;
        config.n_list = or_default(a.n_list, {1000, 10000});
        config.c_list = or_default(a.c_list, {0.5, 1.0, 2.0});
        config.b0 = a.b0;
        config.seeds = pick(a.seeds, 3);
        config.escalate = !a.no_escalate;
        config.planted = pick(a.planted, 3);
        const auto records = exp_sparse(config, opt);
        table = sparse_table(records, a.timing);
        pass = all_pass(records);
    } else if (a.name == "ttone_tree_scaling") {
        const auto records = exp_ttone_tree_scaling(or_default(a.t_list, {3}),
                                                    or_default(a.delta_list, {4, 9, 16, 25, 36}),
                                                    pick(a.trials, 20), opt);
        table = scaling_table(records, a.timing);
        pass = all_pass(records);
    } else {
        throw DomainError("unknown experiment '" + a.name + "'");
    }
    emit(a.out, [&](std::ostream& os) { table.write(os); });
    if (!pass) std::cerr << "tonelab: experiment " << a.name << ": an asserted flag failed\n";
    return pass ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tonelab: t-tone graph coloring toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--seed", globals.seed, "Master seed for every randomized step")
        ->capture_default_str();
    app.add_option("--jobs", globals.jobs, "Worker threads for experiments")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::function<int()> action;

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file against a graph");
    verify_cmd->add_option("--graph", verify_args.graph, "Edge-list file")->required();
    verify_cmd->add_option("--coloring", verify_args.coloring, "Coloring file")->required();
    verify_cmd->callback([&] { action = [&] { return run_verify(verify_args); }; });

    ExactArgs exact_args;
    auto* exact_cmd = app.add_subcommand("exact", "Exact t-tone chromatic number or decision");
    exact_cmd->add_option("--graph", exact_args.graph, "Edge-list file")->required();
    exact_cmd->add_option("--t", exact_args.t, "Tone")->required()->check(CLI::PositiveNumber);
    exact_cmd->add_option("--k", exact_args.k, "Decide colorability with this palette instead");
    exact_cmd->add_option("--out", exact_args.out, "Witness coloring file (default stdout)");
    exact_cmd->add_option("--max-nodes", exact_args.max_nodes, "Search node budget (0 = none)");
    exact_cmd->callback([&] { action = [&] { return run_exact(exact_args); }; });

    TreeArgs tree_args;
    auto* tree_cmd = app.add_subcommand("color-tree", "Color a forest");
    tree_cmd->add_option("--graph", tree_args.graph, "Edge-list file")->required();
    tree_cmd->add_option("--t", tree_args.t, "Tone")->required()->check(CLI::PositiveNumber);
    tree_cmd->add_option("--k", tree_args.k, "Palette size");
    tree_cmd->add_option("--out", tree_args.out, "Coloring file (default stdout)");
    tree_cmd->callback([&] { action = [&] { return run_color_tree(tree_args); }; });

    DenseArgs dense_args;
    auto* dense_cmd = app.add_subcommand("color-dense", "Dense-regime partition coloring");
    dense_cmd->add_option("--graph", dense_args.graph, "Edge-list file")->required();
    dense_cmd->add_option("--t", dense_args.t, "Tone")->required()->check(CLI::PositiveNumber);
    dense_cmd->add_option("--p", dense_args.p, "Edge probability (default: observed density)");
    dense_cmd->add_option("--s", dense_args.s, "Cap on extracted set size");
    dense_cmd->add_option("--s0", dense_args.s0, "Set size the search tries harder to reach");
    dense_cmd->add_option("--remainder", dense_args.remainder, "Greedy handoff threshold");
    dense_cmd->add_option("--restarts", dense_args.restarts, "Restarts per extraction");
    dense_cmd->add_option("--out", dense_args.out, "Coloring file (default stdout)");
    dense_cmd->add_option("--report", dense_args.report, "PassReport CSV file");
    dense_cmd->callback([&] { action = [&] { return run_color_dense(dense_args, globals); }; });

    SparseArgs sparse_args;
    auto* sparse_cmd = app.add_subcommand("color-sparse", "Sparse-regime core/shell pipeline");
    sparse_cmd->add_option("--graph", sparse_args.graph, "Edge-list file")->required();
    sparse_cmd->add_option("--t", sparse_args.t, "Tone")->required()->check(CLI::Range(2, 64));
    sparse_cmd->add_option("--b0", sparse_args.b0, "Core degree threshold (default ln^{1/4} n)");
    sparse_cmd->add_flag("--no-escalate", sparse_args.no_escalate, "Fail instead of adding colors");
    sparse_cmd->add_option("--out", sparse_args.out, "Coloring file (default stdout)");
    sparse_cmd->add_option("--report", sparse_args.report, "PipelineReport CSV file");
    sparse_cmd->callback([&] { action = [&] { return run_color_sparse(sparse_args); }; });

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "Random instance generators");
    gen_cmd->require_subcommand(1);
    auto* gen_gnp = gen_cmd->add_subcommand("gnp", "G(n, p)");
    gen_gnp->add_option("--n", gen_args.n, "Vertices")->required()->check(CLI::PositiveNumber);
    gen_gnp->add_option("--p", gen_args.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_gnp->add_option("--out", gen_args.out, "Edge-list file (default stdout)");
    gen_gnp->callback([&] { action = [&] { return run_gen_gnp(gen_args, globals); }; });
    auto* gen_tree = gen_cmd->add_subcommand("tree", "Uniform random labeled tree");
    gen_tree->add_option("--n", gen_args.n, "Vertices")->required()->check(CLI::PositiveNumber);
    gen_tree->add_option("--out", gen_args.out, "Edge-list file (default stdout)");
    gen_tree->callback([&] { action = [&] { return run_gen_tree(gen_args, globals); }; });
    auto* gen_config = gen_cmd->add_subcommand("config", "Configuration model");
    gen_config->add_option("--degrees", gen_args.degrees, "Degree file, one per line")->required();
    gen_config->add_option("--out", gen_args.out, "Edge-list file (default stdout)");
    gen_config->callback([&] { action = [&] { return run_gen_config(gen_args, globals); }; });
    for (auto* sub : {gen_gnp, gen_tree, gen_config}) sub->fallthrough();
    gen_cmd->fallthrough();

    ExperimentArgs exp_args;
    auto* exp_cmd = app.add_subcommand("experiment", "Run an experiment and write its CSV");
    exp_cmd->add_option("name", exp_args.name,
                        "tree_formula, lower_bound, dense_ratio, sparse or ttone_tree_scaling")
        ->required();
    exp_cmd->add_option("--out", exp_args.out, "CSV file")->required();
    exp_cmd->add_option("--trials", exp_args.trials, "Random trials");
    exp_cmd->add_option("--n-max", exp_args.n_max, "Largest instance size");
    exp_cmd->add_option("--t", exp_args.t_list, "Tone values")->delimiter(',');
    exp_cmd->add_option("--n", exp_args.n_list, "Instance sizes")->delimiter(',');
    exp_cmd->add_option("--p", exp_args.p_list, "Edge probabilities")->delimiter(',');
    exp_cmd->add_option("--c", exp_args.c_list, "Average degree parameters")->delimiter(',');
    exp_cmd->add_option("--delta", exp_args.delta_list, "Maximum degrees")->delimiter(',');
    exp_cmd->add_option("--seeds", exp_args.seeds, "Seeds per instance");
    exp_cmd->add_option("--b0", exp_args.b0, "Core degree threshold override");
    exp_cmd->add_option("--planted", exp_args.planted, "Planted instances");
    exp_cmd->add_flag("--no-escalate", exp_args.no_escalate, "Disable palette escalation");
    exp_cmd->add_flag("--timing", exp_args.timing, "Add a wall_ms column");
    exp_cmd->callback([&] { action = [&] { return run_experiment(exp_args, globals); }; });

    for (auto* sub : {verify_cmd, exact_cmd, tree_cmd, dense_cmd, sparse_cmd, exp_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const VerificationFailed& e) {
        std::cerr << "tonelab: verification failed: " << e.what() << '\n';
        return kViolation;
    } catch (const Error& e) {
        std::cerr << "tonelab: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "tonelab: internal error: " << e.what() << '\n';
        return kUsage;
    }
}

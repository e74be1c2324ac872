#include "tonelab/experiments.hpp"

#include "tonelab/dense.hpp"
#include "tonelab/exact.hpp"
#include "tonelab/random.hpp"
#include "tonelab/tree_color.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

namespace tonelab {

void CsvTable::write(std::ostream& out) const
{
    const auto field = [&out](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) {
            out << s;
            return;
        }
        out << '"';
        for (char ch : s) {
            if (ch == '"') out << '"';
            out << ch;
        }
        out << '"';
    };
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            field(cells[i]);
        }
        out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
}

void parallel_for(int jobs, int count, const std::function<void(int)>& fn)
{
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first;
    std::mutex guard;
    const auto worker = [&] {
        for (int i = next++; i < count && !failed; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(guard);
                if (!first) first = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min(jobs, count); ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first) std::rethrow_exception(first);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string num(double x, int digits = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string num(std::int64_t x) { return std::to_string(x); }
std::string num(int x) { return std::to_string(x); }
std::string num(std::uint64_t x) { return std::to_string(x); }
std::string flag(bool b) { return b ? "true" : "false"; }

void check(const Graph& g, const ToneColoring& coloring, const std::string& what)
{
    if (auto bad = verify(g, coloring))
        throw VerificationFailed(what + ": violation at (" + std::to_string(bad->u) + ", " +
                                 std::to_string(bad->v) + "), distance " +
                                 std::to_string(bad->distance) + ", overlap " +
                                 std::to_string(bad->overlap));
}

void add_timing(CsvTable& table, bool timing, const std::vector<double>& ms)
{
    if (!timing) return;
    table.header.push_back("wall_ms");
    for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].push_back(num(ms[i], 3));
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace

// --- tree formula ---------------------------------------------------------

std::vector<TreeFormulaRecord> exp_tree_formula(int trials, int n_max, const RunOptions& opt)
{
    if (n_max < 1 || n_max > 12) throw DomainError("tree_formula: n_max must be in [1, 12]");
    if (trials < 0) throw DomainError("tree_formula: trials must be non-negative");

    std::vector<TreeFormulaRecord> records;
    for (int n = 2; n <= n_max; ++n) records.push_back({.family = "path", .n = n});
    for (int n = 2; n <= n_max; ++n) records.push_back({.family = "star", .n = n});
    const int n_min = std::min(2, n_max);
    for (int i = 0; i < trials; ++i) {
        TreeFormulaRecord r{.family = "prufer", .index = i};
        r.seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
        Rng rng(r.seed);
        r.n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
        records.push_back(r);
    }

    parallel_for(opt.jobs, static_cast<int>(records.size()), [&](int i) {
        auto& r = records[i];
        const auto start = Clock::now();
        const Graph tree = r.family == "path"   ? path_graph(r.n)
                           : r.family == "star" ? star_graph(r.n)
                                                : random_tree(r.n, derive_seed(r.seed, 1));
        r.delta = max_degree(tree);
        if (r.delta == 0) {
            r.skipped = true;
            r.wall_ms = ms_since(start);
            return;
        }
        const TauResult tau = exact_tau(tree, 2);
        check(tree, tau.witness, "exact_tau witness");
        const ToneColoring built = color_forest_2tone(tree);
        check(tree, built, "color_forest_2tone");
        r.tau = tau.tau;
        r.kappa = kappa(r.delta);
        r.k_used = built.k();
        r.equal = r.tau == r.kappa && r.kappa == r.k_used;
        r.wall_ms = ms_since(start);
    });
    return records;
}

CsvTable tree_formula_table(const std::vector<TreeFormulaRecord>& records, bool timing)
{
    CsvTable table;
    table.header = {"schema", "family", "index", "n", "seed", "delta", "tau",
                    "kappa",  "k_used", "equal", "note"};
    std::vector<double> ms;
    for (const auto& r : records) {
        if (r.skipped)
            table.rows.push_back({"tree_formula.v1", r.family, num(r.index), num(r.n), num(r.seed),
                                  num(r.delta), "", "", "", "", "skipped: DomainError (max degree 0)"});
        else
            table.rows.push_back({"tree_formula.v1", r.family, num(r.index), num(r.n), num(r.seed),
                                  num(r.delta), num(r.tau), num(r.kappa), num(r.k_used),
                                  flag(r.equal), ""});
        ms.push_back(r.wall_ms);
    }
    add_timing(table, timing, ms);
    return table;
}

bool all_pass(const std::vector<TreeFormulaRecord>& records)
{
    return std::all_of(records.begin(), records.end(),
                       [](const auto& r) { return r.skipped || r.equal; });
}

// --- lower bound ----------------------------------------------------------

std::vector<LowerBoundRecord> exp_lower_bound(int trials, int n_max, const std::vector<int>& t_list,
                                              const RunOptions& opt)
{
    if (n_max < 1 || n_max > 10) throw DomainError("lower_bound: n_max must be in [1, 10]");
    if (trials < 0) throw DomainError("lower_bound: trials must be non-negative");
    for (int t : t_list)
        if (t < 1 || t > 3) throw DomainError("lower_bound: t must be in [1, 3]");

    struct Instance {
        std::string family;
        int index;
        std::uint64_t seed;
        Graph graph;
    };
    std::vector<Instance> instances;
    instances.push_back({"C5", 0, 0, cycle_graph(5)});
    instances.push_back({"K4", 1, 0, complete_graph(4)});
    instances.push_back({"E6", 2, 0, Graph(6)});
    static constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.65, 0.8};
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
        const double p = kDensities[rng.below(5)];
        instances.push_back({"gnp", 3 + i, seed, gnp(n, p, derive_seed(seed, 1))});
    }

    std::vector<LowerBoundRecord> records;
    for (const auto& inst : instances)
        for (int t : t_list)
            records.push_back({.family = inst.family,
                               .index = inst.index,
                               .n = inst.graph.n(),
                               .m = static_cast<int>(inst.graph.m()),
                               .t = t,
                               .seed = inst.seed});

    const int per = static_cast<int>(t_list.size());
    parallel_for(opt.jobs, static_cast<int>(records.size()), [&](int i) {
        auto& r = records[i];
        const Graph& g = instances[i / per].graph;
        const auto start = Clock::now();
        r.alpha = independence_number(g);
        r.bound = static_cast<int>(tone_lower_bound(g.n(), r.t, r.alpha));
        const TauResult tau = exact_tau(g, r.t);
        if (g.n() > 0) check(g, tau.witness, "exact_tau witness");
        r.tau = tau.tau;
        r.slack = r.tau - r.bound;
        r.holds = r.tau >= r.bound;
        r.wall_ms = ms_since(start);
    });
    return records;
}

CsvTable lower_bound_table(const std::vector<LowerBoundRecord>& records, bool timing)
{
    CsvTable table;
    table.header = {"schema", "family", "index", "n",   "m",     "t",
                    "seed",   "alpha",  "bound", "tau", "slack", "holds"};
    std::vector<double> ms;
    for (const auto& r : records) {
        table.rows.push_back({"lower_bound.v1", r.family, num(r.index), num(r.n), num(r.m), num(r.t),
                              num(r.seed), num(r.alpha), num(r.bound), num(r.tau), num(r.slack),
                              flag(r.holds)});
        ms.push_back(r.wall_ms);
    }
    add_timing(table, timing, ms);
    return table;
}

bool all_pass(const std::vector<LowerBoundRecord>& records)
{
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.holds; });
}

// --- dense ratio ----------------------------------------------------------

bool partitions_valid(const Graph& g, std::span<const Partition> partitions)
{
    for (const Partition& p : partitions) {
        if (p.universe() != g.n()) return false;
        for (Vertex v = 0; v < g.n(); ++v)
            if (!p.covers(v)) return false;
        for (const auto& part : p.parts())
            for (std::size_t a = 0; a < part.size(); ++a)
                for (std::size_t b = a + 1; b < part.size(); ++b)
                    if (g.has_edge(part[a], part[b])) return false;
    }
    for (std::size_t i = 0; i < partitions.size(); ++i)
        for (std::size_t j = i + 1; j < partitions.size(); ++j)
            if (!respects(partitions[i], partitions[j])) return false;
    return true;
}

std::vector<DenseRatioRecord> exp_dense_ratio(const std::vector<int>& n_list,
                                              const std::vector<double>& p_list, int t, int seeds,
                                              const RunOptions& opt)
{
    if (t < 1 || t > 8) throw DomainError("dense_ratio: t must be in [1, 8]");
    if (seeds < 1) throw DomainError("dense_ratio: need at least one seed");
    for (int n : n_list)
        if (n < 3 || n > 5000) throw DomainError("dense_ratio: n must be in [3, 5000]");
    for (double p : p_list)
        if (!(p > 0.0 && p < 1.0)) throw DomainError("dense_ratio: p must be in (0, 1)");

    std::vector<DenseRatioRecord> records;
    for (int n : n_list)
        for (double p : p_list)
            for (int s = 0; s < seeds; ++s) {
                DenseRatioRecord r{.n = n, .p = p, .t = t, .seed_index = s};
                r.seed = derive_seed(derive_seed(derive_seed(opt.seed, static_cast<std::uint64_t>(n)),
                                                 std::bit_cast<std::uint64_t>(p)),
                                     static_cast<std::uint64_t>(s));
                records.push_back(r);
            }

    parallel_for(opt.jobs, static_cast<int>(records.size()), [&](int i) {
        auto& r = records[i];
        const auto start = Clock::now();
        const Graph g = gnp(r.n, r.p, r.seed);
        const DenseParams params = dense_params(r.n, r.p);
        const std::uint64_t run_seed = derive_seed(r.seed, 1);
        const DenseResult result = t_tone_color_dense(g, r.t, params, run_seed);
        check(g, result.coloring, "t_tone_color_dense");
        r.verified = true;
        r.partitions_ok = partitions_valid(g, result.partitions);
        r.diameter_warning = result.diameter_warning;
        r.colors = result.coloring.colors_used();
        if (r.t == 1) {
            r.chi_proxy = r.colors;
        } else {
            const DenseResult proper = t_tone_color_dense(g, 1, params, run_seed);
            check(g, proper.coloring, "t_tone_color_dense (t = 1)");
            r.chi_proxy = proper.coloring.colors_used();
        }
        r.alpha_hat = static_cast<int>(
            find_respecting_independent_set(g, {}, 0, 64, derive_seed(r.seed, 2)).size());
        r.bound_hat = static_cast<int>(tone_lower_bound(r.n, r.t, r.alpha_hat));
        r.ratio = static_cast<double>(r.colors) / r.chi_proxy;
        r.wall_ms = ms_since(start);
    });
    return records;
}

CsvTable dense_ratio_table(const std::vector<DenseRatioRecord>& records, bool timing)
{
    CsvTable table;
    table.header = {"schema",    "n",         "p",         "t",     "seed_index",
                    "seed",      "colors",    "chi_proxy", "alpha_hat", "bound_hat",
                    "ratio",     "diameter_warning", "partitions_ok", "verified"};
    std::vector<double> ms;
    for (const auto& r : records) {
        table.rows.push_back({"dense_ratio.v1", num(r.n), num(r.p, 4), num(r.t), num(r.seed_index),
                              num(r.seed), num(r.colors), num(r.chi_proxy), num(r.alpha_hat),
                              num(r.bound_hat), num(r.ratio), flag(r.diameter_warning),
                              flag(r.partitions_ok), flag(r.verified)});
        ms.push_back(r.wall_ms);
    }
    add_timing(table, timing, ms);
    return table;
}

bool all_pass(const std::vector<DenseRatioRecord>& records)
{
    return std::all_of(records.begin(), records.end(),
                       [](const auto& r) { return r.verified && r.partitions_ok; });
}

// --- sparse ---------------------------------------------------------------

Graph planted_instance(int hubs, int hub_degree, std::uint64_t seed)
{
    if (hubs < 1 || hub_degree < 1) throw DomainError("planted_instance: need hubs and degree >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    int next = 0;
    std::vector<Vertex> leg_ends;
    for (int h = 0; h < hubs; ++h) {
        const Vertex hub = next++;
        for (int leg = 0; leg < hub_degree; ++leg) {
            const int length = 4 + static_cast<int>(rng.below(5));
            Vertex prev = hub;
            for (int j = 0; j < length; ++j) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            leg_ends.push_back(prev);
        }
    }
    rng.shuffle(leg_ends);
    // The cycle: each leg end gets its own cycle vertex, separated by 0-3
    // extra cycle vertices.
    std::vector<Vertex> cycle;
    for (Vertex end : leg_ends) {
        const Vertex anchor = next++;
        edges.emplace_back(end, anchor);
        cycle.push_back(anchor);
        for (int gap = static_cast<int>(rng.below(4)); gap > 0; --gap) cycle.push_back(next++);
    }
    if (cycle.size() >= 3)
        for (std::size_t i = 0; i < cycle.size(); ++i)
            edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    else
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) edges.emplace_back(cycle[i], cycle[i + 1]);
    return Graph::from_edges(next, edges);
}

namespace {

constexpr int kPlantedHubs = 3;
constexpr int kPlantedDegree = 12;
constexpr double kPlantedB0 = 10.0;

void run_sparse(SparseRecord& r, const Graph& g, const SparseParams& params)
{
    r.delta = max_degree(g);
    r.kappa = r.delta > 0 ? kappa(r.delta) : 0;
    const auto decomp = core_decomposition(g, params);
    const auto outcome = sparse_color(g, params);
    const PipelineReport* report = nullptr;
    if (const auto* ok = std::get_if<SparseResult>(&outcome)) {
        check(g, ok->coloring, "sparse_color");
        report = &ok->report;
        r.palette = report->palette;
        r.outcome = report->escalations == 0 && !report->whole_graph_fallback ? "success_at_kappa"
                                                                               : "escalated";
        if (!report->whole_graph_fallback && report->max_forbidden >= 0 && params.t == 2) {
            r.forbidden_bound = 2.0 * params.b0 * r.palette + params.b0 * params.b0;
            r.forbidden_ok = static_cast<double>(report->max_forbidden) <= r.forbidden_bound;
        }
        r.max_forbidden = report->max_forbidden;
    } else {
        const auto& failure = std::get<StructuralFailure>(outcome);
        report = &failure.report;
        r.outcome = "structural_failure";
    }
    r.verified = true;
    r.core_size = report->core_size;
    r.h_forest = report->h_is_forest;
    r.p1_max = report->diagnostics.p1_max_component;
    r.p1_holds = report->diagnostics.p1_holds;
    r.p2_max = report->diagnostics.p2_max_component;
    r.p2_holds = report->diagnostics.p2_holds;

    if (r.h_forest) {
        const auto kept = kept_core_coloring(g, decomp, params.t, report->base_palette);
        if (const auto* coloring = std::get_if<ToneColoring>(&kept))
            r.keep_set_ok = !verify_partial(g, *coloring).has_value();
    }
}

}  // namespace

std::vector<SparseRecord> exp_sparse(const SparseConfig& config, const RunOptions& opt)
{
    if (config.seeds < 0 || config.planted < 0) throw DomainError("sparse: counts must be non-negative");
    for (int n : config.n_list)
        if (n < 1 || n > 200000) throw DomainError("sparse: n must be in [1, 200000]");
    for (double c : config.c_list)
        if (!(c >= 0.0)) throw DomainError("sparse: c must be non-negative");
    if (config.b0 && !(*config.b0 > 0.0)) throw DomainError("sparse: b0 must be positive");

    std::vector<SparseRecord> records;
    for (int n : config.n_list)
        for (double c : config.c_list) {
            if (c > n) throw DomainError("sparse: c must not exceed n");
            for (int s = 0; s < config.seeds; ++s) {
                SparseRecord r;
                r.instance = "gnp";
                r.n = n;
                r.c = c;
                r.seed_index = s;
                r.seed = derive_seed(derive_seed(derive_seed(opt.seed, static_cast<std::uint64_t>(n)),
                                                 std::bit_cast<std::uint64_t>(c)),
                                     static_cast<std::uint64_t>(s));
                r.b0 = config.b0 ? *config.b0 : SparseParams::defaults(n).b0;
                records.push_back(r);
            }
        }
    for (int s = 0; s < config.planted; ++s) {
        SparseRecord r;
        r.instance = "planted";
        r.seed_index = s;
        r.required_success = true;
        r.seed = derive_seed(derive_seed(opt.seed, 0x706c616e74ULL), static_cast<std::uint64_t>(s));
        r.b0 = kPlantedB0;
        records.push_back(r);
    }

    parallel_for(opt.jobs, static_cast<int>(records.size()), [&](int i) {
        auto& r = records[i];
        const auto start = Clock::now();
        const Graph g = r.instance == "planted"
                            ? planted_instance(kPlantedHubs, kPlantedDegree, r.seed)
                            : gnp(r.n, r.n > 1 ? std::min(1.0, r.c / r.n) : 0.0, r.seed);
        r.n = g.n();
        SparseParams params;
        params.b0 = r.b0;
        params.t = 2;
        params.escalate = config.escalate;
        run_sparse(r, g, params);
        r.wall_ms = ms_since(start);
    });
    return records;
}

CsvTable sparse_table(const std::vector<SparseRecord>& records, bool timing)
{
    CsvTable table;
    table.header = {"schema",  "instance",  "n",         "c",        "seed_index",
                    "seed",    "b0",        "delta",     "kappa",    "outcome",
                    "palette", "core_size", "h_forest",  "p1_max",   "p1_holds",
                    "p2_max",  "p2_holds",  "max_forbidden", "forbidden_bound", "forbidden_ok",
                    "keep_set_ok", "verified", "required_success"};
    std::vector<double> ms;
    for (const auto& r : records) {
        table.rows.push_back({"sparse.v1", r.instance, num(r.n), num(r.c, 4), num(r.seed_index),
                              num(r.seed), num(r.b0, 4), num(r.delta), num(r.kappa), r.outcome,
                              num(r.palette), num(r.core_size), flag(r.h_forest), num(r.p1_max),
                              flag(r.p1_holds), num(r.p2_max), flag(r.p2_holds),
                              num(r.max_forbidden), num(r.forbidden_bound, 4), flag(r.forbidden_ok),
                              flag(r.keep_set_ok), flag(r.verified), flag(r.required_success)});
        ms.push_back(r.wall_ms);
    }
    add_timing(table, timing, ms);
    return table;
}

bool all_pass(const std::vector<SparseRecord>& records)
{
    return std::all_of(records.begin(), records.end(), [](const SparseRecord& r) {
        const bool required = !r.required_success ||
                              (r.outcome == "success_at_kappa" && r.palette == r.kappa);
        return r.verified && r.keep_set_ok && r.forbidden_ok && required;
    });
}

// --- t-tone tree scaling --------------------------------------------------

Graph random_tree_with_max_degree(int n, int delta, std::uint64_t seed)
{
    if (delta < 1 || n <= delta) throw DomainError("random_tree_with_max_degree: need n > delta >= 1");
    if (delta == 1 && n != 2) throw DomainError("random_tree_with_max_degree: delta 1 forces n = 2");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> open;
    for (Vertex leaf = 1; leaf <= delta; ++leaf) {
        edges.emplace_back(0, leaf);
        degree[leaf] = 1;
        if (delta > 1) open.push_back(leaf);
    }
    degree[0] = delta;
    for (Vertex v = delta + 1; v < n; ++v) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(open.size()));
        const Vertex u = open[pick];
        edges.emplace_back(u, v);
        if (++degree[u] == delta) {
            open[pick] = open.back();
            open.pop_back();
        }
        degree[v] = 1;
        if (delta > 1) open.push_back(v);
    }
    std::vector<Vertex> relabel(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) relabel[v] = v;
    rng.shuffle(relabel);
    for (auto& [a, b] : edges) {
        a = relabel[a];
        b = relabel[b];
    }
    return Graph::from_edges(n, edges);
}

std::vector<ScalingRecord> exp_ttone_tree_scaling(const std::vector<int>& t_list,
                                                  const std::vector<int>& delta_list, int trials,
                                                  const RunOptions& opt)
{
    if (trials < 1) throw DomainError("ttone_tree_scaling: need at least one trial");
    for (int t : t_list)
        if (t < 3 || t > 6) throw DomainError("ttone_tree_scaling: t must be in [3, 6]");
    for (int d : delta_list)
        if (d < 1 || d > 400) throw DomainError("ttone_tree_scaling: delta must be in [1, 400]");

    std::vector<ScalingRecord> records;
    for (int t : t_list)
        for (int d : delta_list)
            for (int i = 0; i < trials; ++i) {
                ScalingRecord r{.t = t, .delta = d, .trial = i, .n = d == 1 ? 2 : 4 * d};
                r.seed = derive_seed(derive_seed(derive_seed(opt.seed, static_cast<std::uint64_t>(t)),
                                                 static_cast<std::uint64_t>(d)),
                                     static_cast<std::uint64_t>(i));
                records.push_back(r);
            }

    parallel_for(opt.jobs, static_cast<int>(records.size()), [&](int i) {
        auto& r = records[i];
        const auto start = Clock::now();
        const Graph tree = random_tree_with_max_degree(r.n, r.delta, r.seed);
        r.palette = min_greedy_palette(tree, r.t);
        const auto colored = greedy_t_tone_forest(tree, r.t, r.palette);
        const auto* coloring = std::get_if<ToneColoring>(&colored);
        if (!coloring) throw VerificationFailed("min_greedy_palette returned a failing palette");
        check(tree, *coloring, "greedy_t_tone_forest");
        r.normalized = r.palette / std::sqrt(static_cast<double>(r.delta));
        r.ok = true;
        r.wall_ms = ms_since(start);
    });

    std::vector<ScalingRecord> out;
    for (int t : t_list) {
        ScalingRecord summary{.t = t, .trial = -1};
        summary.band_min = std::numeric_limits<double>::infinity();
        for (const auto& r : records) {
            if (r.t != t) continue;
            out.push_back(r);
            summary.band_min = std::min(summary.band_min, r.normalized);
            summary.band_max = std::max(summary.band_max, r.normalized);
        }
        summary.normalized = summary.band_max / summary.band_min;
        summary.ok = summary.normalized <= kScalingBandLimit;
        out.push_back(summary);
    }
    return out;
}

CsvTable scaling_table(const std::vector<ScalingRecord>& records, bool timing)
{
    CsvTable table;
    table.header = {"schema",     "t",        "delta",    "trial", "seed", "n", "palette",
                    "normalized", "band_min", "band_max", "ok"};
    std::vector<double> ms;
    for (const auto& r : records) {
        if (r.trial < 0)
            table.rows.push_back({"ttone_tree_scaling.v1", num(r.t), "", "summary", "", "", "",
                                  num(r.normalized), num(r.band_min), num(r.band_max), flag(r.ok)});
        else
            table.rows.push_back({"ttone_tree_scaling.v1", num(r.t), num(r.delta), num(r.trial),
                                  num(r.seed), num(r.n), num(r.palette), num(r.normalized), "", "",
                                  flag(r.ok)});
        ms.push_back(r.wall_ms);
    }
    add_timing(table, timing, ms);
    return table;
}

bool all_pass(const std::vector<ScalingRecord>& records)
{
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok; });
}

}  // namespace tonelab

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "support/oracles.hpp"
#include "tonelab/dense.hpp"
#include "tonelab/exact.hpp"
#include "tonelab/experiments.hpp"
#include "tonelab/random.hpp"
#include "tonelab/sparse.hpp"
#include "tonelab/tree_color.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>
#include <string>

using namespace tonelab;
using oracle::TestRng;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances and sizes.
constexpr int kForestCount = 10000;
constexpr int kForestMaxN = 10000;
constexpr int kVerifyLabelings = 500;
constexpr int kPowerGraphs = 100;
constexpr int kPowerMaxN = 50;
constexpr int kDegreeSequences = 1000;
constexpr int kTriangleSeeds = 10000;
constexpr double kTriangleSigmas = 3.0;
constexpr int kDenseSeeds = 5;
constexpr int kKeepSetInstances = 50;
constexpr int kScalingTrees = 20;
constexpr double kScalingBand = 3.0;
constexpr std::uint64_t kMasterSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

Outcome fail(const std::string& why)
{
    return {false, why};
}

// ---------------------------------------------------------------------------

Outcome tree_formula()
{
    RunOptions opt;
    opt.seed = kMasterSeed;
    const auto records = exp_tree_formula(300, 9, opt);
    int paths = 0, stars = 0, random = 0;
    for (const auto& r : records) {
        if (r.skipped) return fail("row " + r.family + " " + std::to_string(r.index) + " skipped");
        if (r.n < 2 || r.n > 9) return fail("tree size out of range");
        if (r.tau != r.kappa || r.k_used != r.kappa)
            return fail(r.family + " n=" + std::to_string(r.n) + ": tau " + std::to_string(r.tau) +
                        ", kappa " + std::to_string(r.kappa) + ", palette " + std::to_string(r.k_used));
        paths += r.family == "path";
        stars += r.family == "star";
        random += r.family == "prufer";
    }
    if (paths != 8 || stars != 8 || random != 300) return fail("unexpected row counts");
    return {true, std::to_string(records.size()) + " trees, tau = kappa = palette on all"};
}

// ---------------------------------------------------------------------------

Graph mixed_forest(int n, TestRng& rng, int kind)
{
    switch (kind) {
    case 0:
        return random_tree(n, rng.next());
    case 1:
        return oracle::random_forest(n, 0.05, rng);
    default: {
        // A hub of random degree, the rest attached to random earlier vertices,
        // some edges dropped.
        const int hub = rng.between(1, std::min(n - 1, 300));
        std::vector<Edge> e;
        for (int v = 1; v <= hub; ++v) e.emplace_back(0, v);
        for (int v = hub + 1; v < n; ++v)
            if (!rng.coin(0.02)) e.emplace_back(rng.between(1, v - 1), v);
        return Graph::from_edges(n, e);
    }
    }
}

Outcome forests_at_scale()
{
    TestRng rng(kMasterSeed);
    std::int64_t vertices = 0;
    int largest_palette = 0;
    for (int i = 0; i < kForestCount; ++i) {
        const int n = rng.between(2, kForestMaxN);
        Graph f = mixed_forest(n, rng, i % 3);
        if (f.m() == 0) f = oracle::path(n);
        const ToneColoring c = color_forest_2tone(f);
        const int expected = kappa(max_degree(f));
        if (c.k() != expected || c.colors_used() > expected)
            return fail("forest " + std::to_string(i) + " used " + std::to_string(c.k()) +
                        " colors, kappa is " + std::to_string(expected));
        if (const auto v = verify(f, c))
            return fail("forest " + std::to_string(i) + " failed verify at (" + std::to_string(v->u) +
                        ", " + std::to_string(v->v) + ")");
        vertices += n;
        largest_palette = std::max(largest_palette, expected);
    }
    return {true, std::to_string(kForestCount) + " forests, " + std::to_string(vertices) +
                      " vertices, palettes up to " + std::to_string(largest_palette)};
}

// ---------------------------------------------------------------------------

Outcome lower_bound()
{
    RunOptions opt;
    opt.seed = kMasterSeed;
    const auto records = exp_lower_bound(100, 10, {2, 3}, opt);
    int random_rows = 0;
    for (const auto& r : records) {
        if (!r.holds || r.tau < r.bound)
            return fail(r.family + " " + std::to_string(r.index) + ": tau " + std::to_string(r.tau) +
                        " < bound " + std::to_string(r.bound));
        random_rows += r.family == "gnp";
    }
    if (random_rows != 200) return fail("expected 100 graphs at two tones");
    return {true, "100 graphs x t in {2,3} plus fixtures, no exceptions"};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> bfs_distances(const Graph& g)
{
    std::vector<std::vector<int>> d(g.n(), std::vector<int>(g.n(), oracle::kFar));
    for (Vertex s = 0; s < g.n(); ++s) {
        std::queue<Vertex> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            for (Vertex w = 0; w < g.n(); ++w)
                if (d[s][w] == oracle::kFar && g.has_edge(u, w)) {
                    d[s][w] = d[s][u] + 1;
                    q.push(w);
                }
        }
    }
    return d;
}

Outcome oracle_cross_checks()
{
    TestRng rng(kMasterSeed + 4);
    int invalid = 0;
    for (int i = 0; i < kVerifyLabelings; ++i) {
        const int n = rng.between(1, 16);
        const Graph g = oracle::random_graph(n, rng.between(5, 50) / 100.0, rng);
        const int t = rng.between(1, 3);
        const ToneColoring c = oracle::random_labeling(n, t, rng.between(t, 3 * t + 3), rng);
        const auto got = verify(g, c);
        const auto expected = oracle::naive_verify(g, c);
        if (got.has_value() != expected.has_value() ||
            (got && (got->u != expected->u || got->v != expected->v)))
            return fail("verify disagrees with the naive oracle on labeling " + std::to_string(i));
        invalid += got.has_value();
    }

    for (int i = 0; i < kPowerGraphs; ++i) {
        const int n = rng.between(1, kPowerMaxN);
        const Graph g = oracle::random_graph(n, rng.between(2, 25) / 100.0, rng);
        const auto d = bfs_distances(g);
        const int power = rng.between(1, 5);
        const Graph p = power_graph(g, power);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (p.has_edge(u, v) != (d[u][v] <= power))
                    return fail("power graph mismatch on graph " + std::to_string(i));
    }

    for (int i = 0; i < kDegreeSequences; ++i) {
        DegreeSequence d;
        const int n = rng.between(1, 40);
        int sum = 0;
        for (int v = 0; v < n; ++v) {
            d.degrees.push_back(rng.between(0, 8));
            sum += d.degrees.back();
        }
        if (sum % 2 != 0) ++d.degrees[rng.below(n)];
        const auto sample = configuration_model(d, derive_seed(kMasterSeed, i));
        if (sample.graph.degrees() != d.degrees)
            return fail("degree sequence " + std::to_string(i) + " not preserved");
    }

    const DegreeSequence triangle{{2, 2, 2}};
    int simple = 0;
    for (int s = 0; s < kTriangleSeeds; ++s)
        simple += configuration_model(triangle, derive_seed(kMasterSeed + 1, s)).simple;
    const double p = 8.0 / 15.0;
    const double sigma = std::sqrt(p * (1 - p) / kTriangleSeeds);
    const double observed = static_cast<double>(simple) / kTriangleSeeds;
    const double z = (observed - p) / sigma;
    std::ostringstream detail;
    detail << kVerifyLabelings << " labelings (" << invalid << " invalid), " << kPowerGraphs
           << " power graphs, " << kDegreeSequences << " degree sequences, simple fraction "
           << observed << " (z = " << z << ")";
    if (std::abs(z) > kTriangleSigmas) return fail(detail.str());
    return {true, detail.str()};
}

// ---------------------------------------------------------------------------

struct Band {
    double low = 0, high = 0;
};

std::map<int, Band> read_band(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<int, Band> band;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        band[std::stoi(cells[0])] = {std::stod(cells[2]), std::stod(cells[3])};
    }
    return band;
}

bool partitions_ok_oracle(const Graph& g, const std::vector<Partition>& parts)
{
    std::vector<std::vector<int>> class_of;
    for (const Partition& p : parts) {
        std::vector<int> cls(g.n(), -1);
        for (int i = 0; i < p.part_count(); ++i)
            for (Vertex v : p.parts()[i]) cls[v] = i;
        for (Vertex v = 0; v < g.n(); ++v)
            if (cls[v] < 0) return false;
        class_of.push_back(std::move(cls));
    }
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            int shared = 0;
            for (const auto& cls : class_of) shared += cls[u] == cls[v];
            if (shared > 1) return false;                   // two parts meet twice
            if (shared == 1 && g.has_edge(u, v)) return false;  // a part is not independent
        }
    return true;
}

Outcome dense_grid()
{
    const std::vector<int> n_list{100, 200, 400};
    const std::vector<double> p_list{0.3, 0.5};
    RunOptions opt;
    opt.seed = kMasterSeed;
    std::map<int, double> ratio_sum;
    int runs = 0;
    for (int t : {2, 3}) {
        const auto records = exp_dense_ratio(n_list, p_list, t, kDenseSeeds, opt);
        for (const auto& r : records) {
            const Graph g = gnp(r.n, r.p, r.seed);
            const DenseResult out = t_tone_color_dense(g, t, dense_params(r.n, r.p), derive_seed(r.seed, 1));
            const std::string where = "n=" + std::to_string(r.n) + " p=" + std::to_string(r.p) +
                                      " t=" + std::to_string(t) + " seed " + std::to_string(r.seed_index);
            if (out.coloring.k() != r.colors) return fail(where + ": rerun differs");
            if (verify(g, out.coloring) || !r.verified) return fail(where + ": verify failed");
            if (!partitions_ok_oracle(g, out.partitions) || !r.partitions_ok)
                return fail(where + ": partition post-check failed");
            if (t == 2 && r.p == 0.5) ratio_sum[r.n] += r.ratio;
            ++runs;
        }
    }
    const auto band = read_band(DENSE_BAND_FILE);
    std::ostringstream detail;
    detail << runs << " runs valid; mean ratio at p=0.5:";
    double prev = 1e9;
    bool ok = true;
    for (int n : n_list) {
        const double mean = ratio_sum[n] / kDenseSeeds;
        detail << " n=" << n << " " << mean;
        const auto it = band.find(n);
        if (it == band.end() || mean < it->second.low || mean > it->second.high) {
            detail << " (outside band)";
            ok = false;
        }
        if (mean > prev + 1e-12) {
            detail << " (increase)";
            ok = false;
        }
        prev = mean;
    }
    return {ok, detail.str()};
}

// ---------------------------------------------------------------------------

bool kept_pairs_ok(const Graph& g, const ToneColoring& c, int t)
{
    TruncatedBfs bfs(g, t);
    for (Vertex u = 0; u < g.n(); ++u) {
        if (!c.has_label(u)) continue;
        for (const Reach& r : bfs.run(u))
            if (r.vertex > u && c.has_label(r.vertex) &&
                oracle::overlap(*c.label(u), *c.label(r.vertex)) >= r.distance)
                return false;
    }
    return true;
}

Outcome sparse_contracts()
{
    // (a) planted instance.
    const Graph planted = planted_instance(3, 12, kMasterSeed);
    SparseParams params;
    params.b0 = 10.0;
    params.escalate = false;
    const auto out = sparse_color(planted, params);
    const auto* ok = std::get_if<SparseResult>(&out);
    if (!ok) return fail("planted instance: structural failure");
    if (ok->coloring.k() != 8 || ok->coloring.colors_used() > 8) return fail("planted instance: palette is not 8");
    if (verify(planted, ok->coloring)) return fail("planted instance: verify failed");

    // (b) keep-set fuzz over instances whose H is a forest.
    TestRng rng(kMasterSeed + 6);
    int checked = 0;
    for (int i = 0; i < kKeepSetInstances; ++i) {
        Graph g(1);
        SparseParams p;
        switch (i % 3) {
        case 0: {
            const int hubs = rng.between(1, 4);
            const int degree = rng.between(5, 14);
            g = planted_instance(hubs, degree, rng.next());
            p.b0 = rng.between(4, degree);
            p.t = 2;
            break;
        }
        case 1:
            g = oracle::random_forest(rng.between(10, 300), 0.05, rng);
            p.b0 = rng.between(2, 5);
            p.t = 2;
            break;
        default:
            g = oracle::random_forest(rng.between(10, 200), 0.1, rng);
            p.b0 = rng.between(2, 4);
            p.t = 3;
            break;
        }
        if (g.m() == 0) g = oracle::path(g.n());
        const std::string where = "instance " + std::to_string(i);
        const auto run = sparse_color(g, p);
        const auto* res = std::get_if<SparseResult>(&run);
        if (!res || verify(g, res->coloring)) return fail(where + ": pipeline output invalid");
        if (res->report.whole_graph_fallback) return fail(where + ": H was not a forest");
        // Stage contract at the palette the pipeline settled on.
        const auto decomp = core_decomposition(g, p);
        const auto kept = kept_core_coloring(g, decomp, p.t, res->report.palette);
        const auto* c = std::get_if<ToneColoring>(&kept);
        if (!c) return fail(where + ": H coloring stuck at the final palette");
        if (!kept_pairs_ok(g, *c, p.t)) return fail(where + ": kept labels clash");
        ++checked;
    }

    // (c) star lower bound.
    for (int delta = 1; delta <= 6; ++delta)
        if (exact_tau(oracle::star(delta), 2).tau != kappa(delta))
            return fail("exact tau of K_{1," + std::to_string(delta) + "} differs from kappa");

    return {true, "planted: 8 colors; keep-set checked on " + std::to_string(checked) + "/" +
                      std::to_string(kKeepSetInstances) + " runs, all pipelines valid; stars delta<=6 certified"};
}

// ---------------------------------------------------------------------------

Outcome tree_scaling()
{
    RunOptions opt;
    opt.seed = kMasterSeed;
    const auto records = exp_ttone_tree_scaling({3}, {4, 9, 16, 25, 36}, kScalingTrees, opt);
    double lo = 1e9, hi = 0;
    int trees = 0;
    for (const auto& r : records) {
        if (r.trial < 0) continue;
        if (!r.ok) return fail("tree delta=" + std::to_string(r.delta) + " trial " + std::to_string(r.trial) + " failed verify");
        lo = std::min(lo, r.normalized);
        hi = std::max(hi, r.normalized);
        ++trees;
    }
    if (trees != 5 * kScalingTrees) return fail("unexpected tree count");
    std::ostringstream detail;
    detail << trees << " trees verified; normalized palette in [" << lo << ", " << hi << "], band ratio "
           << hi / lo;
    return {hi / lo <= kScalingBand, detail.str()};
}

// ---------------------------------------------------------------------------

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CliStep {
    std::string args;
    int exit_code = 0;
};

// Exit 3 marks a sparse run that needed extra colors.
const std::vector<CliStep> kCliScript{
    {"--seed 5 gen gnp --n 60 --p 0.5 --out gnp.txt"},
    {"--seed 5 gen gnp --n 9 --p 0.4 --out small.txt"},
    {"--seed 5 gen gnp --n 400 --p 0.005 --out sparse.txt"},
    {"--seed 5 gen tree --n 40 --out tree.txt"},
    {"--seed 5 gen config --degrees degrees.txt --out config.txt"},
    {"exact --graph small.txt --t 2 --out exact.col"},
    {"color-tree --graph tree.txt --t 2 --out tree2.col"},
    {"color-tree --graph tree.txt --t 3 --out tree3.col"},
    {"--seed 9 color-dense --graph gnp.txt --t 2 --out dense.col --report dense.csv"},
    {"color-sparse --graph sparse.txt --t 2 --out sparse.col --report sparse.csv", 3},
    {"color-sparse --graph tree.txt --t 2 --b0 0 --out tree-sparse.col --report tree-sparse.csv"},
    {"verify --graph gnp.txt --coloring dense.col"},
    {"--seed 3 experiment tree_formula --trials 30 --n-max 8 --out tf.csv"},
    {"--seed 3 experiment lower_bound --trials 20 --n-max 8 --out lb.csv"},
    {"--seed 3 --jobs 2 experiment dense_ratio --n 60,80 --seeds 2 --out dr.csv"},
    {"--seed 3 --jobs 2 experiment sparse --n 300 --c 2 --seeds 2 --planted 1 --out sp.csv"},
    {"--seed 3 experiment ttone_tree_scaling --delta 4,9 --trials 3 --out sc.csv"},
};

void run_cli_script(const fs::path& dir)
{
    fs::create_directories(dir);
    {
        std::ofstream deg(dir / "degrees.txt");
        for (int d : {3, 1, 2, 2, 4, 1, 1, 2}) deg << d << '\n';
    }
    const std::string bin = TONELAB_BIN;
    for (std::size_t i = 0; i < kCliScript.size(); ++i) {
        const std::string log = "cmd" + std::to_string(i) + ".log";
        const std::string line = "cd '" + dir.string() + "' && '" + bin + "' " + kCliScript[i].args + " > " +
                                 log + " 2>&1; echo $? >> " + log;
        if (std::system(line.c_str()) == -1) throw std::runtime_error("cannot run " + kCliScript[i].args);
    }
}

Outcome cli_determinism()
{
    const fs::path root = fs::temp_directory_path() /
                          ("tonelab-acceptance-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    run_cli_script(root / "a");
    run_cli_script(root / "b");
    int files = 0;
    std::string problem;
    for (const auto& entry : fs::directory_iterator(root / "a")) {
        const fs::path other = root / "b" / entry.path().filename();
        if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
            problem = entry.path().filename().string() + " differs";
            break;
        }
        ++files;
    }
    // Each log ends with the command's exit status.
    for (std::size_t i = 0; problem.empty() && i < kCliScript.size(); ++i) {
        const std::string log = slurp(root / "a" / ("cmd" + std::to_string(i) + ".log"));
        const std::string expected = std::to_string(kCliScript[i].exit_code) + "\n";
        if (log.size() < expected.size() || log.substr(log.size() - expected.size()) != expected ||
            (log.size() > expected.size() && log[log.size() - expected.size() - 1] != '\n'))
            problem = "'" + kCliScript[i].args + "' ended with: " + log;
    }
    fs::remove_all(root);
    if (!problem.empty()) return fail(problem);
    return {true, std::to_string(files) + " output files byte-identical across two runs"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"tree formula exactness", tree_formula},
        {"forest coloring at scale", forests_at_scale},
        {"independence lower bound", lower_bound},
        {"oracle cross-checks", oracle_cross_checks},
        {"dense grid validity and ratio band", dense_grid},
        {"sparse pipeline contracts", sparse_contracts},
        {"t-tone tree scaling band", tree_scaling},
        {"CLI determinism", cli_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]"
                  << std::defaultfloat << std::setprecision(6) << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}

#pragma once

#include "tonelab/error.hpp"
#include "tonelab/graph.hpp"
#include "tonelab/sparse.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Experiment drivers. Each driver fans its trials out over a worker pool,
// re-verifies every coloring it produces (throwing VerificationFailed on the
// first invalid one) and returns records in trial order, so the output never
// depends on the number of workers. Every record carries the flags the
// experiment asserts; `all_pass` folds them.

namespace tonelab {

class VerificationFailed : public Error {
    using Error::Error;
};

/// RFC 4180 table: header row, CRLF-free (LF) line ends, fields quoted only
/// when they contain a comma, quote or newline.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out) const;
};

/// Runs fn(0) .. fn(count - 1) on `jobs` threads (jobs <= 1 runs inline).
/// The first exception thrown by any call is rethrown after all threads stop.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn);

/// Common knobs.
struct RunOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    bool timing = false;  // adds a wall_ms column, which makes output non-reproducible
};

// --- tree formula ---------------------------------------------------------

struct TreeFormulaRecord {
    std::string family;  // "path", "star" or "prufer"
    int index = 0;
    int n = 0;
    std::uint64_t seed = 0;
    int delta = 0;
    bool skipped = false;  // edgeless tree: kappa is undefined
    int tau = 0;
    int kappa = 0;
    int k_used = 0;
    bool equal = false;
    double wall_ms = 0.0;
};

/// Paths and stars on 2..n_max vertices, then `trials` uniform random trees
/// with n drawn from [min(2, n_max), n_max]. Requires 1 <= n_max <= 12.
std::vector<TreeFormulaRecord> exp_tree_formula(int trials, int n_max, const RunOptions& opt);
CsvTable tree_formula_table(const std::vector<TreeFormulaRecord>& records, bool timing);
bool all_pass(const std::vector<TreeFormulaRecord>& records);

// --- lower bound ----------------------------------------------------------

struct LowerBoundRecord {
    std::string family;  // "C5", "K4", "E6" or "gnp"
    int index = 0;
    int n = 0;
    int m = 0;
    int t = 0;
    std::uint64_t seed = 0;
    int alpha = 0;
    int bound = 0;
    int tau = 0;
    int slack = 0;
    bool holds = false;
    double wall_ms = 0.0;
};

/// The three fixture graphs, then `trials` random graphs G(n, p) with n in
/// [1, n_max] and p in {0.2, 0.35, 0.5, 0.65, 0.8}, each solved for every t
/// in t_list. Requires n_max <= 10 and every t in [1, 3].
std::vector<LowerBoundRecord> exp_lower_bound(int trials, int n_max, const std::vector<int>& t_list,
                                              const RunOptions& opt);
CsvTable lower_bound_table(const std::vector<LowerBoundRecord>& records, bool timing);
bool all_pass(const std::vector<LowerBoundRecord>& records);

// --- dense ratio ----------------------------------------------------------

struct DenseRatioRecord {
    int n = 0;
    double p = 0.0;
    int t = 0;
    int seed_index = 0;
    std::uint64_t seed = 0;
    int colors = 0;       // t-tone pipeline
    int chi_proxy = 0;    // t = 1 pipeline
    int alpha_hat = 0;    // randomized independent set search
    int bound_hat = 0;    // ceil(t n / alpha_hat)
    double ratio = 0.0;   // colors / chi_proxy
    bool diameter_warning = false;
    bool partitions_ok = false;  // parts independent, partitions pairwise respecting
    bool verified = false;
    double wall_ms = 0.0;
};

/// One G(n, p) per (n, p, seed index); the graph depends only on (master
/// seed, n, p, seed index), so the t = 1 and t = 2 rows of one instance share
/// a graph. Requires every n in [3, 5000].
std::vector<DenseRatioRecord> exp_dense_ratio(const std::vector<int>& n_list,
                                              const std::vector<double>& p_list, int t, int seeds,
                                              const RunOptions& opt);
CsvTable dense_ratio_table(const std::vector<DenseRatioRecord>& records, bool timing);
bool all_pass(const std::vector<DenseRatioRecord>& records);

/// Exhaustive post-check used by the dense experiment: every part is an
/// independent set of g and the partitions pairwise respect each other.
bool partitions_valid(const Graph& g, std::span<const Partition> partitions);

// --- sparse ---------------------------------------------------------------

/// Hubs of the given degree, each the center of a spider whose legs are
/// paths of 4 to 8 vertices; the far leg ends are strung in random order
/// around one cycle with random gaps. Outside the hubs every degree is at
/// most 3, hubs are pairwise at distance at least 10, and with b0 > 3 the
/// graph H of the sparse pipeline is a disjoint union of spiders.
Graph planted_instance(int hubs, int hub_degree, std::uint64_t seed);

struct SparseRecord {
    std::string instance;  // "gnp" or "planted"
    int n = 0;
    double c = 0.0;        // average degree parameter (gnp) or 0
    int seed_index = 0;
    std::uint64_t seed = 0;
    double b0 = 0.0;
    int delta = 0;
    int kappa = 0;
    std::string outcome;   // success_at_kappa, escalated, structural_failure
    int palette = 0;
    int core_size = 0;
    bool h_forest = false;
    int p1_max = 0;
    bool p1_holds = false;
    int p2_max = 0;
    bool p2_holds = false;
    std::int64_t max_forbidden = -1;
    double forbidden_bound = 0.0;   // 2 b0 palette + b0^2 (t = 2)
    bool forbidden_ok = true;
    bool keep_set_ok = true;        // kept labels valid after the uncoloring step
    bool verified = false;
    bool required_success = false;  // planted rows must succeed at kappa
    double wall_ms = 0.0;
};

struct SparseConfig {
    std::vector<int> n_list;
    std::vector<double> c_list;
    std::optional<double> b0;  // default ln^{1/4} n
    int seeds = 1;
    bool escalate = true;
    int planted = 0;           // number of planted instances (3 hubs of degree 12, b0 = 10)
};

/// Requires every n in [1, 200000] and c >= 0.
std::vector<SparseRecord> exp_sparse(const SparseConfig& config, const RunOptions& opt);
CsvTable sparse_table(const std::vector<SparseRecord>& records, bool timing);
bool all_pass(const std::vector<SparseRecord>& records);

// --- t-tone tree scaling --------------------------------------------------

/// Random tree with exactly `delta` as maximum degree: a star K_{1,delta}
/// grown by attaching vertices to uniformly chosen vertices of degree below
/// delta, with ids shuffled at the end. Requires n > delta >= 1, and n = 2
/// when delta = 1.
Graph random_tree_with_max_degree(int n, int delta, std::uint64_t seed);

struct ScalingRecord {
    int t = 0;
    int delta = 0;
    int trial = 0;         // -1 on the summary row of a t
    std::uint64_t seed = 0;
    int n = 0;
    int palette = 0;
    double normalized = 0.0;  // palette / sqrt(delta); band ratio on the summary row
    double band_min = 0.0;
    double band_max = 0.0;
    bool ok = false;          // verified (trial rows) or band ratio <= 3 (summary rows)
    double wall_ms = 0.0;
};

/// Trees of 4 delta vertices (a single edge for delta = 1). Requires every t
/// in [3, 6] and delta in [1, 400].
std::vector<ScalingRecord> exp_ttone_tree_scaling(const std::vector<int>& t_list,
                                                  const std::vector<int>& delta_list, int trials,
                                                  const RunOptions& opt);
CsvTable scaling_table(const std::vector<ScalingRecord>& records, bool timing);
bool all_pass(const std::vector<ScalingRecord>& records);

inline constexpr double kScalingBandLimit = 3.0;

}  // namespace tonelab

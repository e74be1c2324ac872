#pragma once

#include "tonelab/graph.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tonelab {

/// Seeded pseudo-random source used by every generator and randomized
/// search in the library.
///
/// Engine: std::mt19937_64. Bounded integers, reals and shuffles are derived
/// from raw engine output, so seeded results match across compilers and
/// releases.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound); bound must be positive. Rejection sampling, no
    /// modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform on [0, 1) with 53 random bits.
    double unit();

    template <typename T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        shuffle(std::span<T>(items));
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer applied to (seed, stream). Gives independent seeds
/// for parallel trials from one master seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// G(n, p): each of the n(n-1)/2 pairs present independently with
/// probability p. Uses geometric skipping, so the cost is O(n + m).
Graph gnp(int n, double p, std::uint64_t seed);

/// Uniformly random labeled tree on n vertices via Prüfer decoding.
Graph random_tree(int n, std::uint64_t seed);

/// Prüfer decoding of a sequence of length n - 2 over [0, n).
Graph tree_from_prufer(int n, std::span<const Vertex> sequence);

struct DegreeSequence {
    std::vector<int> degrees;

    /// Half the degree sum; throws OddDegreeSum when the sum is odd.
    std::int64_t edge_count() const;
};

/// Points W_i (|W_i| = d_i) and a perfect matching on them. Point ids are
/// global: vertex i owns the contiguous block starting at block_start[i].
struct HalfEdgePairing {
    std::vector<std::int64_t> block_start;
    std::vector<Vertex> owner;            // point -> vertex
    std::vector<std::int64_t> partner;    // point -> matched point

    MultiGraph collapse() const;
};

/// Uniform random perfect matching on the degree-sequence points.
HalfEdgePairing random_pairing(const DegreeSequence& d, std::uint64_t seed);

struct ConfigurationSample {
    MultiGraph graph;
    bool simple = false;
};

/// Throws OddDegreeSum.
ConfigurationSample configuration_model(const DegreeSequence& d, std::uint64_t seed);

struct TypicalityVerdict {
    bool typical = false;
    bool enough_edges = false;       // sum(d)/2 >= c n / 3
    bool max_degree_in_range = false;  // ln^{3/4} n <= max d <= ln n
    bool few_high_degree = false;    // |{i : d_i >= ln^{1/4} n}| <= n ln n exp(-ln^{1/4} n)
};

TypicalityVerdict is_typical(const DegreeSequence& d, double c, int n);

}  // namespace tonelab

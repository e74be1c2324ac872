#pragma once

#include "tonelab/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tonelab {

using Color = int;

/// A vertex label: a set of distinct 1-based colors, kept sorted.
class Label {
public:
    Label() = default;

    /// Sorts; throws DomainError on duplicates or colors below 1.
    explicit Label(std::vector<Color> colors);
    Label(std::initializer_list<Color> colors) : Label(std::vector<Color>(colors)) {}

    std::span<const Color> colors() const { return colors_; }
    int size() const { return static_cast<int>(colors_.size()); }
    Color max_color() const { return colors_.empty() ? 0 : colors_.back(); }
    bool contains(Color c) const;

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;

private:
    std::vector<Color> colors_;
};

int intersection_size(const Label& a, const Label& b);

/// Labels for the vertices of one graph with tone t over the palette [1, k].
/// Vertices may be unlabeled while a coloring is being built.
class ToneColoring {
public:
    ToneColoring(int n, int t, int k);

    int n() const { return static_cast<int>(labels_.size()); }
    int t() const { return t_; }
    int k() const { return k_; }
    void set_palette(int k) { k_ = k; }

    const std::optional<Label>& label(Vertex v) const { return labels_[v]; }
    bool has_label(Vertex v) const { return labels_[v].has_value(); }

    /// Throws DomainError when the label does not have exactly t colors.
    void assign(Vertex v, Label label);
    void erase(Vertex v) { labels_[v].reset(); }

    bool is_total() const;

    /// Number of distinct colors appearing on some label.
    int colors_used() const;

    friend bool operator==(const ToneColoring&, const ToneColoring&) = default;

private:
    int t_;
    int k_;
    std::vector<std::optional<Label>> labels_;
};

/// A pair at distance `distance` whose labels share `overlap >= distance`
/// colors. Always reported with u < v.
struct Violation {
    Vertex u;
    Vertex v;
    int distance;
    int overlap;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks |f(u) ∩ f(v)| < d(u, v) for every pair of distinct vertices. Only
/// pairs within distance t can fail, since labels have t colors. Returns the
/// lexicographically first violating pair (u < v), or nullopt when valid.
///
/// Throws PartialColoring when a vertex is unlabeled and PaletteMismatch when
/// a label is outside [1, k] or has the wrong size.
std::optional<Violation> verify(const Graph& g, const ToneColoring& coloring);

/// As verify, restricted to pairs where both vertices are labeled.
std::optional<Violation> verify_partial(const Graph& g, const ToneColoring& coloring);

/// Least kappa with (kappa - 2)(kappa - 3) >= 2 delta; the same integer as
/// ceil((sqrt(8 delta + 1) + 5) / 2). Throws DomainError when delta < 1.
int kappa(std::int64_t delta);

/// ceil(t n / alpha).
std::int64_t tone_lower_bound(std::int64_t n, std::int64_t t, std::int64_t alpha);

/// Disjoint parts covering a ground set that is a subset of [0, universe).
class Partition {
public:
    Partition() = default;

    /// Throws DomainError when parts overlap, are empty, or leave the universe.
    Partition(int universe, std::vector<std::vector<Vertex>> parts);

    /// Every vertex of [0, n) in its own part.
    static Partition singletons(int n);

    int universe() const { return static_cast<int>(part_of_.size()); }
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<Vertex>>& parts() const { return parts_; }
    std::span<const Vertex> part(int i) const { return parts_[i]; }

    /// Part index of v, or -1 when v is outside the ground set.
    int part_of(Vertex v) const { return part_of_[v]; }
    bool covers(Vertex v) const { return part_of_[v] >= 0; }

    /// Sorted ground set.
    std::vector<Vertex> ground_set() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<Vertex>> parts_;
    std::vector<int> part_of_;
};

/// |A_i ∩ B_j| <= 1 for all parts. Throws GroundSetMismatch.
bool respects(const Partition& a, const Partition& b);

/// |S ∩ P_j| <= 1 for every part of p.
bool set_respects(std::span<const Vertex> set, const Partition& p);

/// One color per part of every partition, partition i using its own
/// contiguous block of colors. Vertex v gets the colors of the parts that
/// contain it, so the tone equals the number of partitions.
///
/// Requires each partition to cover V(g), each part to be independent and
/// the partitions to respect each other pairwise; otherwise throws
/// PreconditionViolated naming the offending part or pair. Under these
/// conditions two vertices share at most one color, and only when they are
/// non-adjacent, so the result is valid on any graph.
ToneColoring partitions_to_coloring(std::span<const Partition> partitions, const Graph& g);

/// S_c: the vertices whose label contains color c, ascending.
std::vector<Vertex> color_class(const ToneColoring& coloring, Color c);

}  // namespace tonelab

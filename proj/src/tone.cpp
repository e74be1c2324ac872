#include "tonelab/tone.hpp"

#include "tonelab/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tonelab {

Label::Label(std::vector<Color> colors) : colors_(std::move(colors))
{
    std::sort(colors_.begin(), colors_.end());
    if (!colors_.empty() && colors_.front() < 1) throw DomainError("colors are 1-based");
    if (std::adjacent_find(colors_.begin(), colors_.end()) != colors_.end())
        throw DomainError("label repeats a color");
}

bool Label::contains(Color c) const
{
    return std::binary_search(colors_.begin(), colors_.end(), c);
}

int intersection_size(const Label& a, const Label& b)
{
    auto x = a.colors(), y = b.colors();
    std::size_t i = 0, j = 0;
    int shared = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] < y[j]) {
            ++i;
        } else if (y[j] < x[i]) {
            ++j;
        } else {
            ++shared;
            ++i;
            ++j;
        }
    }
    return shared;
}

ToneColoring::ToneColoring(int n, int t, int k) : t_(t), k_(k), labels_(static_cast<std::size_t>(n))
{
    if (t < 1) throw DomainError("tone must be at least 1");
}

void ToneColoring::assign(Vertex v, Label label)
{
    if (label.size() != t_)
        throw DomainError("label on vertex " + std::to_string(v) + " has " +
                          std::to_string(label.size()) + " colors, expected " + std::to_string(t_));
    labels_[v] = std::move(label);
}

bool ToneColoring::is_total() const
{
    return std::all_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

int ToneColoring::colors_used() const
{
    std::vector<Color> seen;
    for (const auto& l : labels_)
        if (l) seen.insert(seen.end(), l->colors().begin(), l->colors().end());
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

namespace {

void check_labels(const ToneColoring& coloring, bool require_total)
{
    for (Vertex v = 0; v < coloring.n(); ++v) {
        const auto& l = coloring.label(v);
        if (!l) {
            if (require_total)
                throw PartialColoring("vertex " + std::to_string(v) + " is unlabeled");
            continue;
        }
        if (l->size() != coloring.t() || l->max_color() > coloring.k())
            throw PaletteMismatch("label on vertex " + std::to_string(v) +
                                  " does not fit t = " + std::to_string(coloring.t()) +
                                  ", k = " + std::to_string(coloring.k()));
    }
}

std::optional<Violation> first_violation(const Graph& g, const ToneColoring& coloring)
{
    if (coloring.n() != g.n()) throw DomainError("coloring and graph sizes differ");
    TruncatedBfs bfs(g, coloring.t());
    std::vector<Reach> later;
    for (Vertex u = 0; u < g.n(); ++u) {
        const auto& lu = coloring.label(u);
        if (!lu) continue;
        later.clear();
        for (const Reach& r : bfs.run(u))
            if (r.vertex > u) later.push_back(r);
        std::sort(later.begin(), later.end(),
                  [](const Reach& a, const Reach& b) { return a.vertex < b.vertex; });
        for (const Reach& r : later) {
            const auto& lv = coloring.label(r.vertex);
            if (!lv) continue;
            const int overlap = intersection_size(*lu, *lv);
            if (overlap >= r.distance) return Violation{u, r.vertex, r.distance, overlap};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Violation> verify(const Graph& g, const ToneColoring& coloring)
{
    check_labels(coloring, true);
    return first_violation(g, coloring);
}

std::optional<Violation> verify_partial(const Graph& g, const ToneColoring& coloring)
{
    check_labels(coloring, false);
    return first_violation(g, coloring);
}

int kappa(std::int64_t delta)
{
    if (delta < 1) throw DomainError("kappa is defined for maximum degree >= 1");
    // With x = kappa - 2 the condition reads x (x - 1) >= 2 delta.
    const auto fits = [delta](std::int64_t x) { return x * (x - 1) >= 2 * delta; };
    auto x = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(delta)));
    x = std::max<std::int64_t>(x, 1);
    while (!fits(x)) ++x;
    while (x > 1 && fits(x - 1)) --x;
    return static_cast<int>(x + 2);
}

std::int64_t tone_lower_bound(std::int64_t n, std::int64_t t, std::int64_t alpha)
{
    if (n < 1 || t < 1 || alpha < 1 || alpha > n)
        throw DomainError("tone_lower_bound needs n, t >= 1 and 1 <= alpha <= n");
    return (t * n + alpha - 1) / alpha;
}

Partition::Partition(int universe, std::vector<std::vector<Vertex>> parts)
    : parts_(std::move(parts)), part_of_(static_cast<std::size_t>(universe), -1)
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        auto& part = parts_[i];
        if (part.empty()) throw DomainError("partition has an empty part");
        std::sort(part.begin(), part.end());
        for (Vertex v : part) {
            if (v < 0 || v >= universe) throw DomainError("part member outside the universe");
            if (part_of_[v] >= 0)
                throw DomainError("vertex " + std::to_string(v) + " is in two parts");
            part_of_[v] = static_cast<int>(i);
        }
    }
}

Partition Partition::singletons(int n)
{
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) parts[v] = {v};
    return Partition(n, std::move(parts));
}

std::vector<Vertex> Partition::ground_set() const
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < universe(); ++v)
        if (covers(v)) out.push_back(v);
    return out;
}

namespace {

// Index of a part of `b` sharing two vertices with some part of `a`, as
// (part of a, part of b), or nullopt.
std::optional<std::pair<int, int>> double_meet(const Partition& a, const Partition& b)
{
    std::vector<int> last_seen(static_cast<std::size_t>(b.part_count()), -1);
    for (int i = 0; i < a.part_count(); ++i)
        for (Vertex v : a.part(i)) {
            const int j = b.part_of(v);
            if (last_seen[j] == i) return std::pair{i, j};
            last_seen[j] = i;
        }
    return std::nullopt;
}

}  // namespace

bool respects(const Partition& a, const Partition& b)
{
    if (a.universe() != b.universe() || a.ground_set() != b.ground_set())
        throw GroundSetMismatch("partitions have different ground sets");
    return !double_meet(a, b).has_value();
}

bool set_respects(std::span<const Vertex> set, const Partition& p)
{
    std::vector<char> used(static_cast<std::size_t>(p.part_count()), 0);
    for (Vertex v : set) {
        const int j = p.part_of(v);
        if (j < 0) continue;
        if (used[j]) return false;
        used[j] = 1;
    }
    return true;
}

ToneColoring partitions_to_coloring(std::span<const Partition> partitions, const Graph& g)
{
    const int t = static_cast<int>(partitions.size());
    if (t < 1) throw PreconditionViolated("need at least one partition");
    int palette = 0;
    for (int i = 0; i < t; ++i) {
        const Partition& p = partitions[i];
        if (p.universe() != g.n())
            throw PreconditionViolated("partition " + std::to_string(i) + " has the wrong universe");
        for (Vertex v = 0; v < g.n(); ++v)
            if (!p.covers(v))
                throw PreconditionViolated("partition " + std::to_string(i) + " misses vertex " +
                                           std::to_string(v));
        for (int j = 0; j < p.part_count(); ++j)
            for (Vertex v : p.part(j))
                for (Vertex w : g.neighbors(v))
                    if (p.part_of(w) == j)
                        throw PreconditionViolated(
                            "part " + std::to_string(j) + " of partition " + std::to_string(i) +
                            " contains the edge (" + std::to_string(v) + ", " + std::to_string(w) +
                            ")");
        for (int h = 0; h < i; ++h)
            if (auto meet = double_meet(partitions[h], p))
                throw PreconditionViolated(
                    "part " + std::to_string(meet->first) + " of partition " + std::to_string(h) +
                    " meets part " + std::to_string(meet->second) + " of partition " +
                    std::to_string(i) + " in two vertices");
        palette += p.part_count();
    }

    ToneColoring coloring(g.n(), t, palette);
    std::vector<std::vector<Color>> colors(static_cast<std::size_t>(g.n()));
    int offset = 0;
    for (const Partition& p : partitions) {
        for (Vertex v = 0; v < g.n(); ++v) colors[v].push_back(offset + p.part_of(v) + 1);
        offset += p.part_count();
    }
    for (Vertex v = 0; v < g.n(); ++v) coloring.assign(v, Label(std::move(colors[v])));
    return coloring;
}

std::vector<Vertex> color_class(const ToneColoring& coloring, Color c)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < coloring.n(); ++v)
        if (coloring.label(v) && coloring.label(v)->contains(c)) out.push_back(v);
    return out;
}

}  // namespace tonelab

#include "tonelab/tree_color.hpp"

#include "label_search.hpp"
#include "tonelab/error.hpp"

#include <algorithm>
#include <string>

namespace tonelab {

RootedForest root_forest(const Graph& f)
{
    if (!is_forest(f)) throw NotAForest("graph has a cycle");
    RootedForest out;
    out.parent.assign(static_cast<std::size_t>(f.n()), std::nullopt);
    out.bfs_order.reserve(static_cast<std::size_t>(f.n()));
    std::vector<char> seen(static_cast<std::size_t>(f.n()), 0);
    for (Vertex root = 0; root < f.n(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::size_t head = out.bfs_order.size();
        out.bfs_order.push_back(root);
        for (; head < out.bfs_order.size(); ++head) {
            const Vertex u = out.bfs_order[head];
            for (Vertex w : f.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    out.parent[w] = u;
                    out.bfs_order.push_back(w);
                }
        }
    }
    return out;
}

int forest_independence_number(const Graph& f)
{
    const RootedForest rooted = root_forest(f);
    std::vector<char> blocked(static_cast<std::size_t>(f.n()), 0);
    int size = 0;
    for (auto it = rooted.bfs_order.rbegin(); it != rooted.bfs_order.rend(); ++it) {
        if (blocked[*it]) continue;
        ++size;
        if (auto p = rooted.parent[*it]) blocked[*p] = 1;
    }
    return size;
}

ToneColoring color_forest_2tone(const Graph& f)
{
    const int delta = max_degree(f);
    if (delta < 1) throw DomainError("2-tone forest coloring needs at least one edge");
    return color_forest_2tone(f, kappa(delta));
}

ToneColoring color_forest_2tone(const Graph& f, int palette)
{
    const RootedForest rooted = root_forest(f);
    const int delta = max_degree(f);
    const int needed = delta >= 1 ? kappa(delta) : 2;
    if (palette < needed)
        throw DomainError("palette " + std::to_string(palette) + " is below " +
                          std::to_string(needed) + " for maximum degree " + std::to_string(delta));

    // Pairs {a < b} are indexed a * (palette + 1) + b.
    const auto index = [palette](const Label& l) {
        return l.colors()[0] * (palette + 1) + l.colors()[1];
    };
    ToneColoring coloring(f.n(), 2, palette);
    std::vector<char> sibling_taken(static_cast<std::size_t>(palette + 1) * (palette + 1), 0);
    std::vector<int> taken_list;
    std::optional<Vertex> current_parent;

    for (Vertex v : rooted.bfs_order) {
        const auto parent = rooted.parent[v];
        if (!parent) {
            coloring.assign(v, Label{1, 2});
            continue;
        }
        // Children of one parent are contiguous in BFS order.
        if (parent != current_parent) {
            for (int i : taken_list) sibling_taken[i] = 0;
            taken_list.clear();
            current_parent = parent;
        }
        const Label& up = *coloring.label(*parent);
        int grand = -1;
        if (auto gp = rooted.parent[*parent]) grand = index(*coloring.label(*gp));

        std::optional<Label> pick;
        for (Color a = 1; a < palette && !pick; ++a) {
            if (up.contains(a)) continue;
            for (Color b = a + 1; b <= palette; ++b) {
                if (up.contains(b)) continue;
                const int id = a * (palette + 1) + b;
                if (id == grand || sibling_taken[id]) continue;
                pick = Label{a, b};
                break;
            }
        }
        if (!pick)
            throw std::logic_error("2-tone forest walk ran out of pairs at vertex " +
                                   std::to_string(v));
        sibling_taken[index(*pick)] = 1;
        taken_list.push_back(index(*pick));
        coloring.assign(v, std::move(*pick));
    }
    return coloring;
}

GreedyResult greedy_t_tone_forest(const Graph& f, int t, int k)
{
    if (t < 1) throw DomainError("tone must be at least 1");
    if (k < t) throw DomainError("palette smaller than the tone");
    const RootedForest rooted = root_forest(f);
    ToneColoring coloring(f.n(), t, k);
    TruncatedBfs bfs(f, t);
    detail::LabelSearch search(t, k);
    for (Vertex v : rooted.bfs_order) {
        search.clear();
        for (const Reach& r : bfs.run(v))
            if (const auto& l = coloring.label(r.vertex)) search.add(*l, r.distance - 1);
        auto label = search.least();
        if (!label) return Stuck{v};
        coloring.assign(v, std::move(*label));
    }
    return coloring;
}

int min_greedy_palette(const Graph& f, int t)
{
    if (f.n() == 0) return t;
    const int alpha = forest_independence_number(f);
    int k = static_cast<int>(std::max<std::int64_t>(t, tone_lower_bound(f.n(), t, alpha)));
    while (!std::holds_alternative<ToneColoring>(greedy_t_tone_forest(f, t, k))) ++k;
    return k;
}

}  // namespace tonelab

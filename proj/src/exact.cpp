#include "tonelab/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>

namespace tonelab {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

std::vector<Mask> adjacency_masks(const Graph& g)
{
    if (g.n() > 64) throw DomainError("exact solvers handle at most 64 vertices");
    std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
    return adj;
}

std::vector<Vertex> mask_to_set(Mask m)
{
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

class MisSearch {
public:
    MisSearch(std::vector<Mask> adj, SearchBudget budget) : adj_(std::move(adj)), budget_(budget) {}

    Mask solve(Mask all)
    {
        best_ = greedy(all);
        best_size_ = std::popcount(best_);
        expand(all, 0);
        return best_;
    }

private:
    Mask greedy(Mask cand) const
    {
        Mask chosen = 0;
        while (cand) {
            int pick = -1, pick_deg = 65;
            for (Mask c = cand; c; c &= c - 1) {
                int v = std::countr_zero(c);
                int d = std::popcount(adj_[v] & cand);
                if (d < pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            }
            chosen |= bit(pick);
            cand &= ~(adj_[pick] | bit(pick));
        }
        return chosen;
    }

    // Greedy partition of cand into cliques; an independent set meets each
    // clique at most once.
    int clique_cover(Mask cand) const
    {
        int cliques = 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= ~bit(v);
            Mask grow = cand & adj_[v];
            while (grow) {
                int u = std::countr_zero(grow);
                cand &= ~bit(u);
                grow &= adj_[u];
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(Mask cand, Mask chosen)
    {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetExhausted("independent set search exceeded its node budget",
                                  mask_to_set(best_), best_size_,
                                  static_cast<int>(adj_.size()));
        // Vertices of degree <= 1 inside cand belong to some maximum set.
        bool reduced = true;
        while (reduced && cand) {
            reduced = false;
            for (Mask c = cand; c; c &= c - 1) {
                int v = std::countr_zero(c);
                if (std::popcount(adj_[v] & cand) <= 1) {
                    chosen |= bit(v);
                    cand &= ~(adj_[v] | bit(v));
                    reduced = true;
                    break;
                }
            }
        }
        const int size = std::popcount(chosen);
        if (!cand) {
            if (size > best_size_) {
                best_ = chosen;
                best_size_ = size;
            }
            return;
        }
        if (size + clique_cover(cand) <= best_size_) return;

        int pivot = -1, pivot_deg = -1;
        for (Mask c = cand; c; c &= c - 1) {
            int v = std::countr_zero(c);
            int d = std::popcount(adj_[v] & cand);
            if (d > pivot_deg) {
                pivot = v;
                pivot_deg = d;
            }
        }
        expand(cand & ~(adj_[pivot] | bit(pivot)), chosen | bit(pivot));
        expand(cand & ~bit(pivot), chosen);
    }

    std::vector<Mask> adj_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    Mask best_ = 0;
    int best_size_ = 0;
};

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

class KColoring {
public:
    KColoring(const std::vector<Mask>& adj, SearchBudget budget, std::uint64_t& nodes)
        : adj_(adj), budget_(budget), nodes_(nodes)
    {
    }

    bool colorable(int k)
    {
        k_ = k;
        color_.assign(adj_.size(), -1);
        return expand(static_cast<int>(adj_.size()), 0);
    }

private:
    bool expand(int remaining, int used)
    {
        if (remaining == 0) return true;
        if (++nodes_ > budget_.max_nodes) throw BudgetExhausted("coloring search budget", {}, 0, 0);
        // DSATUR choice: most distinct neighbor colors, then degree, then id.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        Mask pick_forbidden = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (color_[v] >= 0) continue;
            Mask forbidden = 0;
            for (Mask c = adj_[v]; c; c &= c - 1) {
                int w = std::countr_zero(c);
                if (color_[w] >= 0) forbidden |= bit(color_[w]);
            }
            int sat = std::popcount(forbidden);
            int deg = std::popcount(adj_[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = static_cast<int>(v);
                pick_sat = sat;
                pick_deg = deg;
                pick_forbidden = forbidden;
            }
        }
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (pick_forbidden & bit(c)) continue;
            color_[pick] = c;
            if (expand(remaining - 1, std::max(used, c + 1))) return true;
        }
        color_[pick] = -1;
        return false;
    }

    const std::vector<Mask>& adj_;
    SearchBudget budget_;
    std::uint64_t& nodes_;
    int k_ = 0;
    std::vector<int> color_;
};

int dsatur_upper_bound(const std::vector<Mask>& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        Mask pick_forbidden = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            Mask forbidden = 0;
            for (Mask c = adj[v]; c; c &= c - 1)
                if (color[std::countr_zero(c)] >= 0) forbidden |= bit(color[std::countr_zero(c)]);
            int sat = std::popcount(forbidden);
            int deg = std::popcount(adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
                pick_forbidden = forbidden;
            }
        }
        int c = std::countr_one(pick_forbidden);
        color[pick] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// Backtracking over labels held as color masks (bit c-1 is color c).
class ToneSearch {
public:
    ToneSearch(const Graph& g, int t, int k, SearchBudget budget)
        : g_(g), t_(t), k_(k), budget_(budget)
    {
        const int n = g.n();
        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<int> position(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) position[order_[i]] = i;

        // Each vertex is checked against the earlier-placed vertices within
        // distance t; a pair at distance d may share at most d - 1 colors.
        constraints_.resize(static_cast<std::size_t>(n));
        const DistanceOracle dist = truncated_distances(g, t);
        for (int i = 0; i < n; ++i)
            for (const Reach& r : dist.within(order_[i]))
                if (position[r.vertex] < i)
                    constraints_[i].push_back({position[r.vertex], r.distance - 1});
        labels_.assign(static_cast<std::size_t>(n), 0);
        candidates_.resize(static_cast<std::size_t>(n));
    }

    bool run() { return place(0, 0); }
    std::uint64_t nodes() const { return nodes_; }

    ToneColoring coloring() const
    {
        ToneColoring out(g_.n(), t_, k_);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            std::vector<Color> colors;
            for (Mask m = labels_[i]; m; m &= m - 1) colors.push_back(std::countr_zero(m) + 1);
            out.assign(order_[i], Label(std::move(colors)));
        }
        return out;
    }

private:
    struct Constraint {
        int position;
        int cap;
    };

    bool place(int pos, int max_color)
    {
        if (pos == static_cast<int>(order_.size())) return true;
        if (++nodes_ > budget_.max_nodes)
            throw BudgetExhausted("tone search exceeded its node budget", {}, 0, 0);
        auto& cands = candidates_[pos];
        cands.clear();
        collect(pos, max_color, 1, 0, 0, cands);
        for (Mask label : cands) {
            labels_[pos] = label;
            const int top = 64 - std::countl_zero(label);
            if (place(pos + 1, std::max(max_color, top))) return true;
        }
        labels_[pos] = 0;
        return false;
    }

    // Labels in lexicographic order. Colors above max_color must be the next
    // unused ones in sequence.
    void collect(int pos, int max_color, int from, Mask partial, int size, std::vector<Mask>& out)
    {
        if (size == t_) {
            out.push_back(partial);
            return;
        }
        const int prev = partial ? 64 - std::countl_zero(partial) : 0;
        for (int c = from; c <= k_ - (t_ - size - 1); ++c) {
            if (c > max_color && c != std::max(prev, max_color) + 1) break;
            const Mask next = partial | bit(c - 1);
            bool ok = true;
            for (const Constraint& con : constraints_[pos])
                if (std::popcount(next & labels_[con.position]) > con.cap) {
                    ok = false;
                    break;
                }
            if (ok) collect(pos, max_color, c + 1, next, size + 1, out);
        }
    }

    const Graph& g_;
    int t_;
    int k_;
    SearchBudget budget_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Constraint>> constraints_;
    std::vector<Mask> labels_;
    std::vector<std::vector<Mask>> candidates_;
    std::uint64_t nodes_ = 0;
};

void assert_valid(const Graph& g, const ToneColoring& coloring)
{
    if (auto bad = verify(g, coloring))
        throw std::logic_error("exact solver produced an invalid coloring at (" +
                               std::to_string(bad->u) + ", " + std::to_string(bad->v) + ")");
}

// Palette used when every vertex, in the solver's order, takes its first
// candidate label out of t * n colors.
int first_fit_palette(const Graph& g, int t)
{
    const int cap = t * std::max(g.n(), 1);
    if (cap > 64) return cap;
    ToneSearch search(g, t, cap, SearchBudget::unlimited());
    search.run();
    return search.coloring().colors_used();
}

}  // namespace

std::vector<Vertex> max_independent_set(const Graph& g, SearchBudget budget)
{
    if (g.n() == 0) return {};
    MisSearch search(adjacency_masks(g), budget);
    return mask_to_set(search.solve(all_vertices(g.n())));
}

int independence_number(const Graph& g, SearchBudget budget)
{
    return static_cast<int>(max_independent_set(g, budget).size());
}

int clique_number(const Graph& g, SearchBudget budget)
{
    if (g.n() == 0) return 0;
    auto adj = adjacency_masks(g);
    const Mask all = all_vertices(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = ~adj[v] & all & ~bit(v);
    MisSearch search(std::move(adj), budget);
    return std::popcount(search.solve(all));
}

int exact_chromatic(const Graph& g, SearchBudget budget)
{
    if (g.n() == 0) return 0;
    const auto adj = adjacency_masks(g);
    const int upper = dsatur_upper_bound(adj);
    int lower = 1;
    try {
        lower = clique_number(g, budget);
    } catch (const BudgetExhausted& e) {
        throw BudgetExhausted("chromatic search exceeded its node budget", {},
                              std::max(1, static_cast<int>(e.best.size())), upper);
    }
    std::uint64_t nodes = 0;
    KColoring search(adj, budget, nodes);
    for (int k = lower; k < upper; ++k) {
        try {
            if (search.colorable(k)) return k;
        } catch (const BudgetExhausted&) {
            throw BudgetExhausted("chromatic search exceeded its node budget", {}, k, upper);
        }
    }
    return upper;
}

ToneSearchResult t_tone_colorable(const Graph& g, int t, int k, SearchBudget budget)
{
    if (t < 1) throw DomainError("tone must be at least 1");
    if (k < t) throw DomainError("palette smaller than the tone");
    if (k > 64) throw DomainError("tone search handles palettes up to 64 colors");
    if (g.n() > 64) throw DomainError("tone search handles at most 64 vertices");
    ToneSearch search(g, t, k, budget);
    if (!search.run()) return Infeasible{search.nodes()};
    ToneColoring coloring = search.coloring();
    assert_valid(g, coloring);
    return coloring;
}

TauResult exact_tau(const Graph& g, int t, SearchBudget budget)
{
    if (t < 1) throw DomainError("tone must be at least 1");
    TauResult result;
    if (g.n() == 0) {
        result.witness = ToneColoring(0, t, t);
        result.tau = result.lower_bound = t;
        return result;
    }
    const int upper = first_fit_palette(g, t);
    int alpha = g.n();
    int omega = 1;
    try {
        alpha = independence_number(g, budget);
        omega = clique_number(g, budget);
    } catch (const BudgetExhausted& e) {
        const int clique = alpha == g.n() ? 1 : std::max(1, static_cast<int>(e.best.size()));
        throw BudgetExhausted("tau search exceeded its node budget", {},
                              static_cast<int>(std::max<std::int64_t>(
                                  std::int64_t{t} * clique, tone_lower_bound(g.n(), t, alpha))),
                              upper);
    }
    result.lower_bound = static_cast<int>(
        std::max<std::int64_t>(std::int64_t{t} * omega, tone_lower_bound(g.n(), t, alpha)));
    for (int k = result.lower_bound; k <= std::min(upper, 64); ++k) {
        std::optional<ToneSearchResult> r;
        try {
            r = t_tone_colorable(g, t, k, budget);
        } catch (const BudgetExhausted&) {
            throw BudgetExhausted("tau search exceeded its node budget", {}, k, upper);
        }
        if (auto* coloring = std::get_if<ToneColoring>(&*r)) {
            result.tau = k;
            result.witness = std::move(*coloring);
            return result;
        }
    }
    throw DomainError("tau exceeds the 64-color search limit");
}

}  // namespace tonelab

#pragma once

#include "tonelab/error.hpp"
#include "tonelab/graph.hpp"
#include "tonelab/tone.hpp"

#include <cstdint>
#include <limits>
#include <variant>
#include <vector>

// Exhaustive solvers for small instances. They are the reference values the
// constructive colorers are checked against, so every search either proves
// its answer or reports that it ran out of budget; it never guesses.
//
// Size limits: vertex sets and palettes are held in 64-bit masks, so graphs
// have at most 64 vertices and tone searches at most 64 colors. In practice
// the tone search is meant for n up to about 25.

namespace tonelab {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    bool deterministic = true;

    static SearchBudget unlimited() { return {}; }
    static SearchBudget nodes(std::uint64_t cap) { return {cap, true}; }
};

/// The search hit SearchBudget::max_nodes before finishing. `best` holds
/// the best witness found (for independent sets) and [lower, upper] brackets
/// the optimum (for chromatic numbers).
class BudgetExhausted : public Error {
public:
    BudgetExhausted(const std::string& what, std::vector<Vertex> best, int lower, int upper)
        : Error(what), best(std::move(best)), lower(lower), upper(upper)
    {
    }

    std::vector<Vertex> best;
    int lower;
    int upper;
};

std::vector<Vertex> max_independent_set(const Graph& g, SearchBudget budget = {});

int independence_number(const Graph& g, SearchBudget budget = {});
int clique_number(const Graph& g, SearchBudget budget = {});

int exact_chromatic(const Graph& g, SearchBudget budget = {});

/// The whole space of labelings was exhausted without finding a valid one.
struct Infeasible {
    std::uint64_t nodes = 0;
};

using ToneSearchResult = std::variant<ToneColoring, Infeasible>;

/// Decides whether g has a t-tone coloring with palette [1, k]. Vertices are
/// labeled in descending-degree order (ties by id); the first vertex gets
/// {1..t} and colors enter in increasing order, which removes palette
/// permutations from the search. Throws BudgetExhausted when undecided.
ToneSearchResult t_tone_colorable(const Graph& g, int t, int k, SearchBudget budget = {});

struct TauResult {
    int tau = 0;
    int lower_bound = 0;  // where the scan started
    ToneColoring witness{0, 1, 0};
};

/// Least k for which t_tone_colorable succeeds, scanning upward from
/// max(t * omega, ceil(t n / alpha)). BudgetExhausted carries the bracket.
TauResult exact_tau(const Graph& g, int t, SearchBudget budget = {});

}  // namespace tonelab

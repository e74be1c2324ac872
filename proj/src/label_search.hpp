#pragma once

#include "tonelab/tone.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tonelab::detail {

// Finds the lexicographically least t-subset of [1, k] that shares at most
// cap_i colors with each registered label i. Colors are tried in increasing
// order and a branch is cut as soon as some cap is exceeded, since overlaps
// only grow as colors are added.
class LabelSearch {
public:
    LabelSearch(int t, int k) : t_(t) { set_palette(k); }

    void set_palette(int k)
    {
        k_ = k;
        if (static_cast<int>(by_color_.size()) < k + 1) by_color_.resize(static_cast<std::size_t>(k) + 1);
    }

    void clear()
    {
        for (Color c : touched_) by_color_[c].clear();
        touched_.clear();
        caps_.clear();
        counts_.clear();
        impossible_ = false;
    }

    // A cap below zero can never be met.
    void add(const Label& label, int cap)
    {
        const int id = static_cast<int>(caps_.size());
        caps_.push_back(cap);
        counts_.push_back(0);
        if (cap < 0) impossible_ = true;
        for (Color c : label.colors()) {
            if (c > k_) continue;
            if (by_color_[c].empty()) touched_.push_back(c);
            by_color_[c].push_back(id);
        }
    }

    std::optional<Label> least()
    {
        chosen_.clear();
        if (impossible_ || !descend(1)) return std::nullopt;
        for (Color c : chosen_) retract(c);
        return Label(chosen_);
    }

    // Number of valid labels; cost is proportional to the size of the
    // pruned search tree, so only call it for small C(k, t).
    std::int64_t count_allowed()
    {
        return impossible_ ? 0 : count(1, 0);
    }

private:
    bool admit(Color c)
    {
        for (int id : by_color_[c])
            if (counts_[id] + 1 > caps_[id]) return false;
        for (int id : by_color_[c]) ++counts_[id];
        return true;
    }

    void retract(Color c)
    {
        for (int id : by_color_[c]) --counts_[id];
    }

    bool descend(Color from)
    {
        const int depth = static_cast<int>(chosen_.size());
        if (depth == t_) return true;
        for (Color c = from; c <= k_ - (t_ - depth - 1); ++c) {
            if (!admit(c)) continue;
            chosen_.push_back(c);
            if (descend(c + 1)) return true;
            chosen_.pop_back();
            retract(c);
        }
        return false;
    }

    std::int64_t count(Color from, int depth)
    {
        if (depth == t_) return 1;
        std::int64_t total = 0;
        for (Color c = from; c <= k_ - (t_ - depth - 1); ++c) {
            if (!admit(c)) continue;
            total += count(c + 1, depth + 1);
            retract(c);
        }
        return total;
    }

    int t_;
    int k_ = 0;
    bool impossible_ = false;
    std::vector<std::vector<int>> by_color_;
    std::vector<Color> touched_;
    std::vector<int> caps_;
    std::vector<int> counts_;
    std::vector<Color> chosen_;
};

}  // namespace tonelab::detail

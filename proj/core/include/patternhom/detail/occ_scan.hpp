#pragma once

#include <span>
#include <utility>
#include <vector>

#include "patternhom/permutation.hpp"

namespace patternhom::detail {

// Matching a window against a fixed pattern reduces to one pass in the
// pattern's value order: inv[k] = 0-based position of value k+1 in tau.
struct PatternMatcher {
    int length = 0;
    std::vector<int> inv;
};

inline PatternMatcher make_matcher(const Permutation& tau) {
    PatternMatcher m;
    m.length = tau.size();
    m.inv.resize(static_cast<std::size_t>(tau.size()));
    for (int pos = 1; pos <= tau.size(); ++pos)
        m.inv[static_cast<std::size_t>(tau.at(pos)) - 1] = pos - 1;
    return m;
}

inline std::vector<PatternMatcher> make_matchers(const PatternSet& P) {
    std::vector<PatternMatcher> ms;
    ms.reserve(P.size());
    for (const auto& tau : P.patterns()) ms.push_back(make_matcher(tau));
    return ms;
}

inline bool matches_at(std::span<const int> word, int start0, const PatternMatcher& m) {
    int prev = word[static_cast<std::size_t>(start0 + m.inv[0])];
    for (std::size_t k = 1; k < m.inv.size(); ++k) {
        const int cur = word[static_cast<std::size_t>(start0 + m.inv[k])];
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}

inline long long count_occurrences(std::span<const int> word,
                                   const std::vector<PatternMatcher>& ms) {
    long long total = 0;
    const int n = static_cast<int>(word.size());
    for (const auto& m : ms)
        for (int s = 0; s + m.length <= n; ++s) total += matches_at(word, s, m);
    return total;
}

inline bool has_occurrence(std::span<const int> word, const std::vector<PatternMatcher>& ms) {
    const int n = static_cast<int>(word.size());
    for (const auto& m : ms)
        for (int s = 0; s + m.length <= n; ++s)
            if (matches_at(word, s, m)) return true;
    return false;
}

// All occurrences as 1-based inclusive windows (s, e), sorted by end position.
// In an antichain at most one occurrence ends at any given position.
inline std::vector<std::pair<int, int>> all_occurrences(std::span<const int> word,
                                                        const std::vector<PatternMatcher>& ms) {
    std::vector<std::pair<int, int>> occs;
    const int n = static_cast<int>(word.size());
    for (const auto& m : ms)
        for (int s = 0; s + m.length <= n; ++s)
            if (matches_at(word, s, m)) occs.emplace_back(s + 1, s + m.length);
    std::sort(occs.begin(), occs.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return occs;
}

}  // namespace patternhom::detail

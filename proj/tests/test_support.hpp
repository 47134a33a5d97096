#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "patternhom/bigint.hpp"
#include "patternhom/chains.hpp"
#include "patternhom/oracle.hpp"
#include "patternhom/permutation.hpp"

namespace patternhom::testing {

inline Permutation perm(const char* text) { return Permutation::parse(text); }
inline PatternSet pats(const char* text) { return PatternSet::parse(text); }

// The cross-validation catalog: {12}, {123}, {132}, {132,231}, the seven
// length-4 class representatives, and {23154}.
inline std::vector<const char*> catalog() {
    return {"12",   "123",  "132",  "132;231", "1234", "2413",
            "2143", "1324", "1423", "1342",    "1243", "23154"};
}

// Representatives and members of the seven single-pattern length-4
// equivalence classes (class VII's fourth member is 4312, the
// reverse-complement of 1243).
inline std::vector<std::pair<const char*, std::vector<const char*>>> length4_classes() {
    return {
        {"I", {"1234", "4321"}},
        {"II", {"2413", "3142"}},
        {"III", {"2143", "3412"}},
        {"IV", {"1324", "4231"}},
        {"V", {"1423", "3241", "4132", "2314"}},
        {"VI", {"1342", "2431", "4213", "3124", "1432", "2341", "4123", "3214"}},
        {"VII", {"1243", "3421", "4312", "2134"}},
    };
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    if (n == 0) {
        fn(Permutation());
        return;
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation::from_word(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

// Chain counts by scanning S_n with the factorization search; the simple
// fallback the frontier DP must agree with.
inline std::map<std::pair<int, int>, BigInt> scan_chain_counts(const PatternSet& P, int n_max) {
    std::map<std::pair<int, int>, BigInt> counts;
    for (int n = 2; n <= n_max; ++n)
        for_each_permutation(n, [&](const Permutation& sigma) {
            if (auto c = is_chain(sigma, P)) counts[{n, c->q}] += 1;
        });
    return counts;
}

// Cluster marking counts by scanning S_n.
inline std::map<std::pair<int, int>, BigInt> scan_cluster_counts(const PatternSet& P, int n_max) {
    std::map<std::pair<int, int>, BigInt> counts;
    for (int n = 2; n <= n_max; ++n)
        for_each_permutation(n, [&](const Permutation& sigma) {
            for (const auto& [q, c] : cluster_markings(sigma, P)) counts[{n, q}] += c;
        });
    return counts;
}

}  // namespace patternhom::testing

#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patternhom {

// Raised on malformed pattern text, non-bijective words, broken antichains, etc.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A permutation in one-line notation: a word over 1..n in which every value
// appears exactly once. Positions are 1-based in all interfaces; the empty
// permutation (n = 0) is valid.
class Permutation {
public:
    Permutation() = default;

    // Validates the bijection invariant.
    static Permutation from_word(std::vector<int> word);

    static Permutation identity(int n);

    // "1324" (digits, usable up to length 9) or "1,3,2,4" (any length).
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }

    // 1-based access.
    int at(int pos) const { return word_[static_cast<std::size_t>(pos) - 1]; }

    std::span<const int> word() const { return word_; }

    // Digit form when n <= 9, comma-separated otherwise.
    std::string str() const;

    Permutation reversed() const;
    Permutation complemented() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

// st(s): the unique permutation order-isomorphic to a sequence of distinct
// values. Throws InvalidInput on duplicates.
Permutation standardize(std::span<const int> values);

// Start positions (1-based, ascending) of consecutive occurrences of tau in
// sigma: i is listed iff st(sigma_i .. sigma_{i+|tau|-1}) = tau.
std::vector<int> occurrences(const Permutation& sigma, const Permutation& tau);

// Prefix/suffix overlap lengths of a pattern: j is in `overlaps` iff the first
// j and last j entries are order-isomorphic. 1 is always present; the pattern
// has no self-overlaps iff overlaps == {1}.
struct OverlapProfile {
    Permutation pattern;
    std::vector<int> overlaps;

    bool self_overlap_free() const { return overlaps.size() == 1 && overlaps[0] == 1; }
};

// Requires |tau| >= 2.
OverlapProfile self_overlaps(const Permutation& tau);

// An antichain of forbidden patterns, each of length >= 2, grouped by length.
// Construction rejects sets in which one pattern occurs inside another; use
// antichain_reduce to normalize arbitrary input instead.
class PatternSet {
public:
    // Validates: lengths >= 2, distinct, antichain.
    static PatternSet from_patterns(std::vector<Permutation> patterns);

    // Semicolon-separated pattern list, e.g. "132;231".
    static PatternSet parse(std::string_view text);

    const std::vector<Permutation>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }
    bool empty() const { return patterns_.empty(); }

    int max_length() const;
    int min_length() const;
    // |P_k|: number of patterns of length k.
    int count_of_length(int k) const;

    bool contains(const Permutation& p) const;

    std::string str() const;

    PatternSet reversed() const;
    PatternSet complemented() const;

    friend bool operator==(const PatternSet&, const PatternSet&) = default;

private:
    std::vector<Permutation> patterns_;  // sorted by (length, word)
};

// Drops every pattern that contains another member as a consecutive pattern;
// the avoider set is unchanged. Requires all lengths >= 2.
PatternSet antichain_reduce(std::vector<Permutation> raw);

// Number of consecutive occurrences of patterns of P in sigma.
long long occurrence_count(const Permutation& sigma, const PatternSet& P);

inline bool avoids(const Permutation& sigma, const PatternSet& P) {
    return occurrence_count(sigma, P) == 0;
}

}  // namespace patternhom

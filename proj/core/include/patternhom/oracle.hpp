#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "patternhom/bigint.hpp"
#include "patternhom/permutation.hpp"

namespace patternhom {

// Exhaustive enumeration costs n! window scans; refuse beyond the ceiling
// instead of silently burning hours.
inline constexpr int kDefaultOracleGuard = 12;

class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    int guard = kDefaultOracleGuard;
    int threads = 1;  // S_n is partitioned by first entry when threads > 1
};

// Distribution of occurrence counts over S_n: counts[k] = number of
// permutations of length n with exactly k occurrences of patterns from P.
struct OccurrenceProfile {
    int n = 0;
    std::map<long long, BigInt> counts;

    BigInt total() const;
    BigInt avoiders() const;  // counts[0], 0 if absent
};

// Exact |{sigma in S_n : sigma avoids P}| by brute force; n = 0 gives 1.
BigInt count_avoiders(const PatternSet& P, int n, const OracleOptions& opts = {});

OccurrenceProfile occurrence_profile(const PatternSet& P, int n, const OracleOptions& opts = {});

struct WilfCheck {
    bool equivalent = false;
    std::optional<int> counterexample_n;  // smallest n with differing avoider counts
};

// Avoider counts agree for all n <= n_max?
WilfCheck wilf_equivalent(const PatternSet& P1, const PatternSet& P2, int n_max,
                          const OracleOptions& opts = {});

struct FullEquivalenceCheck {
    bool equivalent = false;
    std::optional<std::pair<int, long long>> counterexample;  // (n, k) of first difference
};

// Entire occurrence profiles agree for all n <= n_max?
FullEquivalenceCheck fully_equivalent(const PatternSet& P1, const PatternSet& P2, int n_max,
                                      const OracleOptions& opts = {});

}  // namespace patternhom

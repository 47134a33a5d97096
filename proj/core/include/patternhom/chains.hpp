#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "patternhom/bigint.hpp"
#include "patternhom/permutation.hpp"

namespace patternhom {

// A q-chain: a permutation built by linking q-1 forbidden patterns so that
// each consecutive tail pair carries exactly one occurrence, terminal and
// straddling the junction. Indexing follows C_1 = single elements, C_2 = the
// patterns themselves. For q >= 2 the breakpoints are {0, e_1, ..., e_{q-1}}
// where e_i is the end position of the i-th linked occurrence (e_{q-1} = n);
// the factorization is unique given the permutation.
struct Chain {
    Permutation perm;
    int q = 0;
    std::vector<int> breakpoints;
};

// Exact counts c_{n,q} of q-chains of length n, up to the truncation length.
// Trivial rows: c_{0,0} = 1, c_{1,1} = 1; for n >= 2 only q >= 2 occurs and
// c_{n,2} = |P_n|.
struct ChainTable {
    std::map<std::pair<int, int>, BigInt> counts;
    int n_max = 0;

    BigInt at(int n, int q) const;
};

// Exact counts cl_{n,q} of q-clusters: permutations with a marked sequence of
// q-1 pattern occurrences, starts strictly increasing, each occurrence
// overlapping the next, jointly covering the permutation. Same index
// convention as ChainTable (q - 1 = number of marked occurrences), so
// cl_{n,q} >= c_{n,q} pointwise and both feed the same inversion.
struct ClusterTable {
    std::map<std::pair<int, int>, BigInt> counts;
    int n_max = 0;

    BigInt at(int n, int q) const;
};

// Frontier dynamic programming over standardized tails: a state is the
// relative order of the active suffix plus the positions of its values inside
// the whole chain (tracked as gap counts); extensions append a standardized
// block and distribute the new values by binomial placement.
ChainTable enumerate_chains(const PatternSet& P, int n_max);
ClusterTable enumerate_clusters(const PatternSet& P, int n_max);

// Direct factorization search (the simple fallback the DP is tested against).
// Returns the unique chain structure, or nullopt when perm is not a chain.
std::optional<Chain> is_chain(const Permutation& perm, const PatternSet& P);

// All valid factorizations (any q). Lemma ChainsArePermutations says there is
// at most one; exposed so the uniqueness claim can be checked exhaustively.
std::vector<Chain> chain_factorizations(const Permutation& perm, const PatternSet& P);

// Number of cluster markings carried by one permutation, by q. Brute force;
// used for cross-checking enumerate_clusters on small lengths.
std::map<int, long long> cluster_markings(const Permutation& perm, const PatternSet& P);

// Explicit chain list for one length, by scanning S_n with is_chain. Intended
// for listings and tests; cost grows as n!, so the oracle-style ceiling
// applies (pass a larger guard deliberately to go beyond).
std::vector<Chain> list_chains(const PatternSet& P, int n, int guard = 12);

}  // namespace patternhom

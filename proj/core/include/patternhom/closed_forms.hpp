#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "patternhom/bigint.hpp"
#include "patternhom/chains.hpp"
#include "patternhom/egf.hpp"
#include "patternhom/permutation.hpp"

namespace patternhom {

// Chain counts indexed by the number of linked patterns l (= q - 1); the
// recurrences for single length-4 patterns and their relatives are naturally
// stated this way. Converts losslessly to the ChainTable convention.
struct LSeriesTable {
    std::map<std::pair<int, int>, BigInt> counts;  // (n, l), l >= 1, plus (1, 0) = 1
    int n_max = 0;

    BigInt at(int n, int l) const;
    ChainTable to_chain_table() const;  // q = l + 1
    Egf kernel() const;                 // 1 - t + sum (-1)^{l+1} c_{n,l} t^n / n!
};

// c_{n,l} = sum_k Catalan(k) c_{n-2k-1,l-k}: runs of two-element overlaps of
// 1324 are counted by standard Young tableaux of shape 2 x k.
LSeriesTable chains_1324(int n_max);

// Same skeleton with binomial(n-k-2, k) in place of Catalan(k).
LSeriesTable chains_1423(int n_max);

// Refined by the first entry p of the chain.
LSeriesTable chains_2143(int n_max);

// Refined by the first two entries (p, q) of the chain.
LSeriesTable chains_2413(int n_max);

// P = {132, 231}: chains are the up-down permutations, so c_{2l+1,l} is the
// tangent number E_{2l+1} and the kernel is the expansion of 1 - tanh t.
LSeriesTable chains_updown(int n_max);

// Chains of a single self-overlap-free pattern tau of length m+1: the counts
// f_k(p) of k-pattern chains with first entry p+1 depend only on m, tau(1),
// tau(m+1). A pattern with tau(1) > tau(m+1) is reduced by complementation.
LSeriesTable chains_nonoverlap_general(const Permutation& tau, int n_max);

// Kernel of {12...k}: +1 at n = 0 mod k, -1 at n = 1 mod k, else 0.
Egf kernel_monotone(int k, int n_max);

// Kernel of 12...a tau (a+1) of length m+1 (1 <= a < m): the (q+1)-chain
// count at n = qm+1 is prod_{j<=q} C(jm-a, m-a), signed so the pattern's own
// contribution is positive.
Egf kernel_nonoverlap_rise(int a, int m, int n_max);

// Euler zigzag numbers Z_0..Z_max via the boustrophedon recurrence; Z_n counts
// up-down permutations of length n, and the odd entries are the tangent
// numbers (Z_3 = 2, Z_5 = 16, Z_7 = 272, ...).
std::vector<BigInt> zigzag_numbers(int n_max);

// Closed-form dispatch for the CLI: resolves {1324}, {1423}, {2143}, {2413},
// {132,231}, {12...k}, and the recognized non-overlapping shapes to a kernel.
struct ClosedFormKernel {
    std::string method;  // which closed form matched
    Egf kernel;
};
std::optional<ClosedFormKernel> closed_form_kernel(const PatternSet& P, int n_max);

// Matches 12...a tau (a+1); returns (a, m) with m+1 the pattern length.
std::optional<std::pair<int, int>> match_rise_sandwich(const Permutation& p);

}  // namespace patternhom

#include "patternhom/closed_forms.hpp"

#include <algorithm>
#include <tuple>

namespace patternhom {

namespace {

const BigInt kZero = 0;

BigInt catalan(const BinomialTable& binom, int k) {
    return binom(2 * k, k) / (k + 1);
}

}  // namespace

BigInt LSeriesTable::at(int n, int l) const {
    auto it = counts.find({n, l});
    return it == counts.end() ? kZero : it->second;
}

ChainTable LSeriesTable::to_chain_table() const {
    ChainTable t;
    t.n_max = n_max;
    t.counts[{0, 0}] = 1;
    if (n_max >= 1) t.counts[{1, 1}] = 1;
    for (const auto& [nl, v] : counts) {
        const auto& [n, l] = nl;
        if (l >= 1) t.counts[{n, l + 1}] += v;
    }
    return t;
}

Egf LSeriesTable::kernel() const {
    return kernel_from_chains(to_chain_table());
}

LSeriesTable chains_1324(int n_max) {
    LSeriesTable t;
    t.n_max = n_max;
    BinomialTable binom(std::max(0, n_max));
    if (n_max >= 1) t.counts[{1, 0}] = 1;
    for (int n = 4; n <= n_max; ++n)
        for (int l = 1; l <= n; ++l) {
            BigInt acc = 0;
            for (int k = 1; 2 * k + 2 <= n; ++k) acc += catalan(binom, k) * t.at(n - 2 * k - 1, l - k);
            if (acc != 0) t.counts[{n, l}] = acc;
        }
    return t;
}

LSeriesTable chains_1423(int n_max) {
    LSeriesTable t;
    t.n_max = n_max;
    BinomialTable binom(std::max(0, n_max));
    if (n_max >= 1) t.counts[{1, 0}] = 1;
    for (int n = 4; n <= n_max; ++n)
        for (int l = 1; l <= n; ++l) {
            BigInt acc = 0;
            for (int k = 1; 2 * k + 2 <= n; ++k) acc += binom(n - k - 2, k) * t.at(n - 2 * k - 1, l - k);
            if (acc != 0) t.counts[{n, l}] = acc;
        }
    return t;
}

LSeriesTable chains_2143(int n_max) {
    // refined counts c_{n,l}(p), p = first entry of the chain
    std::map<std::tuple<int, int, int>, BigInt> c;
    BinomialTable binom(std::max(0, n_max));
    c[{1, 0, 1}] = 1;
    auto ref = [&](int n, int l, int p) -> BigInt {
        auto it = c.find({n, l, p});
        return it == c.end() ? kZero : it->second;
    };
    for (int n = 4; n <= n_max; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p = 2; p < n; ++p) {
                BigInt acc = 0;
                // leading block of k two-element overlaps, then a one-element
                // link; q is the value of the shared entry a_{2k+2}
                for (int k = 1; 2 * k + 2 <= n; ++k)
                    for (int q = 2 * k + 1; q <= n - 1; ++q) {
                        const BigInt sub = ref(n - 2 * k - 1, l - k, q - 2 * k);
                        if (sub != 0) acc += binom(q - p - 1, 2 * k - 2) * (p - 1) * (n - q) * sub;
                    }
                if (acc != 0) c[{n, l, p}] = acc;
            }
    LSeriesTable t;
    t.n_max = n_max;
    if (n_max >= 1) t.counts[{1, 0}] = 1;
    for (const auto& [key, v] : c) {
        const auto& [n, l, p] = key;
        if (l >= 1) t.counts[{n, l}] += v;
    }
    return t;
}

LSeriesTable chains_2413(int n_max) {
    // refined counts c_{n,l}(p,q), (p, q) = first two entries of the chain
    std::map<std::tuple<int, int, int, int>, BigInt> c;
    if (n_max >= 4) c[{4, 1, 2, 4}] = 1;
    auto ref = [&](int n, int l, int p, int q) -> BigInt {
        auto it = c.find({n, l, p, q});
        return it == c.end() ? kZero : it->second;
    };
    for (int n = 5; n <= n_max; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p = 1; p <= n; ++p)
                for (int q = p + 1; q <= n; ++q) {
                    BigInt acc = 0;
                    // two-element overlap with the next pattern: a_3 = r, a_4 = s
                    for (int r = 1; r < p; ++r)
                        for (int s = p + 1; s < q; ++s) acc += ref(n - 2, l - 1, r, s - 1);
                    // one-element overlap, next chain head (a_4, a_5) = (r, s):
                    // a_3 has p-1 choices; deleting a_1,a_2,a_3 lowers a_4 by
                    // two and a_5 by two or three depending on a_5 vs a_2
                    for (int r = p + 1; r < q; ++r) {
                        for (int s = r + 1; s < q; ++s)
                            acc += BigInt(p - 1) * ref(n - 3, l - 1, r - 2, s - 2);
                        for (int s = q + 1; s <= n; ++s)
                            acc += BigInt(p - 1) * ref(n - 3, l - 1, r - 2, s - 3);
                    }
                    if (acc != 0) c[{n, l, p, q}] = acc;
                }
    LSeriesTable t;
    t.n_max = n_max;
    if (n_max >= 1) t.counts[{1, 0}] = 1;
    for (const auto& [key, v] : c) {
        const auto& [n, l, p, q] = key;
        t.counts[{n, l}] += v;
    }
    return t;
}

std::vector<BigInt> zigzag_numbers(int n_max) {
    // boustrophedon transform of 1, 0, 0, ...
    std::vector<BigInt> z;
    z.reserve(static_cast<std::size_t>(n_max) + 1);
    std::vector<BigInt> row{1};
    z.push_back(1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
        next[0] = 0;
        for (int k = 1; k <= n; ++k)
            next[static_cast<std::size_t>(k)] =
                next[static_cast<std::size_t>(k) - 1] + row[static_cast<std::size_t>(n - k)];
        z.push_back(next.back());
        row = std::move(next);
    }
    return z;
}

LSeriesTable chains_updown(int n_max) {
    LSeriesTable t;
    t.n_max = n_max;
    if (n_max >= 1) t.counts[{1, 0}] = 1;
    const auto z = zigzag_numbers(n_max);
    for (int l = 1; 2 * l + 1 <= n_max; ++l) t.counts[{2 * l + 1, l}] = z[static_cast<std::size_t>(2 * l + 1)];
    return t;
}

LSeriesTable chains_nonoverlap_general(const Permutation& tau_in, int n_max) {
    if (!self_overlaps(tau_in).self_overlap_free())
        throw InvalidInput("pattern '" + tau_in.str() + "' has self-overlaps");
    // counts depend only on m and the first/last entries; reduce to a < b
    Permutation tau = tau_in;
    if (tau.at(1) > tau.at(tau.size())) tau = tau.complemented();
    const int m = tau.size() - 1;
    const int a = tau.at(1) - 1;
    const int b = tau.at(tau.size()) - 1;
    BinomialTable binom(std::max(1, n_max));

    LSeriesTable t;
    t.n_max = n_max;
    if (n_max >= 1) t.counts[{1, 0}] = 1;
    // f_k(p): k-pattern chains (length km+1) with first entry p+1
    std::map<int, BigInt> f{{0, 1}};
    for (int k = 1; k * m + 1 <= n_max; ++k) {
        std::map<int, BigInt> next;
        BigInt total = 0;
        for (int p = 0; p <= k * m; ++p) {
            BigInt acc = 0;
            for (const auto& [p_prev, cnt] : f) {
                const int q = p_prev + b;
                acc += binom(p, a) * binom(k * m - q, m - b) * binom(q - p - 1, b - a - 1) * cnt;
            }
            if (acc != 0) {
                next[p] = acc;
                total += acc;
            }
        }
        if (total != 0) t.counts[{k * m + 1, k}] = total;
        f = std::move(next);
    }
    return t;
}

Egf kernel_monotone(int k, int n_max) {
    if (k < 2) throw InvalidInput("monotone pattern length must be >= 2");
    Egf e = Egf::zero(n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (n % k == 0)
            e[n] = 1;
        else if (n % k == 1)
            e[n] = -1;
    }
    return e;
}

Egf kernel_nonoverlap_rise(int a, int m, int n_max) {
    if (a < 1 || a >= m) throw InvalidInput("kernel_nonoverlap_rise requires 1 <= a < m");
    BinomialTable binom(std::max(1, n_max));
    Egf e = Egf::zero(n_max);
    e[0] = 1;
    if (n_max >= 1) e[1] = -1;
    BigInt prod = 1;
    for (int q = 1; q * m + 1 <= n_max; ++q) {
        prod *= binom(q * m - a, m - a);
        e[q * m + 1] = (q % 2 == 1) ? prod : -prod;  // sign (-1)^{q+1}
    }
    return e;
}

std::optional<std::pair<int, int>> match_rise_sandwich(const Permutation& p) {
    const int len = p.size();
    if (len < 3) return std::nullopt;
    const int m = len - 1;
    // leading run 1, 2, ..., a followed by a permutation of a+2..m+1, with
    // a+1 as the final entry
    int a = 0;
    while (a + 1 <= len && p.at(a + 1) == a + 1) ++a;
    if (a < 1 || a >= m) return std::nullopt;
    if (p.at(len) != a + 1) return std::nullopt;
    for (int pos = a + 1; pos < len; ++pos)
        if (p.at(pos) <= a + 1) return std::nullopt;
    return std::make_pair(a, m);
}

std::optional<ClosedFormKernel> closed_form_kernel(const PatternSet& P, int n_max) {
    const auto& pats = P.patterns();
    if (pats.size() == 2 && pats[0] == Permutation::parse("132") &&
        pats[1] == Permutation::parse("231"))
        return ClosedFormKernel{"closed-form:updown-tangent", chains_updown(n_max).kernel()};
    if (pats.size() != 1) return std::nullopt;
    const Permutation& p = pats[0];
    if (p == Permutation::identity(p.size()))
        return ClosedFormKernel{"closed-form:monotone-rise", kernel_monotone(p.size(), n_max)};
    if (p == Permutation::parse("1324"))
        return ClosedFormKernel{"closed-form:1324-catalan", chains_1324(n_max).kernel()};
    if (p == Permutation::parse("1423"))
        return ClosedFormKernel{"closed-form:1423-shuffling", chains_1423(n_max).kernel()};
    if (p == Permutation::parse("2143"))
        return ClosedFormKernel{"closed-form:2143-refined", chains_2143(n_max).kernel()};
    if (p == Permutation::parse("2413"))
        return ClosedFormKernel{"closed-form:2413-refined", chains_2413(n_max).kernel()};
    if (auto am = match_rise_sandwich(p))
        return ClosedFormKernel{"closed-form:nonoverlap-rise",
                                kernel_nonoverlap_rise(am->first, am->second, n_max)};
    if (self_overlaps(p).self_overlap_free())
        return ClosedFormKernel{"closed-form:nonoverlap-general",
                                chains_nonoverlap_general(p, n_max).kernel()};
    return std::nullopt;
}

}  // namespace patternhom

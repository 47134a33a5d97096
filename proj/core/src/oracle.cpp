#include "patternhom/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "patternhom/detail/occ_scan.hpp"

namespace patternhom {

namespace {

void check_guard(int n, const OracleOptions& opts) {
    if (n > opts.guard)
        throw GuardError("oracle refuses n = " + std::to_string(n) + " (guard " +
                         std::to_string(opts.guard) + "; raise the ceiling explicitly to override)");
    if (n < 0) throw InvalidInput("negative length");
}

// Applies fn to every permutation of 1..n whose first entry is `first`
// (remaining entries run in lexicographic order).
template <typename Fn>
void for_each_with_first(int n, int first, Fn&& fn) {
    std::vector<int> word(static_cast<std::size_t>(n));
    word[0] = first;
    int next = 1;
    for (int v = 1; v <= n; ++v)
        if (v != first) word[static_cast<std::size_t>(next++)] = v;
    do {
        fn(std::span<const int>(word));
    } while (std::next_permutation(word.begin() + 1, word.end()));
}

// Shared skeleton of the exhaustive scans: per-first-entry partial results,
// combined by addition. `Partial` must be default-constructible.
template <typename Partial, typename PerPerm, typename Merge>
Partial scan_sn(int n, int threads, PerPerm per_perm, Merge merge) {
    Partial total{};
    if (n == 0) return total;
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int first = 1; first <= n; ++first)
            for_each_with_first(n, first, [&](std::span<const int> w) { per_perm(total, w); });
        return total;
    }
    std::vector<Partial> partials(static_cast<std::size_t>(n));
    std::vector<std::thread> pool;
    std::atomic<int> cursor{1};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int first = cursor.fetch_add(1); first <= n; first = cursor.fetch_add(1))
                for_each_with_first(n, first, [&](std::span<const int> w) {
                    per_perm(partials[static_cast<std::size_t>(first) - 1], w);
                });
        });
    for (auto& th : pool) th.join();
    for (auto& p : partials) merge(total, p);
    return total;
}

}  // namespace

BigInt OccurrenceProfile::total() const {
    BigInt t = 0;
    for (const auto& [k, v] : counts) t += v;
    return t;
}

BigInt OccurrenceProfile::avoiders() const {
    auto it = counts.find(0);
    return it == counts.end() ? BigInt(0) : it->second;
}

BigInt count_avoiders(const PatternSet& P, int n, const OracleOptions& opts) {
    check_guard(n, opts);
    if (n == 0) return 1;
    if (n < P.min_length() || P.empty()) return factorial(n);
    const auto matchers = detail::make_matchers(P);
    auto result = scan_sn<unsigned long long>(
        n, opts.threads,
        [&](unsigned long long& acc, std::span<const int> w) {
            acc += !detail::has_occurrence(w, matchers);
        },
        [](unsigned long long& acc, const unsigned long long& part) { acc += part; });
    return BigInt(result);
}

OccurrenceProfile occurrence_profile(const PatternSet& P, int n, const OracleOptions& opts) {
    check_guard(n, opts);
    OccurrenceProfile prof;
    prof.n = n;
    if (n == 0) {
        prof.counts[0] = 1;
        return prof;
    }
    const auto matchers = detail::make_matchers(P);
    using Histogram = std::map<long long, unsigned long long>;
    auto result = scan_sn<Histogram>(
        n, opts.threads,
        [&](Histogram& acc, std::span<const int> w) {
            ++acc[detail::count_occurrences(w, matchers)];
        },
        [](Histogram& acc, const Histogram& part) {
            for (const auto& [k, v] : part) acc[k] += v;
        });
    for (const auto& [k, v] : result) prof.counts[k] = BigInt(v);
    return prof;
}

WilfCheck wilf_equivalent(const PatternSet& P1, const PatternSet& P2, int n_max,
                          const OracleOptions& opts) {
    check_guard(n_max, opts);
    for (int n = 0; n <= n_max; ++n)
        if (count_avoiders(P1, n, opts) != count_avoiders(P2, n, opts))
            return {false, n};
    return {true, std::nullopt};
}

FullEquivalenceCheck fully_equivalent(const PatternSet& P1, const PatternSet& P2, int n_max,
                                      const OracleOptions& opts) {
    check_guard(n_max, opts);
    for (int n = 0; n <= n_max; ++n) {
        const auto a = occurrence_profile(P1, n, opts);
        const auto b = occurrence_profile(P2, n, opts);
        if (a.counts == b.counts) continue;
        // locate the smallest k whose counts differ (missing key = 0)
        std::set<long long> keys;
        for (const auto& [k, v] : a.counts) keys.insert(k);
        for (const auto& [k, v] : b.counts) keys.insert(k);
        long long bad_k = 0;
        for (long long k : keys) {
            auto ia = a.counts.find(k);
            auto ib = b.counts.find(k);
            const BigInt va = ia == a.counts.end() ? BigInt(0) : ia->second;
            const BigInt vb = ib == b.counts.end() ? BigInt(0) : ib->second;
            if (va != vb) {
                bad_k = k;
                break;
            }
        }
        return {false, std::make_pair(n, bad_k)};
    }
    return {true, std::nullopt};
}

}  // namespace patternhom

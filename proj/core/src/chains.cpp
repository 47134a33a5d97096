#include "patternhom/chains.hpp"

#include <algorithm>
#include <numeric>

#include "patternhom/detail/occ_scan.hpp"
#include "patternhom/oracle.hpp"

namespace patternhom {

namespace {

using detail::PatternMatcher;
using Window = std::pair<int, int>;  // 1-based inclusive (start, end)

// ---------------------------------------------------------------------------
// Factorization search (brute force).
//
// A q-chain with linked occurrences [s_i, e_i], i = 1..q-1, satisfies
// (with e_0 := 1):
//   * s_1 = 1, e_{q-1} = n;
//   * for i >= 2 the window [e_{i-2}+1, e_i] contains exactly one occurrence
//     of a pattern from P, namely [s_i, e_i], and s_i <= e_{i-1} (the
//     occurrence straddles the junction with the previous tail).
// ---------------------------------------------------------------------------

int occurrences_inside(const std::vector<Window>& occs, int lo, int hi) {
    int cnt = 0;
    for (const auto& [s, e] : occs) cnt += (s >= lo && e <= hi);
    return cnt;
}

void factorization_dfs(const std::vector<Window>& occs, int n, std::vector<Window>& seq,
                       std::vector<std::vector<Window>>& out) {
    if (seq.back().second == n) {
        out.push_back(seq);
        return;
    }
    const int e_prev = seq.back().second;
    const int e_prev2 = seq.size() >= 2 ? seq[seq.size() - 2].second : 1;
    for (const auto& [s, e] : occs) {
        if (e <= e_prev) continue;
        if (s < e_prev2 + 1 || s > e_prev) continue;
        if (occurrences_inside(occs, e_prev2 + 1, e) != 1) continue;
        seq.emplace_back(s, e);
        factorization_dfs(occs, n, seq, out);
        seq.pop_back();
    }
}

Chain chain_from_windows(const Permutation& perm, const std::vector<Window>& windows) {
    Chain c;
    c.perm = perm;
    c.q = static_cast<int>(windows.size()) + 1;
    c.breakpoints.push_back(0);
    for (const auto& [s, e] : windows) c.breakpoints.push_back(e);
    return c;
}

// ---------------------------------------------------------------------------
// Frontier DP.
//
// State: the standardized active suffix (the previous tail for chains, the
// last max_len-1 entries for clusters) plus, for each gap between consecutive
// suffix values, the number of chain values lying strictly inside it. The
// total length is recoverable as |suffix| + sum(gaps).
//
// A transition appends a block of ell fresh entries. Its legality depends only
// on rho, the relative order of suffix + block; the number of value
// realizations of a legal rho is the number of ways to interleave the fresh
// values with the untracked ones, enumerated gap by gap so that each leaf
// lands in a definite successor state.
// ---------------------------------------------------------------------------

using StateKey = std::vector<int>;  // [t, shape(t entries), gaps(t+1 entries)]
using Frontier = std::map<StateKey, BigInt>;

StateKey encode_state(const std::vector<int>& shape, const std::vector<int>& gaps) {
    StateKey key;
    key.reserve(1 + shape.size() + gaps.size());
    key.push_back(static_cast<int>(shape.size()));
    key.insert(key.end(), shape.begin(), shape.end());
    key.insert(key.end(), gaps.begin(), gaps.end());
    return key;
}

int state_length(const StateKey& key) {
    const int t = key[0];
    int len = t;
    for (std::size_t i = 1 + static_cast<std::size_t>(t); i < key.size(); ++i) len += key[i];
    return len;
}

struct Extension {
    int ell = 0;
    std::vector<std::uint8_t> is_new;    // by rho-value v (index v-1): appended entry?
    std::vector<std::uint8_t> retained;  // by rho-value: tracked after the step?
    std::vector<int> retained_shape;     // standardized tracked window after the step
};

std::vector<int> shape_of(std::span<const int> word) {
    auto p = standardize(word);
    return {p.word().begin(), p.word().end()};
}

class ExtensionCache {
public:
    ExtensionCache(const PatternSet& P, bool cluster_mode)
        : matchers_(detail::make_matchers(P)),
          max_len_(P.max_length()),
          cluster_(cluster_mode) {}

    const std::vector<Extension>& get(const std::vector<int>& shape, int ell) {
        auto key = std::make_pair(shape, ell);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto& slot = cache_[std::move(key)];
        build(shape, ell, slot);
        return slot;
    }

private:
    std::vector<PatternMatcher> matchers_;
    int max_len_;
    bool cluster_;
    std::map<std::pair<std::vector<int>, int>, std::vector<Extension>> cache_;

    bool chain_valid(const std::vector<int>& rho, int t) const {
        const int W = static_cast<int>(rho.size());
        int count = 0;
        bool terminal_ok = false;
        for (const auto& m : matchers_) {
            for (int s = 0; s + m.length <= W; ++s) {
                if (!detail::matches_at(rho, s, m)) continue;
                ++count;
                if (count > 1) return false;
                terminal_ok = (s + m.length == W) && (s <= t - 1);
            }
        }
        return count == 1 && terminal_ok;
    }

    bool cluster_valid(const std::vector<int>& rho, int ell) const {
        const int W = static_cast<int>(rho.size());
        for (const auto& m : matchers_) {
            if (m.length <= ell || m.length > W) continue;
            if (detail::matches_at(rho, W - m.length, m)) return true;
        }
        return false;
    }

    void build(const std::vector<int>& shape, int ell, std::vector<Extension>& out) {
        const int t = static_cast<int>(shape.size());
        const int W = t + ell;
        // prefix value choice: combination mask over 1..W with t ones
        std::vector<int> chosen(static_cast<std::size_t>(t));
        std::vector<std::uint8_t> picked(static_cast<std::size_t>(W) + 1, 0);
        std::vector<int> comb(static_cast<std::size_t>(t));
        std::iota(comb.begin(), comb.end(), 1);  // smallest combination
        std::vector<int> rho(static_cast<std::size_t>(W));
        for (;;) {
            std::fill(picked.begin(), picked.end(), 0);
            for (int i = 0; i < t; ++i) {
                chosen[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i)];
                picked[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])] = 1;
            }
            for (int i = 0; i < t; ++i)
                rho[static_cast<std::size_t>(i)] =
                    chosen[static_cast<std::size_t>(shape[static_cast<std::size_t>(i)]) - 1];
            std::vector<int> rest;
            rest.reserve(static_cast<std::size_t>(ell));
            for (int v = 1; v <= W; ++v)
                if (!picked[static_cast<std::size_t>(v)]) rest.push_back(v);
            do {
                std::copy(rest.begin(), rest.end(), rho.begin() + t);
                const bool ok = cluster_ ? cluster_valid(rho, ell) : chain_valid(rho, t);
                if (ok) out.push_back(make_extension(rho, t, ell));
            } while (std::next_permutation(rest.begin(), rest.end()));
            // next combination of size t from 1..W
            int i = t - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == W - (t - 1 - i)) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
        }
    }

    Extension make_extension(const std::vector<int>& rho, int t, int ell) const {
        const int W = t + ell;
        Extension ext;
        ext.ell = ell;
        ext.is_new.assign(static_cast<std::size_t>(W), 0);
        for (int pos = t; pos < W; ++pos)
            ext.is_new[static_cast<std::size_t>(rho[static_cast<std::size_t>(pos)]) - 1] = 1;
        const int h_next = cluster_ ? std::min(W, max_len_ - 1) : ell;
        ext.retained.assign(static_cast<std::size_t>(W), 0);
        for (int pos = W - h_next; pos < W; ++pos)
            ext.retained[static_cast<std::size_t>(rho[static_cast<std::size_t>(pos)]) - 1] = 1;
        ext.retained_shape =
            shape_of(std::span<const int>(rho).subspan(static_cast<std::size_t>(W - h_next)));
        return ext;
    }
};

struct Expander {
    const std::vector<int>* gaps = nullptr;
    const Extension* ext = nullptr;
    const BigInt* cnt = nullptr;
    Frontier* next = nullptr;
    int W = 0;
    std::vector<int> dprime;

    // Walks rho-values in increasing order, distributing the untracked old
    // values (gap budgets) around the fresh entries; each leaf is one
    // successor state.
    void walk(int v, int g, int budget, int pending) {
        if (v > W) {
            dprime.push_back(pending + budget);
            (*next)[encode_state(ext->retained_shape, dprime)] += *cnt;
            dprime.pop_back();
            return;
        }
        const bool retained = ext->retained[static_cast<std::size_t>(v) - 1];
        if (!ext->is_new[static_cast<std::size_t>(v) - 1]) {
            // tracked old value: leftover budget of the gap below it sits before it
            const int flushed = pending + budget;
            const int g2 = g + 1;
            const int b2 = (*gaps)[static_cast<std::size_t>(g2)];
            if (retained) {
                dprime.push_back(flushed);
                walk(v + 1, g2, b2, 0);
                dprime.pop_back();
            } else {
                walk(v + 1, g2, b2, flushed + 1);
            }
        } else {
            for (int x = 0; x <= budget; ++x) {
                if (retained) {
                    dprime.push_back(pending + x);
                    walk(v + 1, g, budget - x, 0);
                    dprime.pop_back();
                } else {
                    walk(v + 1, g, budget - x, pending + x + 1);
                }
            }
        }
    }
};

// Gap counts of a tracked value subset within 1..n.
std::vector<int> gaps_of(std::vector<int> tracked, int n) {
    std::sort(tracked.begin(), tracked.end());
    std::vector<int> gaps(tracked.size() + 1, 0);
    int prev = 0;
    for (std::size_t i = 0; i < tracked.size(); ++i) {
        gaps[i] = tracked[i] - prev - 1;
        prev = tracked[i];
    }
    gaps[tracked.size()] = n - prev;
    return gaps;
}

template <typename Table>
void run_frontier(const PatternSet& P, int n_max, bool cluster_mode, Table& table) {
    const int M = P.max_length();
    ExtensionCache cache(P, cluster_mode);
    Frontier frontier;

    for (const auto& p : P.patterns()) {
        const int m = p.size();
        if (m > n_max) continue;
        const int h = cluster_mode ? std::min(m, M - 1) : m - 1;
        std::vector<int> tracked(p.word().end() - h, p.word().end());
        auto shape = shape_of(std::span<const int>(p.word()).subspan(static_cast<std::size_t>(m - h)));
        frontier[encode_state(shape, gaps_of(tracked, m))] += 1;
        table.counts[{m, 2}] += 1;
    }

    int q = 2;
    while (!frontier.empty()) {
        Frontier next;
        for (const auto& [key, cnt] : frontier) {
            const int t = key[0];
            const std::vector<int> shape(key.begin() + 1, key.begin() + 1 + t);
            const std::vector<int> gaps(key.begin() + 1 + t, key.end());
            const int L = state_length(key);
            for (int ell = 1; ell <= std::min(M - 1, n_max - L); ++ell) {
                for (const auto& ext : cache.get(shape, ell)) {
                    Expander ex;
                    ex.gaps = &gaps;
                    ex.ext = &ext;
                    ex.cnt = &cnt;
                    ex.next = &next;
                    ex.W = t + ell;
                    ex.walk(1, 0, gaps[0], 0);
                }
            }
        }
        ++q;
        for (const auto& [key, cnt] : next) table.counts[{state_length(key), q}] += cnt;
        frontier = std::move(next);
    }
}

template <typename Table>
Table enumerate_table(const PatternSet& P, int n_max, bool cluster_mode) {
    if (n_max < 0) throw InvalidInput("n_max must be nonnegative");
    Table table;
    table.n_max = n_max;
    table.counts[{0, 0}] = 1;
    if (n_max >= 1) table.counts[{1, 1}] = 1;
    if (n_max >= 2 && !P.empty()) run_frontier(P, n_max, cluster_mode, table);
    return table;
}

const BigInt& table_at(const std::map<std::pair<int, int>, BigInt>& counts, int n, int q) {
    static const BigInt zero = 0;
    auto it = counts.find({n, q});
    return it == counts.end() ? zero : it->second;
}

}  // namespace

BigInt ChainTable::at(int n, int q) const { return table_at(counts, n, q); }
BigInt ClusterTable::at(int n, int q) const { return table_at(counts, n, q); }

ChainTable enumerate_chains(const PatternSet& P, int n_max) {
    return enumerate_table<ChainTable>(P, n_max, false);
}

ClusterTable enumerate_clusters(const PatternSet& P, int n_max) {
    return enumerate_table<ClusterTable>(P, n_max, true);
}

std::vector<Chain> chain_factorizations(const Permutation& perm, const PatternSet& P) {
    const int n = perm.size();
    std::vector<Chain> out;
    if (n == 0) {
        out.push_back(Chain{perm, 0, {0}});
        return out;
    }
    if (n == 1) {
        out.push_back(Chain{perm, 1, {0, 1}});
        return out;
    }
    const auto occs = detail::all_occurrences(perm.word(), detail::make_matchers(P));
    std::vector<std::vector<Window>> found;
    for (const auto& [s, e] : occs) {
        if (s != 1) continue;
        std::vector<Window> seq{{s, e}};
        factorization_dfs(occs, n, seq, found);
    }
    out.reserve(found.size());
    for (const auto& seq : found) out.push_back(chain_from_windows(perm, seq));
    return out;
}

std::optional<Chain> is_chain(const Permutation& perm, const PatternSet& P) {
    auto all = chain_factorizations(perm, P);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::map<int, long long> cluster_markings(const Permutation& perm, const PatternSet& P) {
    const int n = perm.size();
    std::map<int, long long> by_q;
    if (n < 2) return by_q;
    const auto occs = detail::all_occurrences(perm.word(), detail::make_matchers(P));
    // DFS over marked sequences: starts strictly increase automatically (in an
    // antichain a later window cannot contain an earlier one), each mark must
    // overlap the previous, the last must end at n.
    auto dfs = [&](auto&& self, int s_last, int e_last, int marks) -> void {
        if (e_last == n) {
            ++by_q[marks + 1];
            return;
        }
        for (const auto& [s, e] : occs) {
            if (e <= e_last) continue;
            if (s <= s_last || s > e_last) continue;
            self(self, s, e, marks + 1);
        }
    };
    for (const auto& [s, e] : occs)
        if (s == 1) dfs(dfs, s, e, 1);
    return by_q;
}

std::vector<Chain> list_chains(const PatternSet& P, int n, int guard) {
    if (n > guard)
        throw GuardError("chain listing scans S_n; n = " + std::to_string(n) +
                         " exceeds the ceiling " + std::to_string(guard));
    std::vector<Chain> out;
    if (n == 0 || n == 1) {
        auto all = chain_factorizations(Permutation::identity(n), P);
        out.insert(out.end(), all.begin(), all.end());
        return out;
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        auto perm = Permutation::from_word(word);
        if (auto c = is_chain(perm, P)) out.push_back(std::move(*c));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace patternhom

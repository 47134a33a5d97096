#include "patternhom/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace patternhom {

Permutation Permutation::from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n) throw InvalidInput("permutation word must use each of 1.." +
                                               std::to_string(n) + " exactly once");
        if (seen[static_cast<std::size_t>(v)]++)
            throw InvalidInput("duplicate value " + std::to_string(v) + " in permutation word");
    }
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw InvalidInput("empty pattern text");

    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            std::string_view tok = trim(text.substr(pos, next == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : next - pos));
            if (tok.empty()) throw InvalidInput("empty entry in pattern text");
            int value = 0;
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw InvalidInput(std::string("malformed pattern entry '") + std::string(tok) + "'");
                value = value * 10 + (c - '0');
                if (value > 1'000'000) throw InvalidInput("pattern entry out of range");
            }
            word.push_back(value);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        // digit form; only usable for patterns of length <= 9
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                throw InvalidInput(std::string("malformed pattern text '") + std::string(text) + "'");
            word.push_back(c - '0');
        }
    }
    return from_word(std::move(word));
}

std::string Permutation::str() const {
    std::ostringstream out;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (!digits && i) out << ',';
        out << word_[i];
    }
    return out.str();
}

Permutation Permutation::reversed() const {
    std::vector<int> w(word_.rbegin(), word_.rend());
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

Permutation Permutation::complemented() const {
    const int n = size();
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) w[i] = n + 1 - word_[i];
    Permutation p;
    p.word_ = std::move(w);
    return p;
}

Permutation standardize(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)]; });
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int rank = 0; rank < n; ++rank) {
        if (rank > 0 && values[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] ==
                            values[static_cast<std::size_t>(order[static_cast<std::size_t>(rank) - 1])])
            throw InvalidInput("standardize requires pairwise distinct entries");
        word[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
    }
    return Permutation::from_word(std::move(word));
}

namespace {

// value_order[k] = position (0-based) of value k+1 in tau; a window w matches
// tau iff w read in this order is increasing.
std::vector<int> value_order(const Permutation& tau) {
    std::vector<int> inv(static_cast<std::size_t>(tau.size()));
    for (int pos = 1; pos <= tau.size(); ++pos)
        inv[static_cast<std::size_t>(tau.at(pos)) - 1] = pos - 1;
    return inv;
}

bool window_matches(std::span<const int> sigma, std::size_t start, std::span<const int> inv) {
    int prev = sigma[start + static_cast<std::size_t>(inv[0])];
    for (std::size_t k = 1; k < inv.size(); ++k) {
        const int cur = sigma[start + static_cast<std::size_t>(inv[k])];
        if (cur < prev) return false;
        prev = cur;
    }
    return true;
}

}  // namespace

std::vector<int> occurrences(const Permutation& sigma, const Permutation& tau) {
    std::vector<int> hits;
    const int n = sigma.size(), m = tau.size();
    if (m == 0 || m > n) {
        if (m == 0 && n >= 0) {
            // the empty pattern occurs at every position boundary; not used by
            // the library, but keep the convention |hits| = n+1 well-defined
            hits.resize(static_cast<std::size_t>(n) + 1);
            std::iota(hits.begin(), hits.end(), 1);
        }
        return hits;
    }
    const auto inv = value_order(tau);
    for (int s = 0; s + m <= n; ++s)
        if (window_matches(sigma.word(), static_cast<std::size_t>(s), inv)) hits.push_back(s + 1);
    return hits;
}

OverlapProfile self_overlaps(const Permutation& tau) {
    const int m = tau.size();
    if (m < 2) throw InvalidInput("self_overlaps requires a pattern of length >= 2");
    OverlapProfile prof{tau, {}};
    auto w = tau.word();
    for (int j = 1; j <= m - 1; ++j) {
        auto prefix = standardize(w.subspan(0, static_cast<std::size_t>(j)));
        auto suffix = standardize(w.subspan(static_cast<std::size_t>(m - j)));
        if (prefix == suffix) prof.overlaps.push_back(j);
    }
    return prof;
}

PatternSet PatternSet::from_patterns(std::vector<Permutation> patterns) {
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    for (const auto& p : patterns) {
        if (p.size() < 2)
            throw InvalidInput("forbidden patterns must have length >= 2 (got '" + p.str() + "')");
    }
    for (const auto& small : patterns)
        for (const auto& big : patterns)
            if (small.size() < big.size() && !occurrences(big, small).empty())
                throw InvalidInput("pattern set is not an antichain: '" + small.str() +
                                   "' occurs in '" + big.str() + "'");
    PatternSet set;
    set.patterns_ = std::move(patterns);
    return set;
}

PatternSet PatternSet::parse(std::string_view text) {
    std::vector<Permutation> pats;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        std::string_view tok = text.substr(pos, next == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : next - pos);
        pats.push_back(Permutation::parse(tok));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return from_patterns(std::move(pats));
}

int PatternSet::max_length() const {
    int m = 0;
    for (const auto& p : patterns_) m = std::max(m, p.size());
    return m;
}

int PatternSet::min_length() const {
    int m = 0;
    for (const auto& p : patterns_) m = (m == 0) ? p.size() : std::min(m, p.size());
    return m;
}

int PatternSet::count_of_length(int k) const {
    int c = 0;
    for (const auto& p : patterns_) c += (p.size() == k);
    return c;
}

bool PatternSet::contains(const Permutation& p) const {
    return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

std::string PatternSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        if (i) out += ';';
        out += patterns_[i].str();
    }
    return out;
}

PatternSet PatternSet::reversed() const {
    std::vector<Permutation> pats;
    pats.reserve(patterns_.size());
    for (const auto& p : patterns_) pats.push_back(p.reversed());
    return from_patterns(std::move(pats));
}

PatternSet PatternSet::complemented() const {
    std::vector<Permutation> pats;
    pats.reserve(patterns_.size());
    for (const auto& p : patterns_) pats.push_back(p.complemented());
    return from_patterns(std::move(pats));
}

PatternSet antichain_reduce(std::vector<Permutation> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const auto& p : raw)
        if (p.size() < 2)
            throw InvalidInput("forbidden patterns must have length >= 2 (got '" + p.str() + "')");
    std::vector<Permutation> kept;
    for (const auto& cand : raw) {
        bool minimal = true;
        for (const auto& other : raw) {
            if (other.size() < cand.size() && !occurrences(cand, other).empty()) {
                minimal = false;
                break;
            }
        }
        if (minimal) kept.push_back(cand);
    }
    return PatternSet::from_patterns(std::move(kept));
}

long long occurrence_count(const Permutation& sigma, const PatternSet& P) {
    long long total = 0;
    for (const auto& tau : P.patterns())
        total += static_cast<long long>(occurrences(sigma, tau).size());
    return total;
}

}  // namespace patternhom

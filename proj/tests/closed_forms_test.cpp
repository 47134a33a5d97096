#include <doctest.h>

#include "patternhom/closed_forms.hpp"
#include "patternhom/oracle.hpp"
#include "test_support.hpp"

using namespace patternhom;
using testing::for_each_permutation;
using testing::pats;
using testing::perm;

namespace {

void check_table_matches_generic(const LSeriesTable& table, const PatternSet& P, int n_max) {
    const ChainTable generic = enumerate_chains(P, n_max);
    const ChainTable converted = table.to_chain_table();
    for (int n = 0; n <= n_max; ++n)
        for (int q = 0; q <= n + 1; ++q) CHECK(converted.at(n, q) == generic.at(n, q));
}

}  // namespace

TEST_CASE("1324 recurrence") {
    const LSeriesTable t = chains_1324(10);
    CHECK(t.at(4, 1) == 1);
    CHECK(t.at(6, 2) == 2);
    CHECK(t.at(7, 2) == 1);
    check_table_matches_generic(t, pats("1324"), 9);
    const Egf g = invert(t.kernel());
    CHECK(g[6] == 632);
    CHECK(g[9] == 278204);
}

TEST_CASE("1423 recurrence") {
    const LSeriesTable t = chains_1423(10);
    CHECK(t.at(4, 1) == 1);
    check_table_matches_generic(t, pats("1423"), 9);
    const Egf g = invert(t.kernel());
    CHECK(g[7] == 4218);
    CHECK(g[9] == 276896);
}

TEST_CASE("2143 refined recurrence") {
    const LSeriesTable t = chains_2143(10);
    check_table_matches_generic(t, pats("2143"), 9);
    const Egf g = invert(t.kernel());
    CHECK(g[8] == 32301);
    CHECK(g[9] == 277962);
}

TEST_CASE("2413 refined recurrence") {
    const LSeriesTable t = chains_2413(10);
    check_table_matches_generic(t, pats("2413"), 9);
    const Egf g = invert(t.kernel());
    CHECK(g[7] == 4237);
    CHECK(g[9] == 279828);
}

TEST_CASE("up-down chains and tangent numbers") {
    const auto z = zigzag_numbers(9);
    CHECK(z[3] == 2);
    CHECK(z[5] == 16);
    CHECK(z[7] == 272);
    CHECK(z[9] == 7936);
    // confirm by brute-force up-down counts
    for (int n : {3, 5, 7}) {
        long long updown = 0;
        for_each_permutation(n, [&](const Permutation& sigma) {
            bool ok = true;
            for (int i = 1; i < n; ++i)
                if ((sigma.at(i) < sigma.at(i + 1)) != (i % 2 == 1)) ok = false;
            updown += ok;
        });
        CHECK(z[static_cast<std::size_t>(n)] == updown);
    }
    const LSeriesTable t = chains_updown(9);
    CHECK(t.at(3, 1) == 2);
    CHECK(t.at(5, 2) == 16);
    CHECK(t.at(7, 3) == 272);
    check_table_matches_generic(t, pats("132;231"), 8);
    // kernel = 1 - tanh t in the factorial normalization
    const Egf k = t.kernel();
    CHECK(k[3] == 2);
    CHECK(k[5] == -16);
    CHECK(k[7] == 272);
}

TEST_CASE("monotone-run kernel") {
    const Egf k3 = kernel_monotone(3, 7);
    const int expect[] = {1, -1, 0, 1, -1, 0, 1, -1};
    for (int n = 0; n <= 7; ++n) CHECK(k3[n] == expect[n]);
    const Egf k2 = kernel_monotone(2, 6);
    for (int n = 0; n <= 6; ++n) CHECK(k2[n] == (n % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(kernel_monotone(1, 5), InvalidInput);
    // inversion matches the oracle for {123}
    const Egf g = invert(kernel_monotone(3, 8));
    for (int n = 0; n <= 8; ++n) CHECK(g[n] == count_avoiders(pats("123"), n));
}

TEST_CASE("rise-sandwich kernel") {
    // pattern 132: a = 1, m = 2; chain counts are the double factorials 1, 3, 15
    const Egf k = kernel_nonoverlap_rise(1, 2, 8);
    CHECK(k[0] == 1);
    CHECK(k[1] == -1);
    CHECK(k[3] == 1);
    CHECK(k[5] == -3);
    CHECK(k[7] == 15);
    CHECK(k == kernel_from_chains(enumerate_chains(pats("132"), 8)));
    // pattern 1243: a = 2, m = 3; products 1, 4, 28 at lengths 4, 7, 10
    const Egf k1243 = kernel_nonoverlap_rise(2, 3, 10);
    CHECK(k1243[4] == 1);
    CHECK(k1243[7] == -4);
    CHECK(k1243[10] == 28);
    CHECK(k1243.truncated(9) == kernel_from_chains(enumerate_chains(pats("1243"), 9)));
    CHECK_THROWS_AS(kernel_nonoverlap_rise(2, 2, 6), InvalidInput);
    // class VI representative via the oracle
    const Egf g = invert(kernel_nonoverlap_rise(1, 3, 9));
    for (int n = 0; n <= 9; ++n) CHECK(g[n] == count_avoiders(pats("1342"), n, {.guard = 12, .threads = 4}));
}

TEST_CASE("general non-overlapping recurrence") {
    {
        const LSeriesTable t = chains_nonoverlap_general(perm("23154"), 10);
        const Egf g = invert(t.kernel());
        const long long expect[] = {1, 1, 2, 6, 24, 119, 708, 4914, 38976, 347776};
        for (int n = 0; n <= 9; ++n) CHECK(g[n] == expect[n]);
    }
    {
        // identical output for 21534 (same first/last entries)
        const Egf a = invert(chains_nonoverlap_general(perm("23154"), 10).kernel());
        const Egf b = invert(chains_nonoverlap_general(perm("21534"), 10).kernel());
        CHECK(a == b);
    }
    check_table_matches_generic(chains_nonoverlap_general(perm("1342"), 9), pats("1342"), 9);
    // a > b case reduces by complementation
    check_table_matches_generic(chains_nonoverlap_general(perm("231"), 9), pats("231"), 9);
    CHECK_THROWS_AS(chains_nonoverlap_general(perm("123"), 5), InvalidInput);
}

TEST_CASE("rise-sandwich recognition") {
    CHECK(match_rise_sandwich(perm("132")) == std::make_pair(1, 2));
    CHECK(match_rise_sandwich(perm("1243")) == std::make_pair(2, 3));
    CHECK(match_rise_sandwich(perm("1342")) == std::make_pair(1, 3));
    CHECK_FALSE(match_rise_sandwich(perm("123")).has_value());
    CHECK_FALSE(match_rise_sandwich(perm("2143")).has_value());
    CHECK_FALSE(match_rise_sandwich(perm("3124")).has_value());
}

TEST_CASE("closed-form dispatch") {
    for (const char* text : {"1324", "1423", "2143", "2413", "132;231", "123", "12", "132",
                             "1243", "3124", "23154"}) {
        const PatternSet P = pats(text);
        auto cf = closed_form_kernel(P, 8);
        REQUIRE_MESSAGE(cf.has_value(), text);
        const Egf expect = kernel_from_chains(enumerate_chains(P, 8));
        CHECK_MESSAGE(cf->kernel == expect, text);
    }
    CHECK_FALSE(closed_form_kernel(pats("123;132"), 6).has_value());
    CHECK_FALSE(closed_form_kernel(pats("13254"), 6).has_value());  // has self-overlaps
}

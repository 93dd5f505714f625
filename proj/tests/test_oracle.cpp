#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sdcap/bounds.hpp"
#include "sdcap/det_symmetric.hpp"
#include "sdcap/oracle.hpp"
#include "sdcap/translate.hpp"

using namespace sdcap;

TEST_CASE("integer exhaustive search on known symmetric instances") {
    CHECK(det_exhaustive({6, 6, 4, 4}).max_sum == 8);   // alpha = 2/3
    CHECK(det_exhaustive({4, 4, 3, 3}).max_sum == 4);   // alpha = 3/4, the dip
    CHECK(det_exhaustive({10, 10, 7, 7}).max_sum == 12);
    CHECK(det_exhaustive({9, 9, 0, 0}).max_sum == 18);  // no interference
    CHECK(det_exhaustive({7, 3, 0, 0}).max_sum == 10);
}

TEST_CASE("symmetric equivalence with the closed form, all levels up to 9") {
    for (int n11 = 1; n11 <= 9; ++n11) {
        for (int n12 = 0; n12 <= n11; ++n12) {
            const Fraction expect = Fraction(2 * n11) * symmetric_capacity(Fraction(n12, n11));
            REQUIRE(expect.den == 1);
            CHECK(det_exhaustive({n11, n11, n12, n12}).max_sum == expect.num);
        }
    }
}

TEST_CASE("message-capped search") {
    const IntChannel ch{10, 10, 7, 7};
    CHECK(det_exhaustive_capped(ch, 1, 10).max_sum == 10);
    CHECK(det_exhaustive_capped(ch, 10, 1).max_sum == 10);
    CHECK(det_exhaustive_capped(ch, 2, 2).max_sum == 12);
    CHECK(det_exhaustive_capped(ch, 10, 10).max_sum == det_exhaustive(ch).max_sum);
    const IntChannel ch6{10, 10, 6, 6};
    CHECK(det_exhaustive_capped(ch6, 1, 10).max_sum == 10);
    CHECK(det_exhaustive_capped(ch6, 2, 2).max_sum == 12);
    CHECK_THROWS_AS((void)det_exhaustive_capped(ch, 0, 1), std::domain_error);
}

TEST_CASE("argmax scheme is reported and feasible") {
    const auto r = det_exhaustive({10, 10, 7, 7});
    // the reported pattern reaches the maximum and respects all conflicts
    const int delta = 3; // both shifts are 3 levels here
    CHECK(std::popcount(r.best1) + std::popcount(r.best2) == r.max_sum);
    for (int i = 0; i < 10; ++i) {
        if (!(r.best1 >> i & 1)) continue;
        const bool hi_conflict = i + delta < 10 && (r.best2 >> (i + delta) & 1);
        const bool lo_conflict = i - delta >= 0 && (r.best2 >> (i - delta) & 1);
        CHECK_FALSE(hi_conflict);
        CHECK_FALSE(lo_conflict);
    }
}

TEST_CASE("hypothesis-restricted searches collapse to the single-user level") {
    // forcing a violation of the alternating structure caps the sum at n11
    for (auto [n11, n12] : {std::pair{10, 7}, std::pair{9, 5}, std::pair{12, 7}}) {
        const IntChannel ch{n11, n11, n12, n12};
        const int beta = n11 - n12;
        SUBCASE("even segment fully active") {
            DetOracleOptions o;
            o.require1 = ((1ull << beta) - 1) << beta; // s2
            CHECK(det_exhaustive(ch, o).max_sum <= n11);
        }
        SUBCASE("odd segment fully inactive") {
            DetOracleOptions o;
            o.forbid1 = (1ull << beta) - 1; // s1
            CHECK(det_exhaustive(ch, o).max_sum <= n11);
        }
    }
}

TEST_CASE("budget and worker behaviour") {
    DetOracleOptions small;
    small.budget = 1 << 8;
    CHECK_THROWS_AS((void)det_exhaustive({12, 12, 5, 5}, small), resource_error);
    DetOracleOptions par;
    par.workers = 4;
    const auto a = det_exhaustive({11, 9, 6, 5}, par);
    const auto b = det_exhaustive({11, 9, 6, 5});
    CHECK(a.max_sum == b.max_sum);
    CHECK(a.best1 == b.best1);
    CHECK(a.best2 == b.best2);
}

TEST_CASE("gaussian oracle with one message matches the baseline search") {
    GaussianChannel ch;
    ch.g12 = ch.g21 = 0.17;
    ch.p1bar = ch.p2bar = 1000.0;
    GaussOracleOptions o;
    o.grid_step_db = 0.1; // same grid as the baseline
    const auto r = gauss_exhaustive(ch, 1, 1, o);
    CHECK(r.best_sum == doctest::Approx(single_message_baseline(ch, 0.1).sum_bits).epsilon(1e-12));
}

TEST_CASE("gaussian oracle with two messages") {
    GaussianChannel ch;
    ch.g12 = ch.g21 = 0.17;
    ch.p1bar = ch.p2bar = 1000.0;
    GaussOracleOptions o;
    o.budget = 60'000'000;
    o.workers = 2;
    const auto r = gauss_exhaustive(ch, 2, 2, o);
    // near the split-sweep optimum, above the equalizing translation up to
    // grid slack, and below the combined upper bound
    CHECK(r.best_sum == doctest::Approx(10.2).epsilon(0.01));
    CHECK(r.best_sum >= translate_equalizing(ch).achieved_sum_bits - 0.02);
    CHECK(r.best_sum <= combined_bound(ch).combined_bits + 1e-9);
    // determinism across worker counts
    GaussOracleOptions o1 = o;
    o1.workers = 1;
    CHECK(gauss_exhaustive(ch, 2, 2, o1).best_sum == r.best_sum);
}

TEST_CASE("gaussian oracle budget guard") {
    GaussianChannel ch;
    ch.g12 = ch.g21 = 0.3;
    ch.p1bar = ch.p2bar = 100.0;
    GaussOracleOptions o;
    o.budget = 1000;
    CHECK_THROWS_AS((void)gauss_exhaustive(ch, 2, 2, o), resource_error);
    CHECK_THROWS_AS((void)gauss_exhaustive(ch, 0, 2), std::domain_error);
}

TEST_CASE("gaussian oracle with unequal message counts") {
    GaussianChannel ch;
    ch.g11 = 1.2;
    ch.g22 = 0.9;
    ch.g12 = 0.2;
    ch.g21 = 0.35;
    ch.p1bar = 300.0;
    ch.p2bar = 120.0;
    GaussOracleOptions o;
    o.grid_step_db = 1.0;
    const auto r = gauss_exhaustive(ch, 2, 1, o);
    CHECK(r.best_sum >= single_message_baseline(ch, 1.0).sum_bits - 1e-9);
    CHECK(r.best_sum <= combined_bound(ch).combined_bits + 1e-9);
    CHECK(r.best_scheme.powers1.size() == 2);
    CHECK(r.best_scheme.powers2.size() == 1);
}

TEST_CASE("oracle nails the translation across a coarse alpha grid") {
    // the gaussian search never falls behind the equalizing translation when
    // the translation itself uses at most two messages
    for (double alpha : {0.55, 0.6, 0.65}) {
        const auto ch = GaussianChannel::from_snr_alpha(20.0, alpha);
        const auto t = translate_equalizing(ch);
        REQUIRE(t.messages <= 2);
        GaussOracleOptions o;
        o.budget = 80'000'000;
        o.workers = 2;
        const auto r = gauss_exhaustive(ch, 2, 2, o);
        CHECK(r.best_sum >= t.achieved_sum_bits - 0.05);
    }
}

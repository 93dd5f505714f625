#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sdcap/gaussian.hpp"

using namespace sdcap;

namespace {

GaussianChannel worked_example() {
    GaussianChannel ch;
    ch.g11 = ch.g22 = 1.0;
    ch.g12 = ch.g21 = 0.17;
    ch.n1 = ch.n2 = 1.0;
    ch.p1bar = ch.p2bar = 1000.0;
    return ch;
}

HkPowerSplit random_split(std::mt19937& rng, const GaussianChannel& ch) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double c1 = u(rng), p1 = u(rng) * (1.0 - c1);
    const double c2 = u(rng), p2 = u(rng) * (1.0 - c2);
    return {c1 * ch.p1bar, p1 * ch.p1bar, c2 * ch.p2bar, p2 * ch.p2bar};
}

} // namespace

TEST_CASE("interference-free channels decouple") {
    GaussianChannel ch;
    ch.g12 = ch.g21 = 0.0;
    ch.p1bar = 100.0;
    ch.p2bar = 50.0;
    const double expect = log2p1(100.0) + log2p1(50.0);
    SdScheme s;
    s.powers1 = {100.0};
    s.powers2 = {50.0};
    s.order1 = {{1, 0}};
    s.order2 = {{2, 0}};
    CHECK(sd_rates(ch, s).sum == doctest::Approx(expect).epsilon(1e-12));
    CHECK(hk_region_sum(ch, {0.0, 100.0, 0.0, 50.0}) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(single_message_baseline(ch).sum_bits == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("worked two-message example at zero private power") {
    const auto ch = worked_example();
    const HkPowerSplit q{1000.0, 0.0, 1000.0, 0.0};
    // individual common-rate bounds: 2.78 at the own receiver, 7.42 cross
    CHECK(log2p1(1000.0 / (0.17 * 1000.0 + 1.0)) == doctest::Approx(2.78).epsilon(0.004));
    CHECK(log2p1(0.17 * 1000.0) == doctest::Approx(7.42).epsilon(0.004));
    CHECK(hk_region_sum(ch, q) == doctest::Approx(10.19).epsilon(0.001));
    CHECK(sd_two_message_sum(ch, q) == doctest::Approx(5.56).epsilon(0.002));
}

TEST_CASE("pure private split treats interference as noise") {
    const auto ch = worked_example();
    const HkPowerSplit q{0.0, 1000.0, 0.0, 1000.0};
    const double expect = 2.0 * log2p1(1000.0 / (0.17 * 1000.0 + 1.0));
    CHECK(hk_region_sum(ch, q) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(sd_two_message_sum(ch, q) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("the generic evaluator agrees with the closed-form two-message sum") {
    const auto ch = worked_example();
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto q = random_split(rng, ch);
        const auto sum = sd_rates(ch, two_message_scheme(q)).sum;
        CHECK(sum == doctest::Approx(sd_two_message_sum(ch, q)).epsilon(1e-9));
    }
}

TEST_CASE("successive decoding never beats joint decoding on the same split") {
    std::mt19937 rng(12);
    for (int t = 0; t < 200; ++t) {
        GaussianChannel ch;
        ch.g11 = 0.5 + (rng() % 1000) / 500.0;
        ch.g22 = 0.5 + (rng() % 1000) / 500.0;
        ch.g12 = (rng() % 1000) / 800.0;
        ch.g21 = (rng() % 1000) / 800.0;
        ch.p1bar = 1.0 + (rng() % 10000) / 10.0;
        ch.p2bar = 1.0 + (rng() % 10000) / 10.0;
        const auto q = random_split(rng, ch);
        CHECK(sd_two_message_sum(ch, q) <= hk_region_sum(ch, q) + 1e-9);
    }
}

TEST_CASE("rates are nonnegative and fall with undecoded foreign power") {
    const auto ch = worked_example();
    double prev = std::numeric_limits<double>::infinity();
    for (double q2p : {0.0, 10.0, 100.0, 500.0, 1000.0}) {
        const HkPowerSplit q{900.0, 100.0, 1000.0 - q2p, q2p};
        const auto r = sd_rates(ch, two_message_scheme(q));
        for (double v : r.rates1) CHECK(v >= 0.0);
        // user 1's private message sees q2p as permanent noise
        CHECK(r.rates1[1] <= prev + 1e-12);
        prev = r.rates1[1];
    }
}

TEST_CASE("scheme validation rejects malformed orders") {
    const auto ch = worked_example();
    SdScheme s = two_message_scheme({500, 500, 500, 500});
    SUBCASE("own message missing") {
        s.order1 = {{1, 0}, {2, 0}}; // own private never decoded
        CHECK_THROWS_AS((void)sd_rates(ch, s), std::invalid_argument);
    }
    SUBCASE("duplicate message") {
        s.order1 = {{1, 0}, {1, 0}, {1, 1}};
        CHECK_THROWS_AS((void)sd_rates(ch, s), std::invalid_argument);
    }
    SUBCASE("budget violation") {
        s.powers1 = {900.0, 200.0};
        CHECK_THROWS_AS((void)sd_rates(ch, s), std::invalid_argument);
    }
    SUBCASE("trailing foreign messages are noise by construction") {
        SdScheme t = two_message_scheme({500, 500, 500, 500});
        const double ref = sd_rates(ch, t).sum;
        t.order1.push_back({2, 1}); // foreign private after the last own message
        CHECK(sd_rates(ch, t).sum == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("single-message baseline") {
    SUBCASE("weak coupling: corner decode configuration wins slightly") {
        const auto ch = GaussianChannel::from_snr_alpha(30.0, 0.5);
        const auto b = single_message_baseline(ch);
        const double tin = 2.0 * log2p1(1000.0 / (ch.g21 * 1000.0 + 1.0));
        CHECK(b.sum_bits >= tin - 1e-12);
        CHECK(b.sum_bits == doctest::Approx(10.0121).epsilon(1e-4));
    }
    SUBCASE("equal gains: decode-and-subtract reaches the full sum") {
        const auto ch = GaussianChannel::from_snr_alpha(30.0, 1.0);
        const auto b = single_message_baseline(ch);
        CHECK(b.sum_bits == doctest::Approx(log2p1(2000.0)).epsilon(1e-9));
    }
    SUBCASE("search uses full power at the winning corner") {
        const auto b = single_message_baseline(worked_example());
        CHECK(b.p1 == doctest::Approx(1000.0));
        CHECK(b.p2 == doctest::Approx(1000.0));
    }
}

TEST_CASE("channel helpers") {
    const auto ch = GaussianChannel::from_snr_alpha(30.0, 0.75);
    CHECK(ch.snr1() == doctest::Approx(1000.0));
    CHECK(ch.inr1() == doctest::Approx(std::pow(1000.0, 0.75)).epsilon(1e-12));
    CHECK(ch.alpha() == doctest::Approx(0.75).epsilon(1e-12));
    GaussianChannel bad;
    bad.n1 = 0.0;
    CHECK_THROWS_AS(bad.check(), std::domain_error);
    HkPowerSplit q{-1.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(q.check(ch), std::domain_error);
}

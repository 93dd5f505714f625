#pragma once

#include <string>
#include <utility>

#include "sdcap/det_symmetric.hpp"

namespace sdcap {

// General (asymmetric) deterministic channels, normalized to n11 = 1 with
// n22 <= 1. Classification reduces every shift-sign pattern to one of six
// parameter settings; the capacity-achieving scheme is alternating segments
// for A1 and a single message per user everywhere else.
enum class AsymTag { A1, A2, B1, B2, B3, C };

inline const char* to_string(AsymTag t) {
    switch (t) {
        case AsymTag::A1: return "A1";
        case AsymTag::A2: return "A2";
        case AsymTag::B1: return "B1";
        case AsymTag::B2: return "B2";
        case AsymTag::B3: return "B3";
        case AsymTag::C: return "C";
    }
    return "?";
}

template <typename T>
struct AsymCase {
    AsymTag tag;
    bool shifts_swapped = false; // shifts replaced by (-delta2, -delta1)
    T n22{};                     // support of user 2 (unchanged by the swap)
    T n12{}, n21{};              // effective cross levels after swap + clamp
    T beta1{}, beta2{};          // segment lengths used by this case
};

namespace detail {

// Shifts larger than the supports never couple active levels; pulling them
// back to the boundary value leaves the complementarity conditions intact
// (the boundary overlap has measure zero).
template <typename T>
void clamp_shifts(T& d1, T& d2, const T& n22) {
    const T one = scalar_from_int<T>(1);
    if (one < d1) d1 = one;
    if (d1 < -n22) d1 = -n22;
    if (n22 < d2) d2 = n22;
    if (d2 < -one) d2 = -one;
}

} // namespace detail

// Reduce a normalized channel to its canonical case. Patterns outside the
// three canonical shift-sign settings are first mapped through the
// equivalent parameters (-delta2, -delta1), which induce identical
// complementarity conditions.
template <typename T>
AsymCase<T> classify(const DeterministicChannel<T>& ch) {
    const T zero = scalar_from_int<T>(0), one = scalar_from_int<T>(1);
    if (!(ch.n11 == one))
        throw std::domain_error("classify: channel must be normalized to n11 = 1");

    T d1 = ch.delta1();
    T d2 = ch.delta2();
    bool swapped = false;
    const bool neg1 = d1 < zero, neg2 = d2 < zero;
    if ((neg1 && neg2) ||                                // outside the canonical patterns
        (!neg1 && neg2 && abs_val(d1) < abs_val(d2)) ||  // case ii wants |d1| >= |d2|
        (neg1 && !neg2 && abs_val(d2) < abs_val(d1))) {  // case iii wants |d1| <= |d2|
        const auto [e1, e2] = equivalent_parameters(d1, d2);
        d1 = e1;
        d2 = e2;
        swapped = true;
    }
    detail::clamp_shifts(d1, d2, ch.n22);

    AsymCase<T> c;
    c.shifts_swapped = swapped;
    c.n22 = ch.n22;
    c.n12 = ch.n22 - d2;
    c.n21 = one - d1;

    if (!(d1 < zero) && !(d2 < zero)) {
        if (!(c.n22 < c.n21)) {
            c.tag = AsymTag::A1;
            c.beta1 = one - c.n12;
            c.beta2 = c.n22 - c.n21;
        } else {
            c.tag = AsymTag::A2;
            c.beta1 = d1 + d2; // = 1 - n12 - (n21 - n22)
        }
    } else if (!(d1 < zero)) { // d2 < 0
        if (c.n22 < c.n21) {
            c.tag = AsymTag::B3;
            c.beta1 = d1 + d2;
        } else if (one < c.n12) {
            c.tag = AsymTag::B1;
            c.beta1 = d1 + d2; // = n22 - n21 - (n12 - 1)
        } else {
            c.tag = AsymTag::B2;
            c.beta1 = one - c.n12;
            c.beta2 = c.n22 - c.n21;
        }
    } else { // d1 < 0, d2 >= 0
        c.tag = AsymTag::C;
        c.beta1 = d1 + d2;
    }
    return c;
}

namespace detail {

// Partition [lo, hi] into segments of alternating lengths (first, second,
// first, ...); the final segment carries the residual. Zero-length segments
// keep their parity slot so that "odd segments active" stays meaningful.
template <typename T>
std::vector<Interval<T>> alternating_walk(const T& lo, const T& hi, const T& first, const T& second) {
    std::vector<Interval<T>> segs;
    const T zero = scalar_from_int<T>(0);
    T a = lo;
    long long i = 0;
    while (a < hi) {
        const T len = (i % 2 == 0) ? first : second;
        T b = a + len;
        if (hi < b) b = hi;
        segs.push_back({a, b});
        a = b;
        ++i;
        if (i > 4'000'000) throw std::length_error("alternating_walk: too many segments");
        if (a < hi && !(zero < first) && !(zero < second))
            throw std::domain_error("alternating_walk: zero step");
    }
    return segs;
}

} // namespace detail

// Segment lists (s_k over I1, s'_k over I2) for the alternating cases; only
// A1 (and the structurally identical B2) uses them.
template <typename T>
std::pair<std::vector<Interval<T>>, std::vector<Interval<T>>>
asym_segments(const AsymCase<T>& c) {
    const T zero = scalar_from_int<T>(0), one = scalar_from_int<T>(1);
    if (!(zero < c.beta1) && !(zero < c.beta2))
        return {{{zero, one}}, {{one - c.n22, one}}};
    return {detail::alternating_walk(zero, one, c.beta1, c.beta2),
            detail::alternating_walk(one - c.n22, one, c.beta2, c.beta1)};
}

// Constrained sum-capacity achieving scheme and its sum-rate, both in the
// normalized (n11 = 1) coordinates.
template <typename T>
std::pair<LevelScheme<T>, T> optimal_asym_scheme(const DeterministicChannel<T>& ch) {
    const T zero = scalar_from_int<T>(0), one = scalar_from_int<T>(1);
    const AsymCase<T> c = classify(ch);
    const Interval<T> i1{zero, one};
    const Interval<T> i2{one - c.n22, one};
    LevelScheme<T> s;
    switch (c.tag) {
        case AsymTag::A1: {
            if (!(zero < c.beta1) && !(zero < c.beta2)) {
                s.user1 = {i1}; // fully degenerate: every level pair conflicts
                break;
            }
            auto [seg1, seg2] = asym_segments(c);
            for (std::size_t i = 0; i < seg1.size(); i += 2) s.user1.push_back(seg1[i]);
            for (std::size_t i = 0; i < seg2.size(); i += 2) s.user2.push_back(seg2[i]);
            break;
        }
        case AsymTag::A2:
        case AsymTag::B2:
        case AsymTag::B3:
            s.user1 = {i1};
            break;
        case AsymTag::B1: {
            s.user1 = {i1};
            // the top n12 - 1 levels of user 2 land above user 1's support
            // at receiver 1 and below it at receiver 2: conflict-free
            s.user2 = {{i2.lo, i2.lo + (c.n12 - one)}};
            break;
        }
        case AsymTag::C: {
            // the head of I1 that user 2's image at receiver 2 cannot reach
            s.user1 = {{zero, c.n21 - c.n22}};
            s.user2 = {i2};
            break;
        }
    }
    s = s.normalized(default_tol<T>());
    return {s, s.sum_rate()};
}

// Maximum sum-rate with per-user message caps. Only case A1 needs more than
// one message per user; there, falling below the capacity-achieving count
// on either side collapses the sum to 1 (= n11).
template <typename T>
T limited_message_capacity_asym(const DeterministicChannel<T>& ch, int l1_max, int l2_max) {
    if (l1_max < 1 || l2_max < 1) throw std::domain_error("message caps must be >= 1");
    auto [scheme, sum] = optimal_asym_scheme(ch);
    const auto [n1, n2] = message_count(scheme);
    if (l1_max >= n1 && l2_max >= n2) return sum;
    return scalar_from_int<T>(1);
}

} // namespace sdcap

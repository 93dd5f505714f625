#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sdcap/fraction.hpp"

namespace sdcap {

// Closed interval of information levels, lo < hi after normalization.
template <typename T>
struct Interval {
    T lo{};
    T hi{};

    T length() const { return hi - lo; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

template <typename T>
using IntervalList = std::vector<Interval<T>>;

// Sort, drop slivers of length <= gap_tol, merge touching/overlapping ones.
// `gap_tol` treats near-coincident float endpoints as touching; it is 0 for
// exact arithmetic.
template <typename T>
IntervalList<T> normalized_intervals(IntervalList<T> v, const T& gap_tol) {
    std::sort(v.begin(), v.end(),
              [](const Interval<T>& a, const Interval<T>& b) { return a.lo < b.lo; });
    IntervalList<T> out;
    for (const auto& iv : v) {
        if (iv.hi < iv.lo) throw std::invalid_argument("interval with hi < lo");
        if (!(gap_tol < iv.length())) continue; // carries no rate
        if (!out.empty() && !(out.back().hi + gap_tol < iv.lo)) {
            out.back().hi = std::max(out.back().hi, iv.hi);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

template <typename T>
T total_length(const IntervalList<T>& v) {
    T sum = scalar_from_int<T>(0);
    for (const auto& iv : v) sum = sum + iv.length();
    return sum;
}

// Measure of the pairwise intersection of two normalized interval lists,
// with the second list shifted left by `shift` (i.e. measure{x : x in a,
// x + shift in b}).
template <typename T>
T overlap_measure(const IntervalList<T>& a, const IntervalList<T>& b, const T& shift) {
    T sum = scalar_from_int<T>(0);
    for (const auto& ia : a) {
        for (const auto& ib : b) {
            const T lo = std::max(ia.lo, ib.lo - shift);
            const T hi = std::min(ia.hi, ib.hi - shift);
            if (lo < hi) sum = sum + (hi - lo);
        }
    }
    return sum;
}

// True when every interval of `inner` lies inside [lo, hi] up to tol.
template <typename T>
bool contained_in(const IntervalList<T>& inner, const T& lo, const T& hi, const T& tol) {
    for (const auto& iv : inner)
        if (iv.lo + tol < lo || hi + tol < iv.hi) return false;
    return true;
}

} // namespace sdcap

#pragma once

#include <stdexcept>
#include <utility>

#include "sdcap/interval.hpp"

namespace sdcap {

// Two-user deterministic interference channel. n11/n22 count the bit levels
// of each direct link, n12/n21 the interfering levels arriving at receivers
// 1 and 2. Normalization n11 >= n22 is required up front; callers with the
// opposite ordering swap user labels first.
template <typename T>
struct DeterministicChannel {
    T n11{}, n22{}, n12{}, n21{};

    DeterministicChannel(T a11, T a22, T a12, T a21)
        : n11(std::move(a11)), n22(std::move(a22)), n12(std::move(a12)), n21(std::move(a21)) {
        const T zero = scalar_from_int<T>(0);
        if (n11 < zero || n22 < zero || n12 < zero || n21 < zero)
            throw std::domain_error("deterministic channel: negative bit levels");
        if (n11 < n22)
            throw std::domain_error("deterministic channel: requires n11 >= n22 (swap users)");
    }

    // Cross-gain shifts relative to the direct links.
    T delta1() const { return n11 - n21; }
    T delta2() const { return n22 - n12; }

    // Supports of the two users' desired signals: I1 = [0, n11],
    // I2 = [n11 - n22, n11]; the noise level of both receivers sits at n11.
    Interval<T> support1() const { return {scalar_from_int<T>(0), n11}; }
    Interval<T> support2() const { return {n11 - n22, n11}; }

    DeterministicChannel<T> users_swapped() const {
        return DeterministicChannel<T>(n22, n11, n21, n12);
    }

    // Rescale so that n11 = 1.
    DeterministicChannel<T> normalized() const {
        if (!(scalar_from_int<T>(0) < n11))
            throw std::domain_error("deterministic channel: cannot normalize n11 = 0");
        return DeterministicChannel<T>(n11 / n11, n22 / n11, n12 / n11, n21 / n11);
    }
};

// Activity pattern: per user, the sorted disjoint closed intervals of levels
// that carry information. The per-user rate is the total interval length.
template <typename T>
struct LevelScheme {
    IntervalList<T> user1;
    IntervalList<T> user2;

    LevelScheme normalized(const T& gap_tol = scalar_from_int<T>(0)) const {
        return {normalized_intervals(user1, gap_tol), normalized_intervals(user2, gap_tol)};
    }

    T rate1() const { return total_length(user1); }
    T rate2() const { return total_length(user2); }
    T sum_rate() const { return rate1() + rate2(); }
};

// Number of maximal active intervals per user; each one is a distinct
// message under successive decoding.
template <typename T>
std::pair<int, int> message_count(const LevelScheme<T>& s) {
    return {static_cast<int>(s.user1.size()), static_cast<int>(s.user2.size())};
}

// Complementarity check: levels x of user 1 and x + delta1 of user 2
// interfere at receiver 1 and cannot both be active, and symmetrically
// levels x of user 2 and x + delta2 of user 1 interfere at receiver 2.
// Overlaps of measure <= tol (endpoint touching after the shift) carry no
// rate and do not count as violations.
template <typename T>
bool complementarity_ok(const DeterministicChannel<T>& ch, const LevelScheme<T>& s, const T& tol) {
    // f1(x) f2(x + delta1) = 0  <=>  no mass in {x in u1 : x + delta1 in u2}
    const T o1 = overlap_measure(s.user1, s.user2, ch.delta1());
    const T o2 = overlap_measure(s.user2, s.user1, ch.delta2());
    return !(tol < o1) && !(tol < o2);
}

// Parameter equivalence: the shift pair (delta1, delta2) = (a, b)
// induces the same complementarity conditions as (-b, -a).
template <typename T>
std::pair<T, T> equivalent_parameters(const T& delta1, const T& delta2) {
    return {-delta2, -delta1};
}

} // namespace sdcap

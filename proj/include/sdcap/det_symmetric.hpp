#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sdcap/det_channel.hpp"

namespace sdcap {

// Symmetric channel, normalized: n11 = n22 = 1, n12 = n21 = alpha,
// beta = 1 - alpha is the bit-level shift of both cross links.
//
// The constrained symmetric capacity R(alpha) is piecewise linear and
// oscillates between 1/2 and the interference-free rate:
//   increasing on ((2n-1)/2n, 2n/(2n+1)]    with R = n*alpha + 1 - n,
//   decreasing on (2n/(2n+1), (2n+1)/(2n+2)] with R = (n+1)(1 - alpha),
//   R(0) = 1, R(1) = 1/2.
// Both pieces come from one segmentation of [0,1] into K = ceil(1/beta)
// segments (the first K-1 of length beta, the last the residual): K odd
// gives the increasing piece with n = (K-1)/2, K even the decreasing piece
// with n = (K-2)/2.

template <typename T>
void require_unit_range(const T& alpha) {
    const T zero = scalar_from_int<T>(0), one = scalar_from_int<T>(1);
    if (alpha < zero || one < alpha)
        throw std::domain_error("alpha outside [0, 1]");
}

template <typename T>
T symmetric_capacity(const T& alpha) {
    require_unit_range(alpha);
    const T one = scalar_from_int<T>(1);
    const T half = one / scalar_from_int<T>(2);
    if (alpha == one) return half;
    if (!(half < alpha)) return one - alpha;
    const T beta = one - alpha;
    const long long k = ceil_recip(beta);
    if (k % 2 == 1) {
        const T n = scalar_from_int<T>((k - 1) / 2);
        return n * alpha + one - n; // = 1 - n*beta
    }
    const T np1 = scalar_from_int<T>(k / 2);
    return np1 * beta;
}

// n >= 1 when alpha equals (up to tol) the degenerate point (2n-1)/2n where
// the capacity dips to 1/2; 0 otherwise. alpha = 1 is reported separately.
template <typename T>
long long degenerate_point_index(const T& alpha) {
    require_unit_range(alpha);
    const T tol = default_tol<T>();
    const T one = scalar_from_int<T>(1);
    if (!(alpha + tol < one)) return 0;
    const T half = one / scalar_from_int<T>(2);
    if (alpha + tol < half) return 0;
    const double n_est = 0.5 / (1.0 - to_double(alpha));
    const long long n = std::llround(n_est);
    if (n < 1) return 0;
    const T point = scalar_from_int<T>(2 * n - 1) / scalar_from_int<T>(2 * n);
    return !(tol < abs_val(alpha - point)) ? n : 0;
}

// True at alpha in {(2n-1)/2n} and at alpha = 1: there the capacity 1/2 is
// also achieved by time sharing two single-user full-band schemes.
template <typename T>
bool is_time_sharing_point(const T& alpha) {
    const T one = scalar_from_int<T>(1);
    if (!(alpha + default_tol<T>() < one)) return true;
    return degenerate_point_index(alpha) > 0;
}

// Segments s_1 .. s_K partitioning [0, 1]; odd indices form group G1, even
// indices group G2. The complementarity constraints only couple f1
// restricted to one group with f2 restricted to the other, which is what
// makes the two groups independently optimizable.
template <typename T>
struct Segmentation {
    std::vector<Interval<T>> segments;

    IntervalList<T> group1() const { return group(true); }
    IntervalList<T> group2() const { return group(false); }

  private:
    IntervalList<T> group(bool odd) const {
        IntervalList<T> out;
        for (std::size_t i = odd ? 0 : 1; i < segments.size(); i += 2) out.push_back(segments[i]);
        return out;
    }
};

template <typename T>
Segmentation<T> symmetric_segmentation(const T& alpha) {
    require_unit_range(alpha);
    const T zero = scalar_from_int<T>(0), one = scalar_from_int<T>(1);
    if (alpha == zero || alpha == one)
        throw std::domain_error("segmentation undefined at alpha in {0, 1}");
    const T beta = one - alpha;
    const long long k = ceil_recip(beta);
    if (k > 2'000'000) throw std::length_error("segmentation: alpha too close to 1");
    Segmentation<T> seg;
    seg.segments.reserve(static_cast<std::size_t>(k));
    T pos = zero;
    for (long long i = 0; i + 1 < k; ++i) {
        T next = scalar_from_int<T>(i + 1) * beta;
        seg.segments.push_back({pos, next});
        pos = next;
    }
    if (pos < one) seg.segments.push_back({pos, one});
    return seg;
}

// Capacity-achieving activity pattern for alpha in (0, 1): both users active
// exactly on G1. At alpha = 0 every level is conflict-free and at alpha = 1
// only time sharing achieves 1/2, so neither endpoint maps to a scheme here.
template <typename T>
LevelScheme<T> optimal_symmetric_scheme(const T& alpha) {
    const auto g1 = symmetric_segmentation(alpha).group1();
    LevelScheme<T> s{g1, g1};
    return s.normalized(default_tol<T>());
}

// Minimum number of messages per user in a capacity-achieving scheme:
// n + 1 inside the oscillation interval ((2n-1)/2n, (2n+1)/(2n+2)), and 1
// for alpha <= 1/2, at the degenerate points, and at alpha = 1.
template <typename T>
int capacity_achieving_message_count(const T& alpha) {
    require_unit_range(alpha);
    const T one = scalar_from_int<T>(1);
    const T half = one / scalar_from_int<T>(2);
    if (alpha == one || !(half < alpha)) return 1;
    if (degenerate_point_index(alpha) > 0) return 1;
    const T beta = one - alpha;
    const long long k = ceil_recip(beta);
    const long long n = (k % 2 == 1) ? (k - 1) / 2 : (k - 2) / 2;
    return static_cast<int>(n + 1);
}

// Maximum achievable sum-rate when user i may use at most Li messages: the
// full 2 R(alpha) when both caps reach the capacity-achieving count, and
// exactly 1 otherwise (even one message short forces the sum down to the
// interference-as-noise level).
template <typename T>
T limited_message_capacity(const T& alpha, int l1_max, int l2_max) {
    if (l1_max < 1 || l2_max < 1) throw std::domain_error("message caps must be >= 1");
    require_unit_range(alpha);
    const int need = capacity_achieving_message_count(alpha);
    if (std::min(l1_max, l2_max) >= need)
        return scalar_from_int<T>(2) * symmetric_capacity(alpha);
    return scalar_from_int<T>(1);
}

// Information-theoretic symmetric capacity of the deterministic channel
// (the W-shaped curve); successive decoding meets it on the increasing
// pieces and falls below on the decreasing ones.
inline double info_symmetric_capacity(double alpha) {
    require_unit_range(alpha);
    return std::min({1.0, std::max(alpha, 1.0 - alpha), 1.0 - alpha / 2.0});
}

} // namespace sdcap

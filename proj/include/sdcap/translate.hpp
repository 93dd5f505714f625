#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdcap/det_symmetric.hpp"
#include "sdcap/gaussian.hpp"

namespace sdcap {

// Deterministic-to-Gaussian translation for symmetric channels. Both
// algorithms produce a superposition of L messages per user, decoded with
// the canonical alternating orders: receiver i takes its own strongest
// message first, then the foreign message of the same layer, and so on,
// finishing with its own weakest (private) message; the foreign private
// message stays undecoded.
inline std::pair<std::vector<MsgRef>, std::vector<MsgRef>> canonical_orders(int messages) {
    std::vector<MsgRef> o1, o2;
    for (int l = 0; l < messages; ++l) {
        o1.push_back({1, l});
        o2.push_back({2, l});
        if (l + 1 < messages) {
            o1.push_back({2, l});
            o2.push_back({1, l});
        }
    }
    return {o1, o2};
}

struct TranslationResult {
    int messages = 1;                    // L
    std::vector<double> powers;          // per user, strongest first
    double achieved_sum_bits = 0.0;
    std::vector<double> rates_bits;      // per message of one user
    double equalization_residual = 0.0;  // worst relative gap between a common
                                         // message's two rate constraints
    bool time_sharing_degenerate = false;
    SdScheme scheme;
};

namespace detail {

inline void require_symmetric_weak_cross(const GaussianChannel& ch) {
    ch.check();
    if (!ch.symmetric())
        throw std::domain_error("translation: symmetric channel required");
    if (ch.g12 > ch.g11 * (1 + 1e-12))
        throw std::domain_error("translation: cross gain must not exceed the direct gain");
}

inline TranslationResult evaluate_translation(const GaussianChannel& ch, std::vector<double> powers) {
    TranslationResult r;
    r.messages = (int)powers.size();
    r.powers = powers;
    auto [o1, o2] = canonical_orders(r.messages);
    r.scheme.powers1 = powers;
    r.scheme.powers2 = std::move(powers);
    r.scheme.order1 = std::move(o1);
    r.scheme.order2 = std::move(o2);

    const auto rates = sd_rates(ch, r.scheme);
    r.rates_bits = rates.rates1;
    r.achieved_sum_bits = rates.sum;

    // decodability audit: common messages must satisfy both receivers
    std::vector<double> lo(r.messages, 0.0), hi(r.messages, 0.0);
    for (const auto& c : sd_rate_constraints(ch, r.scheme)) {
        if (c.user != 1) continue;
        (c.receiver == 1 ? lo : hi)[c.index] = c.bound_bits;
    }
    for (int l = 0; l + 1 < r.messages; ++l) {
        const double gap = std::fabs(lo[l] - hi[l]);
        const double ref = std::max({lo[l], hi[l], 1e-30});
        r.equalization_residual = std::max(r.equalization_residual, gap / ref);
    }
    return r;
}

} // namespace detail

// Power of the strongest message that makes its rate constraint identical at
// both receivers (normalized N = 1, g11 = 1). Below the budget threshold
// (1 - g12)/g12^2 the cross link is too weak to decode anything foreign and
// the whole budget goes into a single private message.
struct EqualizingSplit {
    bool split = false;  // false: single private message of power pbar
    double p1 = 0.0;
};

inline EqualizingSplit equalizing_split(double g12, double pbar) {
    if (g12 < 0.0 || g12 > 1.0) throw std::domain_error("equalizing split: g12 outside [0, 1]");
    if (!(pbar > 0.0)) throw std::domain_error("equalizing split: budget must be positive");
    if (g12 == 0.0 || pbar * g12 * g12 <= 1.0 - g12) return {false, pbar};
    return {true, 1.0 - g12 + (1.0 - g12 * g12) * pbar};
}

// Direct power scaling: L messages as in the deterministic optimum, with a
// geometric power profile of ratio (g12/g11)^2 per layer.
inline TranslationResult translate_simple(const GaussianChannel& ch) {
    detail::require_symmetric_weak_cross(ch);
    // interference below the noise floor (alpha < 0) needs no splitting
    const double alpha = std::max(0.0, std::min(1.0, ch.alpha()));
    const int messages = capacity_achieving_message_count(alpha);
    const double ratio = (ch.g12 / ch.g11) * (ch.g12 / ch.g11);
    std::vector<double> powers(messages);
    double norm = 0.0, w = 1.0;
    for (int l = 0; l < messages; ++l, w *= ratio) {
        powers[l] = w;
        norm += w;
    }
    for (double& p : powers) p *= ch.p1bar / norm;
    return detail::evaluate_translation(ch, std::move(powers));
}

// Rate-constraint equalization: peel equalized layers off the budget until
// the threshold is reached, then spend the rest on the private message. L
// is not fixed in advance; it falls out of the recursion.
inline TranslationResult translate_equalizing(const GaussianChannel& ch) {
    detail::require_symmetric_weak_cross(ch);
    const double g = ch.g12 / ch.g11;
    const double snr = ch.snr1();
    if (g >= 1.0 - 1e-12) {
        // cross gain equal to the direct gain: every equalized layer would get
        // zero power. The recursion's limit value is the time-sharing sum.
        TranslationResult r;
        r.messages = 1;
        r.powers = {ch.p1bar};
        r.time_sharing_degenerate = true;
        r.achieved_sum_bits = log2p1(2.0 * snr);
        r.rates_bits = {r.achieved_sum_bits / 2.0};
        return r;
    }
    std::vector<double> powers;
    double remaining = snr; // normalized budget (g11 = 1, N = 1)
    while (true) {
        const auto sp = equalizing_split(g, remaining);
        if (!sp.split) {
            powers.push_back(remaining);
            break;
        }
        powers.push_back(sp.p1);
        remaining -= sp.p1;
    }
    for (double& p : powers) p *= ch.n1 / ch.g11; // back to transmit units
    return detail::evaluate_translation(ch, std::move(powers));
}

} // namespace sdcap

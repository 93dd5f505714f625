#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdcap/vertex_lp.hpp"

namespace sdcap {

inline double log2p1(double x) { // log2(1 + x), stable for small x
    return std::log1p(x) * 1.4426950408889634;
}

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double v) { return 10.0 * std::log10(v); }

// Two-user Gaussian interference channel. g_ij is the power gain from
// transmitter i to receiver j; receiver i hears g_ii * own + g_ji * foreign.
struct GaussianChannel {
    double g11 = 1.0, g12 = 0.0, g21 = 0.0, g22 = 1.0;
    double n1 = 1.0, n2 = 1.0;     // noise powers
    double p1bar = 1.0, p2bar = 1.0;

    void check() const {
        if (!(g11 > 0) || !(g22 > 0) || !(n1 > 0) || !(n2 > 0) || !(p1bar > 0) || !(p2bar > 0) ||
            g12 < 0 || g21 < 0)
            throw std::domain_error("gaussian channel: direct gains, noises and budgets must be positive");
    }

    double snr1() const { return g11 * p1bar / n1; }
    double snr2() const { return g22 * p2bar / n2; }
    double inr1() const { return g21 * p2bar / n1; } // interference into receiver 1
    double inr2() const { return g12 * p1bar / n2; }

    bool symmetric(double rel = 1e-12) const {
        auto close = [rel](double a, double b) { return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b)); };
        return close(g11, g22) && close(g12, g21) && close(n1, n2) && close(p1bar, p2bar);
    }

    // log INR / log SNR of a symmetric channel.
    double alpha() const {
        if (!symmetric()) throw std::domain_error("alpha: symmetric channel required");
        if (inr1() <= 0) return 0.0;
        return std::log(inr1()) / std::log(snr1());
    }

    // Symmetric channel in the g11 = 1, N = 1, pbar = SNR convention with
    // g12 = SNR^(alpha - 1).
    static GaussianChannel from_snr_alpha(double snr_db, double alpha) {
        const double snr = db_to_lin(snr_db);
        GaussianChannel ch;
        ch.g11 = ch.g22 = 1.0;
        ch.g12 = ch.g21 = std::pow(snr, alpha - 1.0);
        ch.n1 = ch.n2 = 1.0;
        ch.p1bar = ch.p2bar = snr;
        return ch;
    }
};

// ---------------------------------------------------------------------------
// Superposition coding with successive decoding
// ---------------------------------------------------------------------------

// One entry of a decoding order: message `index` (0-based) of `user` (1/2).
struct MsgRef {
    int user = 1;
    int index = 0;
    friend bool operator==(const MsgRef& a, const MsgRef& b) {
        return a.user == b.user && a.index == b.index;
    }
};

// Message powers per user plus per-receiver decoding orders. A receiver's
// order must contain every own message exactly once and any foreign message
// at most once; foreign messages after the last own one are equivalent to
// treating them as noise and are removed by normalize().
struct SdScheme {
    std::vector<double> powers1, powers2;
    std::vector<MsgRef> order1, order2;

    void normalize() {
        strip_trailing_foreign(order1, 1);
        strip_trailing_foreign(order2, 2);
    }

    void validate(const GaussianChannel& ch) const {
        check_order(order1, 1);
        check_order(order2, 2);
        check_budget(powers1, ch.p1bar, "user 1");
        check_budget(powers2, ch.p2bar, "user 2");
    }

  private:
    static void strip_trailing_foreign(std::vector<MsgRef>& order, int own) {
        while (!order.empty() && order.back().user != own) order.pop_back();
    }

    void check_order(const std::vector<MsgRef>& order, int own) const {
        const auto& own_powers = own == 1 ? powers1 : powers2;
        const auto& other_powers = own == 1 ? powers2 : powers1;
        std::vector<int> seen_own(own_powers.size(), 0), seen_other(other_powers.size(), 0);
        for (const auto& m : order) {
            if (m.user != 1 && m.user != 2) throw std::invalid_argument("scheme: bad user tag");
            auto& seen = m.user == own ? seen_own : seen_other;
            const auto& pw = m.user == own ? own_powers : other_powers;
            if (m.index < 0 || m.index >= (int)pw.size())
                throw std::invalid_argument("scheme: message index out of range");
            if (seen[m.index]++) throw std::invalid_argument("scheme: duplicate message in order");
        }
        for (int c : seen_own)
            if (!c) throw std::invalid_argument("scheme: receiver misses one of its own messages");
    }

    static void check_budget(const std::vector<double>& p, double budget, const char* who) {
        double sum = 0.0;
        for (double v : p) {
            if (v < 0) throw std::invalid_argument(std::string("scheme: negative power for ") + who);
            sum += v;
        }
        if (sum > budget * (1.0 + 1e-9))
            throw std::invalid_argument(std::string("scheme: power budget exceeded for ") + who);
    }
};

// One successive-decoding rate constraint: message of `user` decoded at
// `receiver` against the interference still undecoded there.
struct RateConstraint {
    int user;
    int index;
    int receiver;
    double bound_bits;
};

inline std::vector<RateConstraint> sd_rate_constraints(const GaussianChannel& ch, SdScheme s) {
    ch.check();
    s.normalize();
    s.validate(ch);
    std::vector<RateConstraint> out;
    for (int rx = 1; rx <= 2; ++rx) {
        const auto& order = rx == 1 ? s.order1 : s.order2;
        const double noise = rx == 1 ? ch.n1 : ch.n2;
        auto gain_at = [&](int user) {
            if (rx == 1) return user == 1 ? ch.g11 : ch.g21;
            return user == 1 ? ch.g12 : ch.g22;
        };
        // everything not yet decoded at this receiver counts as interference
        double residual = 0.0;
        for (double p : s.powers1) residual += gain_at(1) * p;
        for (double p : s.powers2) residual += gain_at(2) * p;
        for (const auto& m : order) {
            const double p = (m.user == 1 ? s.powers1 : s.powers2)[m.index] * gain_at(m.user);
            residual -= p;
            out.push_back({m.user, m.index, rx, log2p1(p / (residual + noise))});
        }
    }
    return out;
}

struct SdRates {
    std::vector<double> rates1, rates2;
    double sum = 0.0;
};

// Achievable rate of every message: the minimum of its constraints over the
// receivers that decode it. Logs are base 2; rates are bits per channel use.
inline SdRates sd_rates(const GaussianChannel& ch, const SdScheme& s) {
    SdScheme norm = s;
    norm.normalize();
    const auto cons = sd_rate_constraints(ch, norm);
    SdRates r;
    r.rates1.assign(norm.powers1.size(), std::numeric_limits<double>::infinity());
    r.rates2.assign(norm.powers2.size(), std::numeric_limits<double>::infinity());
    for (const auto& c : cons) {
        auto& v = (c.user == 1 ? r.rates1 : r.rates2)[c.index];
        v = std::min(v, c.bound_bits);
    }
    for (auto& v : r.rates1)
        if (std::isinf(v)) v = 0.0; // message never decoded anywhere carries no rate
    for (auto& v : r.rates2)
        if (std::isinf(v)) v = 0.0;
    for (double v : r.rates1) r.sum += v;
    for (double v : r.rates2) r.sum += v;
    return r;
}

// ---------------------------------------------------------------------------
// Two-message (common + private) layer
// ---------------------------------------------------------------------------

struct HkPowerSplit {
    double q1c = 0.0, q1p = 0.0, q2c = 0.0, q2p = 0.0;

    void check(const GaussianChannel& ch) const {
        if (q1c < 0 || q1p < 0 || q2c < 0 || q2p < 0)
            throw std::domain_error("power split: negative message power");
        if (q1c + q1p > ch.p1bar * (1 + 1e-9) || q2c + q2p > ch.p2bar * (1 + 1e-9))
            throw std::domain_error("power split: budget exceeded");
    }

    // Symmetric split with private power qp and the rest on the common part.
    static HkPowerSplit symmetric(const GaussianChannel& ch, double qp) {
        return {ch.p1bar - qp, qp, ch.p2bar - qp, qp};
    }
};

// The fourteen joint-decoding constraints on (r1c, r1p, r2c, r2p): at each
// receiver the two common messages and the own private message are decoded
// jointly, with the foreign private message as noise.
inline std::vector<std::pair<std::array<double, 4>, double>>
hk_constraints(const GaussianChannel& ch, const HkPowerSplit& q) {
    const double d1 = ch.g21 * q.q2p + ch.n1; // noise floor at receiver 1
    const double d2 = ch.g12 * q.q1p + ch.n2;
    const double a1c = ch.g11 * q.q1c, a1p = ch.g11 * q.q1p, b2c = ch.g21 * q.q2c;
    const double a2c = ch.g22 * q.q2c, a2p = ch.g22 * q.q2p, b1c = ch.g12 * q.q1c;
    // variable order: r1c, r1p, r2c, r2p
    std::vector<std::pair<std::array<double, 4>, double>> cons;
    cons.push_back({{1, 1, 1, 0}, log2p1((a1c + a1p + b2c) / d1)});
    cons.push_back({{1, 0, 1, 1}, log2p1((a2c + a2p + b1c) / d2)});
    cons.push_back({{1, 0, 1, 0}, log2p1((a1c + b2c) / d1)});
    cons.push_back({{1, 0, 1, 0}, log2p1((a2c + b1c) / d2)});
    cons.push_back({{1, 1, 0, 0}, log2p1((a1c + a1p) / d1)});
    cons.push_back({{0, 0, 1, 1}, log2p1((a2c + a2p) / d2)});
    cons.push_back({{0, 1, 1, 0}, log2p1((a1p + b2c) / d1)});
    cons.push_back({{1, 0, 0, 1}, log2p1((a2p + b1c) / d2)});
    cons.push_back({{1, 0, 0, 0}, log2p1(a1c / d1)});
    cons.push_back({{0, 0, 1, 0}, log2p1(a2c / d2)});
    cons.push_back({{0, 0, 1, 0}, log2p1(b2c / d1)});
    cons.push_back({{1, 0, 0, 0}, log2p1(b1c / d2)});
    cons.push_back({{0, 1, 0, 0}, log2p1(a1p / d1)});
    cons.push_back({{0, 0, 0, 1}, log2p1(a2p / d2)});
    return cons;
}

// Maximum sum-rate of the two-message Han-Kobayashi region at a fixed power
// split: a 4-variable linear program over the fourteen constraints.
inline double hk_region_sum(const GaussianChannel& ch, const HkPowerSplit& q) {
    ch.check();
    q.check(ch);
    VertexLp lp;
    for (const auto& [row, bound] : hk_constraints(ch, q)) lp.add_row(row, bound);
    return lp.maximize({1, 1, 1, 1});
}

// Successive decoding with the same split and the canonical orders
// (common 1 -> common 2 -> private at each receiver, foreign common in the
// middle). The four bounds are independent, so their sum is the maximum.
inline double sd_two_message_sum(const GaussianChannel& ch, const HkPowerSplit& q) {
    ch.check();
    q.check(ch);
    const double r1c = std::min(
        log2p1(ch.g11 * q.q1c / (ch.g11 * q.q1p + ch.g21 * (q.q2c + q.q2p) + ch.n1)),
        log2p1(ch.g12 * q.q1c / (ch.g22 * q.q2p + ch.g12 * q.q1p + ch.n2)));
    const double r2c = std::min(
        log2p1(ch.g22 * q.q2c / (ch.g22 * q.q2p + ch.g12 * (q.q1c + q.q1p) + ch.n2)),
        log2p1(ch.g21 * q.q2c / (ch.g11 * q.q1p + ch.g21 * q.q2p + ch.n1)));
    const double r1p = log2p1(ch.g11 * q.q1p / (ch.g21 * q.q2p + ch.n1));
    const double r2p = log2p1(ch.g22 * q.q2p / (ch.g12 * q.q1p + ch.n2));
    return r1c + r2c + r1p + r2p;
}

// The same two-message scheme as an explicit SdScheme (message 0 common,
// message 1 private), for cross-checking against the generic evaluator.
inline SdScheme two_message_scheme(const HkPowerSplit& q) {
    SdScheme s;
    s.powers1 = {q.q1c, q.q1p};
    s.powers2 = {q.q2c, q.q2p};
    s.order1 = {{1, 0}, {2, 0}, {1, 1}};
    s.order2 = {{2, 0}, {1, 0}, {2, 1}};
    return s;
}

// ---------------------------------------------------------------------------
// Single-message baseline
// ---------------------------------------------------------------------------

struct BaselineResult {
    double sum_bits = 0.0;
    double p1 = 0.0, p2 = 0.0;
    bool decode1_at_rx2 = false; // user 1's message decoded (first) at receiver 2
    bool decode2_at_rx1 = false;
};

// Power grid of the baseline search: 0.1 dB log spacing on [-40 dB, pbar]
// plus the exact endpoints {0, pbar}.
inline std::vector<double> baseline_power_grid(double pbar, double step_db = 0.1) {
    std::vector<double> g{0.0, pbar};
    const double hi_db = lin_to_db(pbar);
    for (double db = -40.0; db < hi_db; db += step_db) g.push_back(db_to_lin(db));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    while (!g.empty() && g.back() > pbar) g.pop_back();
    return g;
}

// Best sum-rate with one message per user, over the four decode
// configurations (each lone message either decoded first at the foreign
// receiver or treated as noise there) and a power grid.
inline BaselineResult single_message_baseline(const GaussianChannel& ch, double step_db = 0.1) {
    ch.check();
    const auto grid1 = baseline_power_grid(ch.p1bar, step_db);
    const auto grid2 = baseline_power_grid(ch.p2bar, step_db);
    BaselineResult best;
    best.sum_bits = -1.0;
    for (int dec1 : {0, 1}) {
        for (int dec2 : {0, 1}) {
            for (double p1 : grid1) {
                for (double p2 : grid2) {
                    // own-receiver constraints (foreign decoded first when dec* set)
                    double r1 = log2p1(ch.g11 * p1 / ((dec2 ? 0.0 : ch.g21 * p2) + ch.n1));
                    double r2 = log2p1(ch.g22 * p2 / ((dec1 ? 0.0 : ch.g12 * p1) + ch.n2));
                    if (dec1) r1 = std::min(r1, log2p1(ch.g12 * p1 / (ch.g22 * p2 + ch.n2)));
                    if (dec2) r2 = std::min(r2, log2p1(ch.g21 * p2 / (ch.g11 * p1 + ch.n1)));
                    const double sum = r1 + r2;
                    if (sum > best.sum_bits) {
                        best = {sum, p1, p2, dec1 != 0, dec2 != 0};
                    }
                }
            }
        }
    }
    return best;
}

} // namespace sdcap

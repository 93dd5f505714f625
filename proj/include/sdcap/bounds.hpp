#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "sdcap/gaussian.hpp"

namespace sdcap {

// Two sum-rate upper bounds for the two-message Han-Kobayashi family (and
// therefore for every successive-decoding scheme), each from a relaxed
// subset of the joint-decoding constraints. q_i is the private power of
// user i; the common part takes the rest of the budget.
//
// Receiver-side normalization to g11 = g22 = 1 keeps rates and the q
// coordinates unchanged.

struct BoundPoint {
    double value_bits = 0.0;
    double q1 = 0.0, q2 = 0.0;
};

struct BoundResult {
    BoundPoint opt1, opt2;
    double combined_bits = 0.0;
};

namespace detail {

struct NormalizedChannel {
    double g12, g21, n1, n2, p1, p2;
};

inline NormalizedChannel normalize(const GaussianChannel& ch) {
    ch.check();
    return {ch.g12 / ch.g22, ch.g21 / ch.g11, ch.n1 / ch.g11, ch.n2 / ch.g22, ch.p1bar, ch.p2bar};
}

// The two sides of the min in the first bound, as functions of (q1, q2).
struct Opt1Objective {
    NormalizedChannel c;
    double lc1, lc2; // log2 of the receiver constants

    explicit Opt1Objective(const NormalizedChannel& nc) : c(nc) {
        lc1 = std::log2(c.n1 + c.p1 + c.g21 * c.p2);
        lc2 = std::log2(c.n2 + c.p2 + c.g12 * c.p1);
    }

    double side_a(double q1, double q2) const {
        return lc1 - std::log2(c.g21 * q2 + c.n1) - std::log2(c.g12 * q1 + c.n2) +
               std::log2(c.g12 * q1 + q2 + c.n2);
    }
    double side_b(double q1, double q2) const {
        return lc2 - std::log2(c.g12 * q1 + c.n2) - std::log2(c.g21 * q2 + c.n1) +
               std::log2(c.g21 * q2 + q1 + c.n1);
    }
    double eval(double q1, double q2) const { return std::min(side_a(q1, q2), side_b(q1, q2)); }
};

inline double clampv(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

// Real roots of a x^2 + b x + c = 0, degenerating gracefully to linear.
inline std::vector<double> quadratic_roots(double a, double b, double c, double scale) {
    std::vector<double> roots;
    if (std::fabs(a) <= 1e-14 * scale) {
        if (std::fabs(b) > 1e-14 * scale) roots.push_back(-c / b);
        return roots;
    }
    const double disc = b * b - 4 * a * c;
    if (disc < 0) return roots;
    const double s = std::sqrt(disc);
    // Citardauq form for the root that would suffer cancellation
    const double r1 = (-b - (b >= 0 ? s : -s)) / (2 * a);
    roots.push_back(r1);
    if (s > 0) roots.push_back(r1 != 0.0 ? c / (a * r1) : -b / a);
    return roots;
}

} // namespace detail

// First bound: maximum of a min of two log-sums over the private-power box.
// The min's switching locus is the line c1 (g12 q1 + q2 + N2) =
// c2 (g21 q2 + q1 + N1); away from it the active side is monotone in one
// variable, so the maximum sits at a box corner, on the line (at one of two
// stationary points of the substituted one-variable objective or where the
// line leaves the box), or where the line crosses the q1 = 0 / q2 = 0 edges.
inline BoundPoint upper_bound_1(const GaussianChannel& ch) {
    const auto c = detail::normalize(ch);
    const detail::Opt1Objective f(c);

    const double c1 = c.n1 + c.p1 + c.g21 * c.p2;
    const double c2 = c.n2 + c.p2 + c.g12 * c.p1;
    // line: D q1 = E q2 + F
    const double d = c1 * c.g12 - c2;
    const double e = c2 * c.g21 - c1;
    const double fc = c2 * c.n1 - c1 * c.n2;
    const double scale = std::max({std::fabs(d), std::fabs(e), std::fabs(fc), 1.0});

    std::vector<std::array<double, 2>> cand = {
        {0, 0}, {c.p1, 0}, {0, c.p2}, {c.p1, c.p2}};

    auto push_line_point = [&](double q2) {
        if (!std::isfinite(q2)) return;
        q2 = detail::clampv(q2, 0.0, c.p2);
        const double q1 = detail::clampv((e * q2 + fc) / d, 0.0, c.p1);
        cand.push_back({q1, q2});
    };

    if (std::fabs(d) > 1e-12 * scale) {
        // where the line crosses the four box edges
        push_line_point(0.0);
        push_line_point(c.p2);
        if (std::fabs(e) > 1e-12 * scale) {
            push_line_point(-fc / e);             // q1 = 0
            push_line_point((d * c.p1 - fc) / e); // q1 = p1
        }
        // stationary points of either side restricted to the line:
        // q1(q2) = (e q2 + fc)/d, side = -log(a1 q2 + b1) - log(a2 q2 + b2)
        //                                + log(a3 q2 + b3)
        const double a1 = c.g21, b1 = c.n1;
        const double a2 = c.g12 * e / d, b2 = c.g12 * fc / d + c.n2;
        const double a3 = a2 + 1.0, b3 = b2;
        const double qa = -a1 * a2 * a3;
        const double qb = -a1 * (a2 * b3 + a3 * b2) - a2 * (a1 * b3 + a3 * b1) + a3 * (a1 * b2 + a2 * b1);
        const double qc = -a1 * b2 * b3 - a2 * b1 * b3 + a3 * b1 * b2;
        const double qscale = std::max({std::fabs(qa), std::fabs(qb), std::fabs(qc), 1.0});
        for (double r : detail::quadratic_roots(qa, qb, qc, qscale)) push_line_point(r);
    } else if (std::fabs(e) > 1e-12 * scale) {
        // degenerate direction: the locus is the horizontal line q2 = -fc/e
        const double q2 = detail::clampv(-fc / e, 0.0, c.p2);
        cand.push_back({0.0, q2});
        cand.push_back({c.p1, q2});
    }

    BoundPoint best;
    best.value_bits = -1.0;
    for (const auto& [q1, q2] : cand) {
        const double v = f.eval(q1, q2);
        if (v > best.value_bits) best = {v, q1, q2};
    }
    return best;
}

// Second bound: the objective separates into one term per private power,
// and each term's derivative has constant sign, so per-variable endpoint
// checks are exact.
inline BoundPoint upper_bound_2(const GaussianChannel& ch) {
    const auto c = detail::normalize(ch);
    const auto term = [](double q, double k, double g, double n_other) {
        return std::log2(q + k) - std::log2(g * q + n_other);
    };
    const double k1 = c.g21 * c.p2 + c.n1;
    const double k2 = c.g12 * c.p1 + c.n2;
    BoundPoint best;
    const double t1_0 = term(0, k1, c.g12, c.n2), t1_p = term(c.p1, k1, c.g12, c.n2);
    const double t2_0 = term(0, k2, c.g21, c.n1), t2_p = term(c.p2, k2, c.g21, c.n1);
    best.q1 = t1_0 >= t1_p ? 0.0 : c.p1;
    best.q2 = t2_0 >= t2_p ? 0.0 : c.p2;
    best.value_bits = std::max(t1_0, t1_p) + std::max(t2_0, t2_p);
    return best;
}

inline BoundResult combined_bound(const GaussianChannel& ch) {
    BoundResult r;
    r.opt1 = upper_bound_1(ch);
    r.opt2 = upper_bound_2(ch);
    r.combined_bits = std::min(r.opt1.value_bits, r.opt2.value_bits);
    return r;
}

// Dense-grid evaluations of both bounds, used as independent checks of the
// closed-form maximizations.
inline double upper_bound_1_grid(const GaussianChannel& ch, double step_db = 0.02,
                                 double floor_scale = 1e-5) {
    const auto c = detail::normalize(ch);
    const detail::Opt1Objective f(c);
    auto grid = [&](double pmax, double n) {
        std::vector<double> g{0.0, pmax};
        const double lo = lin_to_db(floor_scale * n), hi = lin_to_db(pmax);
        for (double db = lo; db < hi; db += step_db) g.push_back(db_to_lin(db));
        return g;
    };
    const auto g1 = grid(c.p1, c.n2), g2 = grid(c.p2, c.n1);
    // Coarse pass with hoisted per-axis logs (only the coupling term differs
    // per cell), then local refinement around the winner: the min of two
    // smooth surfaces has a ridge the coarse grid may straddle.
    std::vector<double> l1(g1.size()), l2(g2.size());
    for (size_t i = 0; i < g1.size(); ++i) l1[i] = std::log2(c.g12 * g1[i] + c.n2);
    for (size_t j = 0; j < g2.size(); ++j) l2[j] = std::log2(c.g21 * g2[j] + c.n1);
    double best = -1.0, bq1 = 0, bq2 = 0;
    for (size_t i = 0; i < g1.size(); ++i) {
        const double q1 = g1[i];
        for (size_t j = 0; j < g2.size(); ++j) {
            const double q2 = g2[j];
            const double common = -l2[j] - l1[i];
            const double a = f.lc1 + common + std::log2(c.g12 * q1 + q2 + c.n2);
            const double b = f.lc2 + common + std::log2(c.g21 * q2 + q1 + c.n1);
            const double v = std::min(a, b);
            if (v > best) {
                best = v;
                bq1 = q1;
                bq2 = q2;
            }
        }
    }
    const double r1 = std::max(bq1, floor_scale * c.n2), r2 = std::max(bq2, floor_scale * c.n1);
    const double span = db_to_lin(2.0 * step_db);
    for (int i = -60; i <= 60; ++i)
        for (int j = -60; j <= 60; ++j) {
            const double q1 = detail::clampv(r1 * std::pow(span, i / 60.0), 0.0, c.p1);
            const double q2 = detail::clampv(r2 * std::pow(span, j / 60.0), 0.0, c.p2);
            best = std::max(best, f.eval(q1, q2));
        }
    return best;
}

inline double upper_bound_2_grid(const GaussianChannel& ch, double step_db = 0.001,
                                 double floor_scale = 1e-6) {
    const auto c = detail::normalize(ch);
    const auto term = [](double q, double k, double g, double n_other) {
        return std::log2(q + k) - std::log2(g * q + n_other);
    };
    auto best_term = [&](double pmax, double k, double g, double n_other, double n_own) {
        double best = term(0.0, k, g, n_other);
        const double lo = lin_to_db(floor_scale * n_own), hi = lin_to_db(pmax);
        for (double db = lo; db < hi; db += step_db)
            best = std::max(best, term(db_to_lin(db), k, g, n_other));
        return std::max(best, term(pmax, k, g, n_other));
    };
    return best_term(c.p1, c.g21 * c.p2 + c.n1, c.g12, c.n2, c.n2) +
           best_term(c.p2, c.g12 * c.p1 + c.n2, c.g21, c.n1, c.n1);
}

} // namespace sdcap

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>
#include <vector>

#include "sdcap/errors.hpp"
#include "sdcap/gaussian.hpp"

namespace sdcap {

// ---------------------------------------------------------------------------
// Deterministic model, integer bit levels
// ---------------------------------------------------------------------------

// Integer-level instance: user 1 owns cells 0..n11-1 of [0, n11], user 2 owns
// cells at positions (n11 - n22) .. n11 - 1. Cell a of user 1 conflicts with
// user 2's cell at position a + delta1 (receiver 1) and user 2's cell at
// position p conflicts with user 1's cell p + delta2 (receiver 2).
struct IntChannel {
    int n11 = 0, n22 = 0, n12 = 0, n21 = 0;

    void check() const {
        if (n11 < 0 || n22 < 0 || n12 < 0 || n21 < 0)
            throw std::domain_error("integer channel: negative levels");
        if (n11 < n22) throw std::domain_error("integer channel: requires n11 >= n22");
        if (n11 > 62 || n22 > 62) throw std::domain_error("integer channel: too many levels");
    }
    int delta1() const { return n11 - n21; }
    int delta2() const { return n22 - n12; }
};

struct DetOracleOptions {
    int l1_max = 0, l2_max = 0; // <= 0 means unlimited messages
    // forced activity filters (bitmasks over cells), for hypothesis-restricted
    // searches; require2 cannot be combined with an l2 cap
    unsigned long long require1 = 0, forbid1 = 0;
    unsigned long long require2 = 0, forbid2 = 0;
    int workers = 1;
    unsigned long long budget = 1ull << 22; // user-1 patterns to score
};

struct DetOracleResult {
    long long max_sum = -1; // -1: nothing feasible under the filters
    unsigned long long best1 = 0, best2 = 0;
    unsigned long long evaluated = 0;
    double elapsed_seconds = 0.0;
};

namespace detail {

inline int run_count(unsigned long long mask) {
    return std::popcount(mask & ~(mask << 1));
}

struct DetSearchContext {
    int n22;
    unsigned long long full2;
    std::vector<unsigned long long> block; // per user-1 cell: blocked user-2 cells
    int l2_max;
    unsigned long long require2, forbid2;
};

// Largest feasible user-2 response to a fixed user-1 pattern. Conflicts only
// couple the two users, so every unblocked cell can be taken; with a message
// cap, whole free components are taken largest-first (splitting a component
// never helps and cannot merge runs).
inline long long best_response(const DetSearchContext& c, unsigned long long s1,
                               unsigned long long* s2_out) {
    unsigned long long blocked = 0;
    unsigned long long m = s1;
    while (m) {
        const int i = std::countr_zero(m);
        blocked |= c.block[i];
        m &= m - 1;
    }
    const unsigned long long free2 = c.full2 & ~blocked & ~c.forbid2;
    if ((c.require2 & free2) != c.require2) return -1;
    if (c.l2_max <= 0) {
        *s2_out = free2;
        return std::popcount(free2);
    }
    // components of free2, largest first (ties by position)
    struct Comp {
        int start, size;
    };
    std::vector<Comp> comps;
    unsigned long long f = free2;
    while (f) {
        const int start = std::countr_zero(f);
        int end = start;
        while (end < c.n22 && (f >> end & 1)) ++end;
        comps.push_back({start, end - start});
        f &= ~(((1ull << (end - start)) - 1) << start);
    }
    std::sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) {
        return a.size != b.size ? a.size > b.size : a.start < b.start;
    });
    unsigned long long s2 = 0;
    long long total = 0;
    for (size_t k = 0; k < comps.size() && (int)k < c.l2_max; ++k) {
        s2 |= ((1ull << comps[k].size) - 1) << comps[k].start;
        total += comps[k].size;
    }
    *s2_out = s2;
    return total;
}

} // namespace detail

// Exact maximum of R1 + R2 over all binary level assignments satisfying the
// integer complementarity constraints, optionally filtered and capped.
inline DetOracleResult det_exhaustive(const IntChannel& ch, const DetOracleOptions& opt = {}) {
    ch.check();
    if (opt.require2 != 0 && opt.l2_max > 0)
        throw std::invalid_argument("det oracle: require2 cannot be combined with an l2 cap");
    const unsigned long long patterns = 1ull << ch.n11;
    if (patterns > opt.budget)
        throw resource_error("det oracle: 2^n11 patterns exceed the enumeration budget");

    const auto t0 = std::chrono::steady_clock::now();
    const int offset = ch.n11 - ch.n22;
    detail::DetSearchContext ctx;
    ctx.n22 = ch.n22;
    ctx.full2 = ch.n22 == 0 ? 0 : ((1ull << ch.n22) - 1);
    ctx.l2_max = opt.l2_max;
    ctx.require2 = opt.require2;
    ctx.forbid2 = opt.forbid2;
    ctx.block.assign(ch.n11, 0);
    for (int i = 0; i < ch.n11; ++i) {
        const int j1 = i + ch.delta1() - offset; // conflict at receiver 1
        const int j2 = i - ch.delta2() - offset; // conflict at receiver 2
        if (j1 >= 0 && j1 < ch.n22) ctx.block[i] |= 1ull << j1;
        if (j2 >= 0 && j2 < ch.n22) ctx.block[i] |= 1ull << j2;
    }

    const int workers = std::max(1, opt.workers);
    std::vector<DetOracleResult> partial(workers);
    auto work = [&](int w) {
        DetOracleResult r;
        const unsigned long long lo = patterns * w / workers;
        const unsigned long long hi = patterns * (w + 1) / workers;
        for (unsigned long long s1 = lo; s1 < hi; ++s1) {
            if ((s1 & opt.require1) != opt.require1 || (s1 & opt.forbid1)) continue;
            if (opt.l1_max > 0 && detail::run_count(s1) > opt.l1_max) continue;
            unsigned long long s2 = 0;
            const long long r2 = detail::best_response(ctx, s1, &s2);
            ++r.evaluated;
            if (r2 < 0) continue;
            const long long sum = std::popcount(s1) + r2;
            if (sum > r.max_sum || (sum == r.max_sum && (s1 < r.best1 || (s1 == r.best1 && s2 < r.best2)))) {
                r.max_sum = sum;
                r.best1 = s1;
                r.best2 = s2;
            }
        }
        partial[w] = r;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    DetOracleResult best;
    for (const auto& r : partial) {
        best.evaluated += r.evaluated;
        if (r.max_sum > best.max_sum ||
            (r.max_sum == best.max_sum && (r.best1 < best.best1 || (r.best1 == best.best1 && r.best2 < best.best2))))
        {
            best.max_sum = r.max_sum;
            best.best1 = r.best1;
            best.best2 = r.best2;
        }
    }
    best.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return best;
}

inline DetOracleResult det_exhaustive_capped(const IntChannel& ch, int l1_max, int l2_max,
                                             int workers = 1) {
    if (l1_max < 1 || l2_max < 1) throw std::domain_error("det oracle: message caps must be >= 1");
    DetOracleOptions opt;
    opt.l1_max = l1_max >= ch.n11 ? 0 : l1_max; // a cap at n11 can never bind
    opt.l2_max = l2_max >= ch.n22 ? 0 : l2_max;
    opt.workers = workers;
    return det_exhaustive(ch, opt);
}

// ---------------------------------------------------------------------------
// Gaussian model: decoding-order enumeration plus power grids
// ---------------------------------------------------------------------------

struct GaussOracleOptions {
    double grid_step_db = 0.25;
    double grid_floor_db = -40.0;
    unsigned long long budget = 20'000'000;
    int workers = 1;
};

struct GaussOracleResult {
    double best_sum = -1.0;
    SdScheme best_scheme;
    unsigned long long evaluated = 0;
    double elapsed_seconds = 0.0;
};

namespace detail {

// All decoding orders at one receiver: own messages in fixed (power) order,
// any ordered subset of the foreign messages interleaved strictly before the
// last own message. Message labels within a user are interchangeable, so
// fixing the own sequence loses nothing once powers are enumerated.
inline std::vector<std::vector<MsgRef>> receiver_orders(int own_user, int n_own, int n_foreign) {
    std::vector<std::vector<MsgRef>> out;
    std::vector<MsgRef> cur;
    unsigned used_foreign = 0;
    const int foreign_user = own_user == 1 ? 2 : 1;
    auto rec = [&](auto&& self, int own_done) -> void {
        if (own_done == n_own) {
            out.push_back(cur);
            return;
        }
        cur.push_back({own_user, own_done});
        self(self, own_done + 1);
        cur.pop_back();
        for (int f = 0; f < n_foreign; ++f) {
            if (used_foreign & (1u << f)) continue;
            used_foreign |= 1u << f;
            cur.push_back({foreign_user, f});
            self(self, own_done);
            cur.pop_back();
            used_foreign &= ~(1u << f);
        }
    };
    rec(rec, 0);
    return out;
}

// Grid of free message powers; the last message absorbs the residual.
inline std::vector<double> oracle_power_grid(double pbar, const GaussOracleOptions& opt) {
    std::vector<double> g{0.0};
    const double hi_db = lin_to_db(pbar);
    for (double db = opt.grid_floor_db; db < hi_db; db += opt.grid_step_db)
        g.push_back(db_to_lin(db));
    g.push_back(pbar);
    return g;
}

// Power tuples for one user: the l-1 weaker messages take grid values (they
// need the log resolution), the strongest message absorbs the residual.
inline std::vector<std::vector<double>> power_tuples(double pbar, int l,
                                                     const GaussOracleOptions& opt) {
    std::vector<std::vector<double>> out;
    if (l == 1) {
        out.push_back({pbar});
        return out;
    }
    const auto grid = oracle_power_grid(pbar, opt);
    std::vector<double> cur(l, 0.0);
    auto rec = [&](auto&& self, int idx, double used) -> void {
        if (idx == 0) {
            cur[0] = pbar - used; // residual, nonnegative by construction
            out.push_back(cur);
            return;
        }
        for (double p : grid) {
            if (used + p > pbar * (1 + 1e-12)) break;
            cur[idx] = p;
            self(self, idx - 1, used + p);
        }
    };
    rec(rec, l - 1, 0.0);
    return out;
}

// Allocation-free evaluation of one (orders, powers) combination.
inline double eval_combo(const GaussianChannel& ch, const std::vector<MsgRef>& o1,
                         const std::vector<MsgRef>& o2, const std::vector<double>& p1,
                         const std::vector<double>& p2) {
    double rate1[3], rate2[3];
    for (size_t i = 0; i < p1.size(); ++i) rate1[i] = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < p2.size(); ++i) rate2[i] = std::numeric_limits<double>::infinity();
    for (int rx = 1; rx <= 2; ++rx) {
        const auto& order = rx == 1 ? o1 : o2;
        const double gu1 = rx == 1 ? ch.g11 : ch.g12;
        const double gu2 = rx == 1 ? ch.g21 : ch.g22;
        const double noise = rx == 1 ? ch.n1 : ch.n2;
        double residual = noise;
        for (double p : p1) residual += gu1 * p;
        for (double p : p2) residual += gu2 * p;
        for (const auto& m : order) {
            const double p = m.user == 1 ? gu1 * p1[m.index] : gu2 * p2[m.index];
            residual -= p;
            const double bound = log2p1(p / residual);
            auto& r = (m.user == 1 ? rate1 : rate2)[m.index];
            r = std::min(r, bound);
        }
    }
    double sum = 0.0;
    for (size_t i = 0; i < p1.size(); ++i) sum += std::isinf(rate1[i]) ? 0.0 : rate1[i];
    for (size_t i = 0; i < p2.size(); ++i) sum += std::isinf(rate2[i]) ? 0.0 : rate2[i];
    return sum;
}

} // namespace detail

// Best sum-rate over all decoding-order pairs and gridded power splits with
// l1/l2 messages per user. Approximate in power (grid) but exhaustive in the
// combinatorial part.
inline GaussOracleResult gauss_exhaustive(const GaussianChannel& ch, int l1, int l2,
                                          const GaussOracleOptions& opt = {}) {
    ch.check();
    if (l1 < 1 || l1 > 3 || l2 < 1 || l2 > 3)
        throw std::domain_error("gauss oracle: 1 <= l1, l2 <= 3");
    const auto t0 = std::chrono::steady_clock::now();

    const auto orders1 = detail::receiver_orders(1, l1, l2);
    const auto orders2 = detail::receiver_orders(2, l2, l1);
    const auto tuples1 = detail::power_tuples(ch.p1bar, l1, opt);
    const auto tuples2 = detail::power_tuples(ch.p2bar, l2, opt);

    const unsigned long long combos = (unsigned long long)orders1.size() * orders2.size() *
                                      tuples1.size() * tuples2.size();
    if (combos > opt.budget)
        throw resource_error("gauss oracle: combination count exceeds the budget");

    const size_t pairs = orders1.size() * orders2.size();
    const int workers = std::max(1, opt.workers);
    struct Best {
        double sum = -1.0;
        size_t pair = 0, t1 = 0, t2 = 0;
    };
    std::vector<Best> partial(workers);
    std::vector<unsigned long long> counts(workers, 0);
    auto work = [&](int w) {
        Best b;
        unsigned long long n = 0;
        for (size_t pair = pairs * w / workers; pair < pairs * (w + 1) / workers; ++pair) {
            const auto& o1 = orders1[pair / orders2.size()];
            const auto& o2 = orders2[pair % orders2.size()];
            for (size_t i = 0; i < tuples1.size(); ++i) {
                for (size_t j = 0; j < tuples2.size(); ++j) {
                    const double sum = detail::eval_combo(ch, o1, o2, tuples1[i], tuples2[j]);
                    ++n;
                    if (sum > b.sum) b = {sum, pair, i, j};
                }
            }
        }
        partial[w] = b;
        counts[w] = n;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    Best best;
    GaussOracleResult res;
    for (int w = 0; w < workers; ++w) {
        res.evaluated += counts[w];
        const Best& b = partial[w];
        if (b.sum > best.sum ||
            (b.sum == best.sum && std::tie(b.pair, b.t1, b.t2) < std::tie(best.pair, best.t1, best.t2)))
            best = b;
    }
    res.best_sum = best.sum;
    res.best_scheme.powers1 = tuples1[best.t1];
    res.best_scheme.powers2 = tuples2[best.t2];
    res.best_scheme.order1 = orders1[best.pair / orders2.size()];
    res.best_scheme.order2 = orders2[best.pair % orders2.size()];
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace sdcap

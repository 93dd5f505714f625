#pragma once

#include <vector>

#include "sdcap/bounds.hpp"
#include "sdcap/translate.hpp"

namespace sdcap {

// Sweep data behind the plot-data CLI commands. Everything here is a
// deterministic function of its inputs: fixed grids, no randomness, rows
// ordered by the sweep variable.

struct AlphaSweepRow {
    double alpha = 0.0;
    double alg1_bits = 0.0;    // simple translation
    double alg2_bits = 0.0;    // equalizing translation
    double single_bits = 0.0;  // best single-message scheme
    double ub1_bits = 0.0;
    double ub2_bits = 0.0;
    double min_ub_bits = 0.0;
};

inline AlphaSweepRow alpha_sweep_point(double snr_db, double alpha, double baseline_step_db = 0.1) {
    const auto ch = GaussianChannel::from_snr_alpha(snr_db, alpha);
    AlphaSweepRow row;
    row.alpha = alpha;
    row.alg1_bits = translate_simple(ch).achieved_sum_bits;
    row.alg2_bits = translate_equalizing(ch).achieved_sum_bits;
    row.single_bits = single_message_baseline(ch, baseline_step_db).sum_bits;
    const auto b = combined_bound(ch);
    row.ub1_bits = b.opt1.value_bits;
    row.ub2_bits = b.opt2.value_bits;
    row.min_ub_bits = b.combined_bits;
    return row;
}

inline std::vector<AlphaSweepRow> alpha_sweep(double snr_db, double alpha_lo = 0.5,
                                              double alpha_hi = 1.0, double step = 0.005,
                                              double baseline_step_db = 0.1) {
    std::vector<AlphaSweepRow> rows;
    const int count = (int)std::floor((alpha_hi - alpha_lo) / step + 0.5) + 1;
    for (int i = 0; i < count; ++i) {
        const double alpha = std::min(alpha_lo + i * step, alpha_hi);
        rows.push_back(alpha_sweep_point(snr_db, alpha, baseline_step_db));
    }
    return rows;
}

// Crossover of the two upper bounds, located by sign change + linear
// interpolation on the sweep grid; NaN when the difference never flips.
inline double bound_crossover_alpha(const std::vector<AlphaSweepRow>& rows) {
    for (size_t i = 1; i < rows.size(); ++i) {
        const double d0 = rows[i - 1].ub1_bits - rows[i - 1].ub2_bits;
        const double d1 = rows[i].ub1_bits - rows[i].ub2_bits;
        if (d0 > 0.0 && d1 <= 0.0) {
            const double t = d0 / (d0 - d1);
            return rows[i - 1].alpha + t * (rows[i].alpha - rows[i - 1].alpha);
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

struct SplitSweepRow {
    double qp_db = 0.0;
    double hk_bits = 0.0;
    double sd_bits = 0.0;
};

struct SplitSweepSummary {
    double hk_max_bits = 0.0, hk_argmax_qp_db = 0.0;
    double sd_max_bits = 0.0, sd_argmax_qp_db = 0.0;
};

// Symmetric-split sweep of the private power: joint-decoding vs successive
// decoding sums as a function of qp (dB relative to the noise floor). The
// upper limit defaults to the full budget.
inline std::pair<std::vector<SplitSweepRow>, SplitSweepSummary>
split_sweep(const GaussianChannel& ch, double qp_lo_db = -30.0,
            double qp_hi_db = std::numeric_limits<double>::quiet_NaN(), double step_db = 0.1) {
    ch.check();
    if (!ch.symmetric()) throw std::domain_error("split sweep: symmetric channel required");
    if (std::isnan(qp_hi_db)) qp_hi_db = lin_to_db(ch.p1bar * ch.g11 / ch.n1);
    std::vector<SplitSweepRow> rows;
    SplitSweepSummary sum;
    sum.hk_max_bits = sum.sd_max_bits = -1.0;
    const int count = (int)std::floor((qp_hi_db - qp_lo_db) / step_db + 0.5) + 1;
    for (int i = 0; i < count; ++i) {
        const double qp_db = qp_lo_db + i * step_db;
        const double qp = std::min(db_to_lin(qp_db) * ch.n1 / ch.g11, ch.p1bar);
        const auto split = HkPowerSplit::symmetric(ch, qp);
        SplitSweepRow row{qp_db, hk_region_sum(ch, split), sd_two_message_sum(ch, split)};
        rows.push_back(row);
        if (row.hk_bits > sum.hk_max_bits) {
            sum.hk_max_bits = row.hk_bits;
            sum.hk_argmax_qp_db = qp_db;
        }
        if (row.sd_bits > sum.sd_max_bits) {
            sum.sd_max_bits = row.sd_bits;
            sum.sd_argmax_qp_db = qp_db;
        }
    }
    return {rows, sum};
}

struct SnrSweepRow {
    double snr_db = 0.0;
    double sd_low_bits = 0.0;      // equalizing translation at alpha_gap1
    double single_low_bits = 0.0;  // single-message baseline at alpha_gap1
    double hk_high_bits = 0.0;     // split-sweep HK maximum at alpha_gap2
    double sd_high_bits = 0.0;     // equalizing translation at alpha_gap2
    double gap_sd_single_bits = 0.0;
    double gap_hk_sd_bits = 0.0;
};

// Growth of the two characteristic gaps with SNR: successive decoding vs the
// best single-message scheme, and joint decoding vs successive decoding.
inline std::vector<SnrSweepRow> snr_sweep(double snr_lo_db, double snr_hi_db, double step_db = 5.0,
                                          double alpha_gap1 = 0.66, double alpha_gap2 = 0.75) {
    std::vector<SnrSweepRow> rows;
    const int count = (int)std::floor((snr_hi_db - snr_lo_db) / step_db + 0.5) + 1;
    for (int i = 0; i < count; ++i) {
        SnrSweepRow row;
        row.snr_db = snr_lo_db + i * step_db;
        const auto ch1 = GaussianChannel::from_snr_alpha(row.snr_db, alpha_gap1);
        row.sd_low_bits = translate_equalizing(ch1).achieved_sum_bits;
        row.single_low_bits = single_message_baseline(ch1).sum_bits;
        const auto ch2 = GaussianChannel::from_snr_alpha(row.snr_db, alpha_gap2);
        row.sd_high_bits = translate_equalizing(ch2).achieved_sum_bits;
        row.hk_high_bits = split_sweep(ch2).second.hk_max_bits;
        row.gap_sd_single_bits = row.sd_low_bits - row.single_low_bits;
        row.gap_hk_sd_bits = row.hk_high_bits - row.sd_high_bits;
        rows.push_back(row);
    }
    return rows;
}

} // namespace sdcap

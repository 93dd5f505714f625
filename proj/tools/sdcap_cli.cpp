// Command-line front end: closed-form deterministic capacities and schemes,
// Gaussian translations and bounds, plot-data sweeps as CSV/JSON, and the
// brute-force oracles.
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "sdcap/det_asymmetric.hpp"
#include "sdcap/json_io.hpp"
#include "sdcap/sweeps.hpp"
#include "sdcap/translate.hpp"

using namespace sdcap;

namespace {

struct OutputOpts {
    std::string path;      // empty: stdout
    std::string format = "csv";
    int precision = 6;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--output", out.path, "write to a file instead of stdout");
    cmd->add_option("--format", out.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", out.precision, "significant digits for numeric output")
        ->check(CLI::Range(3, 17));
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputSink(const OutputOpts& opts) {
        if (!opts.path.empty()) {
            file.open(opts.path);
            if (!file) throw std::runtime_error("cannot open output file: " + opts.path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

json scheme_report(const LevelScheme<double>& s) {
    json j = to_json(s);
    const auto [l1, l2] = message_count(s);
    j["messages_user1"] = l1;
    j["messages_user2"] = l2;
    j["rate_user1"] = s.rate1();
    j["rate_user2"] = s.rate2();
    return j;
}

void emit_json(OutputSink& sink, const json& j) { sink.stream() << j.dump(2) << "\n"; }

GaussianChannel channel_from_cli(const std::optional<double>& snr_db,
                                 const std::optional<double>& alpha, const GaussianChannel& raw,
                                 bool raw_given) {
    if (snr_db && alpha) return GaussianChannel::from_snr_alpha(*snr_db, *alpha);
    if (raw_given) {
        raw.check();
        return raw;
    }
    throw CLI::ValidationError("channel", "give either --snr-db with --alpha or the explicit gains");
}

int run(int argc, char** argv) {
    CLI::App app{"sum-capacity tools for two-user interference channels with successive decoding"};
    app.require_subcommand(1);

    // ---- det-capacity / det-scheme ----
    struct DetArgs {
        std::optional<double> alpha;
        std::optional<double> n11, n22, n12, n21;
        bool curve = false;
        double step = 0.005;
        OutputOpts out;
    } det;
    auto add_det_options = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", det.alpha, "symmetric cross-gain exponent in [0, 1]");
        cmd->add_option("--n11", det.n11, "direct bit levels of user 1");
        cmd->add_option("--n22", det.n22, "direct bit levels of user 2");
        cmd->add_option("--n12", det.n12, "interfering levels at receiver 1");
        cmd->add_option("--n21", det.n21, "interfering levels at receiver 2");
        add_output_opts(cmd, det.out);
    };
    auto* det_capacity = app.add_subcommand("det-capacity",
                                            "constrained sum-capacity in the deterministic model");
    add_det_options(det_capacity);
    det_capacity->add_flag("--curve", det.curve,
                           "emit the R(alpha) curve with the information-theoretic curve");
    det_capacity->add_option("--step", det.step, "alpha grid step for --curve");
    auto* det_scheme = app.add_subcommand("det-scheme", "capacity-achieving activity pattern");
    add_det_options(det_scheme);

    auto run_det = [&](bool scheme_only) {
        OutputSink sink(det.out);
        if (det.curve) {
            sink.stream() << "alpha,r_sym_norm,info_capacity_norm\n";
            const int count = (int)std::floor(1.0 / det.step + 0.5);
            for (int i = 0; i <= count; ++i) {
                const double a = std::min(i * det.step, 1.0);
                write_csv_row(sink.stream(),
                              {a, symmetric_capacity(a), info_symmetric_capacity(a)},
                              det.out.precision);
            }
            return;
        }
        json j;
        if (det.alpha) {
            const double a = *det.alpha;
            j["alpha"] = a;
            j["symmetric_rate"] = symmetric_capacity(a);
            j["sum_rate"] = 2.0 * symmetric_capacity(a);
            j["messages_per_user"] = capacity_achieving_message_count(a);
            j["time_sharing"] = is_time_sharing_point(a);
            if (a > 0.0 && a < 1.0 && (!scheme_only || !is_time_sharing_point(a)))
                j["scheme"] = scheme_report(optimal_symmetric_scheme(a));
        } else if (det.n11 && det.n22 && det.n12 && det.n21) {
            // the analysis assumes n11 >= n22; relabel the users if needed
            const bool users_swapped = *det.n22 > *det.n11;
            const DeterministicChannel<double> ch =
                users_swapped ? DeterministicChannel<double>(*det.n22, *det.n11, *det.n21, *det.n12)
                              : DeterministicChannel<double>(*det.n11, *det.n22, *det.n12, *det.n21);
            const double scale = ch.n11;
            const auto norm = ch.normalized();
            const auto c = classify(norm);
            auto [scheme, sum] = optimal_asym_scheme(norm);
            j["case"] = to_string(c.tag);
            j["shifts_swapped"] = c.shifts_swapped;
            j["users_swapped"] = users_swapped;
            j["normalization_scale"] = scale;
            j["sum_rate_normalized"] = sum;
            j["sum_rate"] = sum * scale;
            j["scheme_normalized"] = scheme_report(scheme);
        } else {
            throw CLI::ValidationError("det-capacity", "need --alpha or all four --nXY levels");
        }
        emit_json(sink, j);
    };
    det_capacity->callback([&] { run_det(false); });
    det_scheme->callback([&] { run_det(true); });

    // ---- translate ----
    struct TrArgs {
        double snr_db = 30.0;
        double alpha = 0.75;
        std::string method = "both";
        OutputOpts out;
    } tr;
    auto* translate = app.add_subcommand("translate",
                                         "translate the deterministic optimum into message powers");
    translate->add_option("--snr-db", tr.snr_db, "symmetric SNR in dB")->required();
    translate->add_option("--alpha", tr.alpha, "log INR / log SNR")->required();
    translate->add_option("--method", tr.method, "simple | equalizing | both")
        ->check(CLI::IsMember({"simple", "equalizing", "both"}));
    add_output_opts(translate, tr.out);
    translate->callback([&] {
        OutputSink sink(tr.out);
        const auto ch = GaussianChannel::from_snr_alpha(tr.snr_db, tr.alpha);
        json j;
        auto report = [&](const TranslationResult& r) {
            json t;
            t["messages"] = r.messages;
            t["achieved_sum_bits"] = r.achieved_sum_bits;
            t["powers"] = r.powers;
            json db = json::array();
            for (double p : r.powers) db.push_back(p > 0 ? lin_to_db(p) : -300.0);
            t["powers_db"] = db;
            t["rates_bits"] = r.rates_bits;
            t["equalization_residual"] = r.equalization_residual;
            t["time_sharing_degenerate"] = r.time_sharing_degenerate;
            return t;
        };
        if (tr.method != "equalizing") j["simple"] = report(translate_simple(ch));
        if (tr.method != "simple") j["equalizing"] = report(translate_equalizing(ch));
        emit_json(sink, j);
    });

    // ---- eval-scheme ----
    struct EvalArgs {
        std::string channel_path, scheme_path;
        OutputOpts out;
    } ev;
    auto* eval_scheme = app.add_subcommand("eval-scheme",
                                           "achievable rates of an explicit scheme (JSON in)");
    eval_scheme->add_option("--channel", ev.channel_path, "channel JSON file")->required();
    eval_scheme->add_option("--scheme", ev.scheme_path, "scheme JSON file")->required();
    add_output_opts(eval_scheme, ev.out);
    eval_scheme->callback([&] {
        std::ifstream chf(ev.channel_path), scf(ev.scheme_path);
        if (!chf) throw std::runtime_error("cannot read " + ev.channel_path);
        if (!scf) throw std::runtime_error("cannot read " + ev.scheme_path);
        const auto ch = gaussian_channel_from_json(json::parse(chf));
        const auto scheme = sd_scheme_from_json(json::parse(scf));
        const auto rates = sd_rates(ch, scheme);
        OutputSink sink(ev.out);
        json j;
        j["rates_user1_bits"] = rates.rates1;
        j["rates_user2_bits"] = rates.rates2;
        j["sum_bits"] = rates.sum;
        emit_json(sink, j);
    });

    // ---- hk-sweep (private-power sweep) ----
    struct HkArgs {
        std::optional<double> snr_db, alpha;
        GaussianChannel raw;
        bool raw_given = false;
        double lo_db = -30.0, hi_db = std::numeric_limits<double>::quiet_NaN(), step_db = 0.1;
        OutputOpts out;
    } hk;
    auto* hk_sweep = app.add_subcommand("hk-sweep",
                                        "joint-decoding vs successive-decoding sum over a "
                                        "symmetric private-power sweep");
    hk_sweep->add_option("--snr-db", hk.snr_db);
    hk_sweep->add_option("--alpha", hk.alpha);
    auto add_raw_channel = [](CLI::App* cmd, GaussianChannel& ch, bool& given) {
        cmd->add_option_function<double>("--g11", [&](double v) { ch.g11 = v; given = true; });
        cmd->add_option_function<double>("--g12", [&](double v) { ch.g12 = v; given = true; });
        cmd->add_option_function<double>("--g21", [&](double v) { ch.g21 = v; given = true; });
        cmd->add_option_function<double>("--g22", [&](double v) { ch.g22 = v; given = true; });
        cmd->add_option_function<double>("--n1", [&](double v) { ch.n1 = v; given = true; });
        cmd->add_option_function<double>("--n2", [&](double v) { ch.n2 = v; given = true; });
        cmd->add_option_function<double>("--pbar1", [&](double v) { ch.p1bar = v; given = true; });
        cmd->add_option_function<double>("--pbar2", [&](double v) { ch.p2bar = v; given = true; });
    };
    add_raw_channel(hk_sweep, hk.raw, hk.raw_given);
    hk_sweep->add_option("--qp-lo-db", hk.lo_db);
    hk_sweep->add_option("--qp-hi-db", hk.hi_db);
    hk_sweep->add_option("--step-db", hk.step_db);
    add_output_opts(hk_sweep, hk.out);
    hk_sweep->callback([&] {
        const auto ch = channel_from_cli(hk.snr_db, hk.alpha, hk.raw, hk.raw_given);
        auto [rows, summary] = split_sweep(ch, hk.lo_db, hk.hi_db, hk.step_db);
        OutputSink sink(hk.out);
        if (hk.out.format == "json") {
            json j;
            j["rows"] = json::array();
            for (const auto& r : rows)
                j["rows"].push_back({{"qp_db", r.qp_db}, {"hk_sum_bits", r.hk_bits}, {"sd_sum_bits", r.sd_bits}});
            j["summary"] = {{"hk_max_bits", summary.hk_max_bits},
                            {"hk_argmax_qp_db", summary.hk_argmax_qp_db},
                            {"sd_max_bits", summary.sd_max_bits},
                            {"sd_argmax_qp_db", summary.sd_argmax_qp_db}};
            emit_json(sink, j);
            return;
        }
        sink.stream() << "qp_db,hk_sum_bits,sd_sum_bits\n";
        for (const auto& r : rows)
            write_csv_row(sink.stream(), {r.qp_db, r.hk_bits, r.sd_bits}, hk.out.precision);
        sink.stream() << "# hk_max_bits=" << format_sig(summary.hk_max_bits, hk.out.precision)
                      << " hk_argmax_qp_db=" << format_sig(summary.hk_argmax_qp_db, hk.out.precision)
                      << " sd_max_bits=" << format_sig(summary.sd_max_bits, hk.out.precision)
                      << " sd_argmax_qp_db=" << format_sig(summary.sd_argmax_qp_db, hk.out.precision)
                      << "\n";
    });

    // ---- sweep-alpha ----
    struct SwAArgs {
        double snr_db = 30.0;
        double lo = 0.5, hi = 1.0, step = 0.005;
        double baseline_step_db = 0.1;
        OutputOpts out;
    } swa;
    auto* sweep_alpha = app.add_subcommand("sweep-alpha",
                                           "achievable sums and upper bounds across alpha");
    sweep_alpha->add_option("--snr-db", swa.snr_db)->required();
    sweep_alpha->add_option("--alpha-lo", swa.lo);
    sweep_alpha->add_option("--alpha-hi", swa.hi);
    sweep_alpha->add_option("--step", swa.step);
    sweep_alpha->add_option("--baseline-step-db", swa.baseline_step_db);
    add_output_opts(sweep_alpha, swa.out);
    sweep_alpha->callback([&] {
        const auto rows = alpha_sweep(swa.snr_db, swa.lo, swa.hi, swa.step, swa.baseline_step_db);
        OutputSink sink(swa.out);
        if (swa.out.format == "json") {
            json j = json::array();
            for (const auto& r : rows)
                j.push_back({{"alpha", r.alpha},
                             {"alg1_bits", r.alg1_bits},
                             {"alg2_bits", r.alg2_bits},
                             {"single_bits", r.single_bits},
                             {"ub1_bits", r.ub1_bits},
                             {"ub2_bits", r.ub2_bits},
                             {"min_ub_bits", r.min_ub_bits}});
            emit_json(sink, j);
            return;
        }
        sink.stream() << "alpha,alg1_bits,alg2_bits,single_bits,ub1_bits,ub2_bits,min_ub_bits\n";
        for (const auto& r : rows)
            write_csv_row(sink.stream(),
                          {r.alpha, r.alg1_bits, r.alg2_bits, r.single_bits, r.ub1_bits, r.ub2_bits,
                           r.min_ub_bits},
                          swa.out.precision);
    });

    // ---- sweep-snr ----
    struct SwSArgs {
        double lo_db = 10.0, hi_db = 90.0, step_db = 5.0;
        double alpha_gap1 = 0.66, alpha_gap2 = 0.75;
        OutputOpts out;
    } sws;
    auto* sweep_snr = app.add_subcommand("sweep-snr", "gap growth against SNR");
    sweep_snr->add_option("--snr-lo-db", sws.lo_db);
    sweep_snr->add_option("--snr-hi-db", sws.hi_db);
    sweep_snr->add_option("--step-db", sws.step_db);
    sweep_snr->add_option("--alpha-gap1", sws.alpha_gap1, "alpha for the SD vs single-message gap");
    sweep_snr->add_option("--alpha-gap2", sws.alpha_gap2, "alpha for the HK vs SD gap");
    add_output_opts(sweep_snr, sws.out);
    sweep_snr->callback([&] {
        const auto rows = snr_sweep(sws.lo_db, sws.hi_db, sws.step_db, sws.alpha_gap1, sws.alpha_gap2);
        OutputSink sink(sws.out);
        if (sws.out.format == "json") {
            json j = json::array();
            for (const auto& r : rows)
                j.push_back({{"snr_db", r.snr_db},
                             {"gap_sd_single_bits", r.gap_sd_single_bits},
                             {"gap_hk_sd_bits", r.gap_hk_sd_bits}});
            emit_json(sink, j);
            return;
        }
        sink.stream() << "snr_db,gap_sd_single_bits,gap_hk_sd_bits\n";
        for (const auto& r : rows)
            write_csv_row(sink.stream(), {r.snr_db, r.gap_sd_single_bits, r.gap_hk_sd_bits},
                          sws.out.precision);
    });

    // ---- bounds ----
    struct BndArgs {
        std::optional<double> snr_db, alpha;
        GaussianChannel raw;
        bool raw_given = false;
        OutputOpts out;
    } bnd;
    auto* bounds_cmd = app.add_subcommand("bounds", "sum-capacity upper bounds");
    bounds_cmd->add_option("--snr-db", bnd.snr_db);
    bounds_cmd->add_option("--alpha", bnd.alpha);
    add_raw_channel(bounds_cmd, bnd.raw, bnd.raw_given);
    add_output_opts(bounds_cmd, bnd.out);
    bounds_cmd->callback([&] {
        const auto ch = channel_from_cli(bnd.snr_db, bnd.alpha, bnd.raw, bnd.raw_given);
        const auto b = combined_bound(ch);
        OutputSink sink(bnd.out);
        json j;
        auto point = [](const BoundPoint& p) {
            return json{{"bits", p.value_bits},
                        {"q1", p.q1},
                        {"q2", p.q2},
                        {"q1_db", p.q1 > 0 ? lin_to_db(p.q1) : -300.0},
                        {"q2_db", p.q2 > 0 ? lin_to_db(p.q2) : -300.0}};
        };
        j["opt1"] = point(b.opt1);
        j["opt2"] = point(b.opt2);
        j["combined_bits"] = b.combined_bits;
        emit_json(sink, j);
    });

    // ---- oracle ----
    struct OrArgs {
        std::optional<int> n11, n22, n12, n21;
        std::optional<int> cap1, cap2;
        bool gauss = false;
        std::optional<double> snr_db, alpha;
        GaussianChannel raw;
        bool raw_given = false;
        int l1 = 1, l2 = 1;
        double grid_step_db = 0.25;
        unsigned long long budget = 20'000'000;
        int workers = 1;
        OutputOpts out;
    } orc;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force search");
    oracle_cmd->add_option("--n11", orc.n11);
    oracle_cmd->add_option("--n22", orc.n22);
    oracle_cmd->add_option("--n12", orc.n12);
    oracle_cmd->add_option("--n21", orc.n21);
    oracle_cmd->add_option("--cap1", orc.cap1, "message cap for user 1");
    oracle_cmd->add_option("--cap2", orc.cap2, "message cap for user 2");
    oracle_cmd->add_flag("--gauss", orc.gauss, "search the Gaussian model instead");
    oracle_cmd->add_option("--snr-db", orc.snr_db);
    oracle_cmd->add_option("--alpha", orc.alpha);
    add_raw_channel(oracle_cmd, orc.raw, orc.raw_given);
    oracle_cmd->add_option("--l1", orc.l1)->check(CLI::Range(1, 3));
    oracle_cmd->add_option("--l2", orc.l2)->check(CLI::Range(1, 3));
    oracle_cmd->add_option("--grid-step-db", orc.grid_step_db);
    oracle_cmd->add_option("--budget", orc.budget, "maximum combinations to score");
    oracle_cmd->add_option("--workers", orc.workers)->check(CLI::Range(1, 256));
    add_output_opts(oracle_cmd, orc.out);
    oracle_cmd->callback([&] {
        OutputSink sink(orc.out);
        if (orc.gauss) {
            const auto ch = channel_from_cli(orc.snr_db, orc.alpha, orc.raw, orc.raw_given);
            GaussOracleOptions o;
            o.grid_step_db = orc.grid_step_db;
            o.budget = orc.budget;
            o.workers = orc.workers;
            const auto r = gauss_exhaustive(ch, orc.l1, orc.l2, o);
            json j;
            j["max_sum_bits"] = r.best_sum;
            j["scheme"] = to_json(r.best_scheme);
            j["evaluated_count"] = r.evaluated;
            j["elapsed_seconds"] = r.elapsed_seconds;
            emit_json(sink, j);
            return;
        }
        if (!(orc.n11 && orc.n22 && orc.n12 && orc.n21))
            throw CLI::ValidationError("oracle", "need all four --nXY levels (or --gauss)");
        const IntChannel ch{*orc.n11, *orc.n22, *orc.n12, *orc.n21};
        DetOracleResult r;
        if (orc.cap1 || orc.cap2) {
            r = det_exhaustive_capped(ch, orc.cap1.value_or(ch.n11), orc.cap2.value_or(ch.n22),
                                      orc.workers);
        } else {
            DetOracleOptions o;
            o.workers = orc.workers;
            o.budget = orc.budget;
            r = det_exhaustive(ch, o);
        }
        emit_json(sink, to_json(ch, r));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit with 2
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

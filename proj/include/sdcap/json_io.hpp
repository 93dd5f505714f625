#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sdcap/det_channel.hpp"
#include "sdcap/gaussian.hpp"
#include "sdcap/oracle.hpp"

namespace sdcap {

using nlohmann::json;

inline json to_json(const LevelScheme<double>& s) {
    json j;
    j["user1"] = json::array();
    j["user2"] = json::array();
    for (const auto& iv : s.user1) j["user1"].push_back({iv.lo, iv.hi});
    for (const auto& iv : s.user2) j["user2"].push_back({iv.lo, iv.hi});
    return j;
}

inline LevelScheme<double> level_scheme_from_json(const json& j) {
    LevelScheme<double> s;
    for (const auto& iv : j.at("user1")) s.user1.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    for (const auto& iv : j.at("user2")) s.user2.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    return s.normalized(default_tol<double>());
}

// Orders serialize as [user, message] pairs with 1-based message numbers.
inline json to_json(const SdScheme& s) {
    json j;
    j["powers_user1"] = s.powers1;
    j["powers_user2"] = s.powers2;
    auto order = [](const std::vector<MsgRef>& o) {
        json a = json::array();
        for (const auto& m : o) a.push_back({m.user, m.index + 1});
        return a;
    };
    j["order_rx1"] = order(s.order1);
    j["order_rx2"] = order(s.order2);
    return j;
}

inline SdScheme sd_scheme_from_json(const json& j) {
    SdScheme s;
    s.powers1 = j.at("powers_user1").get<std::vector<double>>();
    s.powers2 = j.at("powers_user2").get<std::vector<double>>();
    auto order = [](const json& a) {
        std::vector<MsgRef> o;
        for (const auto& m : a) o.push_back({m.at(0).get<int>(), m.at(1).get<int>() - 1});
        return o;
    };
    s.order1 = order(j.at("order_rx1"));
    s.order2 = order(j.at("order_rx2"));
    return s;
}

inline json to_json(const HkPowerSplit& q) {
    return json{{"q1c", q.q1c}, {"q1p", q.q1p}, {"q2c", q.q2c}, {"q2p", q.q2p}};
}

inline HkPowerSplit hk_split_from_json(const json& j) {
    return {j.at("q1c").get<double>(), j.at("q1p").get<double>(), j.at("q2c").get<double>(),
            j.at("q2p").get<double>()};
}

inline json to_json(const GaussianChannel& ch) {
    return json{{"g11", ch.g11}, {"g12", ch.g12}, {"g21", ch.g21}, {"g22", ch.g22},
                {"n1", ch.n1},   {"n2", ch.n2},   {"p1bar", ch.p1bar}, {"p2bar", ch.p2bar}};
}

inline GaussianChannel gaussian_channel_from_json(const json& j) {
    GaussianChannel ch;
    ch.g11 = j.at("g11").get<double>();
    ch.g12 = j.at("g12").get<double>();
    ch.g21 = j.at("g21").get<double>();
    ch.g22 = j.at("g22").get<double>();
    ch.n1 = j.value("n1", 1.0);
    ch.n2 = j.value("n2", 1.0);
    ch.p1bar = j.at("p1bar").get<double>();
    ch.p2bar = j.at("p2bar").get<double>();
    ch.check();
    return ch;
}

inline json to_json(const IntChannel& ch, const DetOracleResult& r) {
    json j;
    j["max_sum"] = r.max_sum;
    json bits1 = json::array(), bits2 = json::array();
    for (int i = 0; i < ch.n11; ++i) bits1.push_back((int)(r.best1 >> i & 1));
    for (int i = 0; i < ch.n22; ++i) bits2.push_back((int)(r.best2 >> i & 1));
    j["scheme"] = {{"user1_levels", bits1}, {"user2_levels", bits2}};
    j["evaluated_count"] = r.evaluated;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

// ---- numeric formatting ----

// Fixed significant-digit rendering so that emitted tables are bit-identical
// across runs.
inline std::string format_sig(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

inline void write_csv_row(std::ostream& os, const std::vector<double>& vals, int precision) {
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ',';
        os << format_sig(vals[i], precision);
    }
    os << '\n';
}

} // namespace sdcap

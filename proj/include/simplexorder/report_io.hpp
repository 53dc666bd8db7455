#pragma once

#include "simplexorder/mc.hpp"
#include "simplexorder/rng_test.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace simplexorder {

//! Locale-independent decimal rendering, 15 significant digits.
inline std::string format_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace detail {

//! Rational components fit int64 for every realistic n; emit a string
//! once they outgrow it (1/n! for n > 20) so the JSON stays lossless.
inline nlohmann::json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

} // namespace detail

inline nlohmann::json to_json(const OrderTestReport& r) {
    return nlohmann::json{
        {"order", std::string(order_name(r.order))},
        {"n", r.group_size_n},
        {"pairs", r.pairs},
        {"successes", r.successes},
        {"p0_num", detail::big_to_json(boost::multiprecision::numerator(r.p0))},
        {"p0_den", detail::big_to_json(boost::multiprecision::denominator(r.p0))},
        {"p_value", r.p_value},
    };
}

inline std::string order_report_csv_header() {
    return "order,n,pairs,successes,p0_num,p0_den,p_value";
}

inline std::string to_csv_row(const OrderTestReport& r) {
    return std::string(order_name(r.order)) + "," + std::to_string(r.group_size_n) +
           "," + std::to_string(r.pairs) + "," + std::to_string(r.successes) + "," +
           boost::multiprecision::numerator(r.p0).str() + "," +
           boost::multiprecision::denominator(r.p0).str() + "," +
           format_decimal(r.p_value);
}

inline nlohmann::json to_json(const Table1Summary& s) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : s.cells)
        cells.push_back({
            {"model", c.model},
            {"order", std::string(order_name(c.order))},
            {"mean_p_value", c.mean_p_value},
            {"std_p_value", c.std_p_value},
            {"reps", c.reps},
        });
    return nlohmann::json{
        {"n", s.group_size_n}, {"pairs", s.pairs},   {"alpha", s.alpha},
        {"reps", s.reps},      {"seed", s.seed.value}, {"cells", cells},
    };
}

inline std::string table1_csv_header() {
    return "model,order,mean_p_value,std_p_value,reps";
}

inline std::string to_csv_rows(const Table1Summary& s) {
    std::string out;
    for (const auto& c : s.cells) {
        out += c.model;
        out += ",";
        out += order_name(c.order);
        out += ",";
        out += format_decimal(c.mean_p_value);
        out += ",";
        out += format_decimal(c.std_p_value);
        out += ",";
        out += std::to_string(c.reps);
        out += "\n";
    }
    return out;
}

inline nlohmann::json to_json(const MaxMeanReport& r) {
    return nlohmann::json{
        {"n", r.group_size_n},
        {"groups", r.groups},
        {"sample_mean", r.sample_mean},
        {"analytic_mean", r.analytic_mean},
        {"std_error", r.std_error},
        {"z", r.z},
    };
}

inline nlohmann::json to_json(const MCEstimate& e) {
    return nlohmann::json{
        {"estimate", e.estimate},
        {"std_error", e.std_error},
        {"samples", e.samples},
        {"seed", e.seed.value},
        {"generator", std::string(e.generator)},
    };
}

} // namespace simplexorder

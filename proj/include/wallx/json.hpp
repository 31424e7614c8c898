#pragma once

// JSON forms of the exact data types. Keys come out sorted (nlohmann's default
// object is a std::map), and nothing time-dependent is written, so output is
// byte-stable. Every *_from_json inverts the matching json_of.

#include <json.hpp>

#include "donaldson.hpp"

namespace wallx {

using Json = nlohmann::json;

inline constexpr const char *kConvention = "positive-leading-term";

inline Json json_of(const Rational &r) { return r.str(); }

inline Rational rational_from_json(const Json &j) { return Rational::parse(j.get<std::string>()); }

// [c0, c1, c2, c3] over the basis 1, s, s^2, s^3
inline Json json_of(const Cyc8 &c)
{
    return Json::array({c[0].str(), c[1].str(), c[2].str(), c[3].str()});
}

inline Cyc8 cyc8_from_json(const Json &j)
{
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("Cyc8 JSON must be an array of four rationals");
    }
    return Cyc8(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3]));
}

inline Json json_of(const QSeries &a)
{
    Json coeffs = Json::array();
    for (const auto &c : a.dense()) {
        coeffs.push_back(json_of(c));
    }
    return {{"unit", kUnit}, {"lo", a.lo()}, {"valid_to", a.valid_to()}, {"coeffs", coeffs}};
}

inline QSeries qseries_from_json(const Json &j)
{
    if (j.at("unit").get<Index>() != kUnit) {
        throw std::invalid_argument("QSeries JSON: unsupported exponent unit");
    }
    std::vector<Cyc8> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(cyc8_from_json(c));
    }
    return QSeries::from_dense(j.at("lo").get<Index>(), coeffs, j.at("valid_to").get<Index>());
}

inline Json json_of(const DeltaTable &t)
{
    Json entries = Json::array();
    for (const auto &[ar, v] : t.entries) {
        entries.push_back({{"a", ar.first}, {"r", ar.second}, {"value", json_of(v)}});
    }
    return {{"xi_sq", t.xi_sq}, {"sigma", t.sigma}, {"degree_cap", t.degree_cap}, {"trunc", t.trunc},
            {"entries", entries}};
}

inline DeltaTable delta_table_from_json(const Json &j)
{
    DeltaTable t{j.at("xi_sq").get<long>(), j.at("sigma").get<int>(), j.at("degree_cap").get<int>(),
                 j.at("trunc").get<Index>(), {}};
    for (const auto &e : j.at("entries")) {
        t.entries[{e.at("a").get<int>(), e.at("r").get<int>()}] = cyc8_from_json(e.at("value"));
    }
    return t;
}

inline Json json_of(const InvariantTable &t)
{
    Json entries = Json::array();
    for (const auto &[Nr, v] : t.entries) {
        entries.push_back({{"N", Nr.first}, {"r", Nr.second}, {"value", json_of(v)}});
    }
    return {{"c1", c1_name(t.c1)}, {"max_degree", t.max_degree}, {"trunc", t.trunc},
            {"convention", kConvention}, {"entries", entries}};
}

inline InvariantTable invariant_table_from_json(const Json &j)
{
    std::string c1 = j.at("c1").get<std::string>();
    if (c1 != "H" && c1 != "0") {
        throw std::invalid_argument("InvariantTable JSON: c1 must be \"H\" or \"0\"");
    }
    InvariantTable t{c1 == "H" ? C1::H : C1::Zero, j.at("max_degree").get<int>(), j.at("trunc").get<Index>(), {}};
    for (const auto &e : j.at("entries")) {
        t.entries[{e.at("N").get<int>(), e.at("r").get<int>()}] = rational_from_json(e.at("value"));
    }
    return t;
}

inline Json json_of(const WallClass &w) { return {{"coords", w.coords}, {"xi_sq", w.xi_sq}}; }

inline WallClass wall_from_json(const Json &j)
{
    return {j.at("coords").get<Coords>(), j.at("xi_sq").get<long>()};
}

inline Json json_of(const std::vector<WallClass> &walls)
{
    Json a = Json::array();
    for (const auto &w : walls) {
        a.push_back(json_of(w));
    }
    return a;
}

inline Json json_of(const Report &r)
{
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"checked", c.checked},
                          {"first_failure", c.first_failure ? Json(*c.first_failure) : Json(nullptr)},
                          {"detail", c.detail}});
    }
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

inline Report report_from_json(const Json &j)
{
    Report r{j.at("suite").get<std::string>(), {}};
    for (const auto &c : j.at("checks")) {
        CheckResult cr{c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("checked").get<long>(), {},
                       c.at("detail").get<std::string>()};
        if (!c.at("first_failure").is_null()) {
            cr.first_failure = c.at("first_failure").get<std::int64_t>();
        }
        r.checks.push_back(cr);
    }
    return r;
}

} // namespace wallx

#pragma once

#include <nlohmann/json.hpp>

#include "pkahler/form.hpp"

namespace pkahler {

using json = nlohmann::ordered_json;

/// Textual record {n, entries:[{p,q,I,J,re,im}]} with rationals as
/// decimal-free fraction strings. Entries are emitted in (p,q,I,J)
/// lexicographic order so serialization is canonical and round-trips
/// bit-exactly.
inline json form_to_json(const ExactForm& f) {
    json entries = json::array();
    for (const auto& [d, comp] : f.components()) {
        for (const auto& [key, c] : comp) {
            json e;
            e["p"] = d.first;
            e["q"] = d.second;
            e["I"] = key.first;
            e["J"] = key.second;
            e["re"] = to_fraction_string(c.re);
            e["im"] = to_fraction_string(c.im);
            entries.push_back(std::move(e));
        }
    }
    json out;
    out["n"] = f.dimension();
    out["entries"] = std::move(entries);
    return out;
}

inline ExactForm form_from_json(const json& j) {
    ExactForm f(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
        MultiIndex I = e.at("I").get<MultiIndex>();
        MultiIndex J = e.at("J").get<MultiIndex>();
        if (static_cast<int>(I.size()) != e.at("p").get<int>() ||
            static_cast<int>(J.size()) != e.at("q").get<int>())
            throw std::invalid_argument("form_from_json: bidegree does not match index lengths");
        GaussianRational c(parse_fraction(e.at("re").get<std::string>()),
                           parse_fraction(e.at("im").get<std::string>()));
        f.add_term(std::move(I), std::move(J), std::move(c));
    }
    return f;
}

inline std::string form_to_string(const ExactForm& f) { return form_to_json(f).dump(); }

inline ExactForm form_from_string(const std::string& s) {
    return form_from_json(json::parse(s));
}

/// Float forms are reported with plain doubles; used in reports only, never
/// parsed back.
inline json numeric_form_to_json(const NumericForm& f) {
    json entries = json::array();
    for (const auto& [d, comp] : f.components()) {
        for (const auto& [key, c] : comp) {
            json e;
            e["p"] = d.first;
            e["q"] = d.second;
            e["I"] = key.first;
            e["J"] = key.second;
            e["re"] = c.real();
            e["im"] = c.imag();
            entries.push_back(std::move(e));
        }
    }
    json out;
    out["n"] = f.dimension();
    out["entries"] = std::move(entries);
    return out;
}

}  // namespace pkahler

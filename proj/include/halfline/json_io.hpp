#pragma once
#include <json.hpp>

#include "asymptotics.hpp"
#include "dfinite.hpp"
#include "guessing.hpp"
#include "parse.hpp"
#include "walks.hpp"

// JSON views of the domain types. All rationals are "p/q" strings (plain "p"
// when the denominator is 1) — never floats; the only decimal fields are the
// ones estimate_constant defines that way. Insertion order is fixed, so
// serializations are deterministic and round-trip byte-identically.
namespace halfline {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& r) { return r.str(); }

// Laurent polynomial as an exponent -> coefficient object, ascending.
inline Json json_of(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
    return j;
}

inline Json json_of(const SeriesT& s) {
    Json coeffs = Json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(json_of(s.coeff(n)));
    return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline Json json_of(const CountTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r = Json::object();
        for (const auto& [pos, cnt] : row) r[std::to_string(pos)] = cnt.str();
        rows.push_back(std::move(r));
    }
    return Json{{"max_len", t.max_len}, {"rows", rows}};
}

// Dense ascending coefficient list.
inline Json json_of(const UniPoly& p) {
    Json j = Json::array();
    for (int e = 0; e <= p.deg(); ++e) j.push_back(p.coeff(e).str());
    return j;
}

inline Json json_of(const LinODE& l) {
    Json coeffs = Json::array();
    for (const auto& p : l.coeffs) coeffs.push_back(json_of(p));
    return Json{{"order", l.order()}, {"coeffs", coeffs}, {"inhomogeneous", json_of(l.inhom)}};
}

inline Json json_of(const PRec& r) {
    Json coeffs = Json::array();
    for (const auto& p : r.coeffs) coeffs.push_back(json_of(p));
    return Json{{"order", r.order()}, {"coeffs", coeffs}};
}

// Trivariate polynomial as a term list in the internal canonical order.
inline Json json_of(const TriPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(Json{{"x", m.x}, {"t", m.t}, {"y", m.y}, {"coeff", c.str()}});
    return terms;
}

inline Json json_of(const AsympExpansion& e) {
    Json c = Json::array();
    for (const auto& ck : e.c) c.push_back(ck.str());
    return Json{{"phi", e.phi.str()}, {"alpha", e.alpha.str()}, {"c", c}};
}

inline Json json_of(const ConstantEstimate& e) {
    return Json{{"estimate", e.estimate}, {"bracket", e.bracket}, {"precision", e.precision}};
}

// Inverse mappings for the types the CLI can also consume.
inline UniPoly unipoly_from_json(const Json& j) {
    UniPoly p;
    int e = 0;
    for (const auto& c : j) p.set_coeff(e++, parse_rational(c.get<std::string>()));
    return p;
}

inline LinODE linode_from_json(const Json& j) {
    LinODE l;
    for (const auto& c : j.at("coeffs")) l.coeffs.push_back(unipoly_from_json(c));
    l.inhom = unipoly_from_json(j.at("inhomogeneous"));
    return l;
}

inline PRec prec_from_json(const Json& j) {
    PRec r;
    for (const auto& c : j.at("coeffs")) r.coeffs.push_back(unipoly_from_json(c));
    return r;
}

inline TriPoly tripoly_from_json(const Json& j) {
    TriPoly p;
    for (const auto& term : j)
        p.add_term({term.at("x").get<int>(), term.at("t").get<int>(), term.at("y").get<int>()},
                   parse_rational(term.at("coeff").get<std::string>()));
    return p;
}

inline AsympExpansion expansion_from_json(const Json& j) {
    AsympExpansion e;
    e.phi = parse_rational(j.at("phi").get<std::string>());
    e.alpha = parse_rational(j.at("alpha").get<std::string>());
    for (const auto& c : j.at("c")) e.c.push_back(parse_rational(c.get<std::string>()));
    return e;
}

} // namespace halfline

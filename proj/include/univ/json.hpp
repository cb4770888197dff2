#pragma once

// JSON encodings:
//   Poly:         [{"exps": [["c2", 1], ["h", 1]], "coeff": "3/2"}, ...] in canonical term order
//   Series:       {"var": "z", "low": n0, "trunc": T, "coeffs": [Poly, ...]}
//   DiffOp:       {"shift": w, "horizon": P, "mult": Poly, "deriv": [{"p": p, "coeff": Poly}, ...]}
//   GrunskyTable: {"maxWeight": N, "entries": [{"n": n, "k": k, "poly": Poly}, ...]}
// Zero derivation components are omitted.

#include "poly.hpp"
#include "schlicht.hpp"
#include "series.hpp"
#include "virasoro.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace univ {

using Json = nlohmann::json;

inline Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::array();
        for (const auto& factor : m.factors()) {
            exps.push_back(Json::array({factor.var.name(), factor.exp}));
        }
        terms.push_back({{"exps", std::move(exps)}, {"coeff", to_string(c)}});
    }
    return terms;
}

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("Poly JSON must be an array of terms");
    }
    std::vector<Poly::Term> terms;
    for (const auto& term : j) {
        std::vector<Monomial::Factor> factors;
        for (const auto& e : term.at("exps")) {
            factors.push_back({Var::parse(e.at(0).get<std::string>()), e.at(1).get<std::uint32_t>()});
        }
        terms.push_back({Monomial::from_factors(std::move(factors)), parse_rational(term.at("coeff").get<std::string>())});
    }
    return Poly::from_terms(std::move(terms));
}

inline Json to_json(const Series& s) {
    Json coeffs = Json::array();
    for (int n = s.low(); n <= s.trunc(); ++n) {
        coeffs.push_back(to_json(s.coeff(n)));
    }
    return {{"var", s.var()}, {"low", s.low()}, {"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

inline Series series_from_json(const Json& j) {
    std::vector<Poly> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.push_back(poly_from_json(c));
    }
    const int low = j.at("low").get<int>();
    const int trunc = j.contains("trunc") ? j.at("trunc").get<int>() : low + static_cast<int>(coeffs.size()) - 1;
    return Series::from_coeffs(low, std::move(coeffs), trunc, j.at("var").get<std::string>());
}

inline Json to_json(const DiffOp& op) {
    Json deriv = Json::array();
    for (int p = 1; p <= op.horizon(); ++p) {
        if (!op.deriv(p).is_zero()) {
            deriv.push_back({{"p", p}, {"coeff", to_json(op.deriv(p))}});
        }
    }
    return {{"shift", op.shift()}, {"horizon", op.horizon()}, {"mult", to_json(op.mult())}, {"deriv", std::move(deriv)}};
}

inline DiffOp diffop_from_json(const Json& j) {
    int horizon = 0;
    for (const auto& d : j.at("deriv")) {
        horizon = std::max(horizon, d.at("p").get<int>());
    }
    if (j.contains("horizon")) {
        horizon = j.at("horizon").get<int>();
    }
    DiffOp op(j.at("shift").get<int>(), horizon);
    op.set_mult(poly_from_json(j.at("mult")));
    for (const auto& d : j.at("deriv")) {
        op.set_deriv(d.at("p").get<int>(), poly_from_json(d.at("coeff")));
    }
    return op;
}

inline Json to_json(const GrunskyTable& t) {
    Json entries = Json::array();
    for (const auto& [key, poly] : t.entries) {
        entries.push_back({{"n", key.first}, {"k", key.second}, {"poly", to_json(poly)}});
    }
    return {{"maxWeight", t.max_weight}, {"entries", std::move(entries)}};
}

inline GrunskyTable grunsky_from_json(const Json& j) {
    GrunskyTable t{j.at("maxWeight").get<int>(), {}};
    for (const auto& e : j.at("entries")) {
        t.entries[{e.at("n").get<long>(), e.at("k").get<long>()}] = poly_from_json(e.at("poly"));
    }
    return t;
}

} // namespace univ
